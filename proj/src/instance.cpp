#include "crossmin/instance.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace crossmin {

namespace {

// Splits a line into whitespace-separated tokens; tolerates '\r' and trailing blanks.
std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::string tok;
    std::istringstream iss(line);
    while (iss >> tok) tokens.push_back(tok);
    return tokens;
}

bool parse_int(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == tok.size();
}

}  // namespace

Instance make_instance(int n_top, int n_bottom, std::vector<std::pair<int, int>> edges) {
    if (n_top < 0 || n_bottom < 0)
        throw ParseError(ParseError::Kind::MalformedHeader, "MalformedHeader: negative layer size");
    Instance inst;
    inst.n_top = n_top;
    inst.n_bottom = n_bottom;
    inst.adjacency.assign(static_cast<std::size_t>(n_bottom), {});
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size() * 2);
    for (const auto& [u, v] : edges) {
        if (u < 1 || u > n_top)
            throw ParseError(ParseError::Kind::IndexOutOfRange,
                             "IndexOutOfRange: top position " + std::to_string(u));
        if (v < 1 || v > n_bottom)
            throw ParseError(ParseError::Kind::IndexOutOfRange,
                             "IndexOutOfRange: bottom id " + std::to_string(v));
        std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
        if (!seen.insert(key).second)
            throw ParseError(ParseError::Kind::DuplicateEdge,
                             "DuplicateEdge: " + std::to_string(u) + " " + std::to_string(v));
        inst.adjacency[static_cast<std::size_t>(v) - 1].push_back(u);
    }
    inst.edges = std::move(edges);
    for (auto& list : inst.adjacency) std::sort(list.begin(), list.end());
    return inst;
}

Instance parse_instance(std::istream& in) {
    std::string line;
    bool have_header = false;
    long long n_top = 0, n_bottom = 0, n_edges = 0;
    std::vector<std::pair<int, int>> edges;

    while (std::getline(in, line)) {
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens[0][0] == 'c') continue;  // comment line
        if (!have_header) {
            if (tokens.size() != 5 || tokens[0] != "p" || tokens[1] != "ocr" ||
                !parse_int(tokens[2], n_top) || !parse_int(tokens[3], n_bottom) ||
                !parse_int(tokens[4], n_edges) || n_top < 0 || n_bottom < 0 || n_edges < 0)
                throw ParseError(ParseError::Kind::MalformedHeader,
                                 "MalformedHeader: expected 'p ocr <n_top> <n_bottom> <n_edges>'");
            have_header = true;
            edges.reserve(static_cast<std::size_t>(n_edges));
            continue;
        }
        long long u = 0, v = 0;
        if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v))
            throw ParseError(ParseError::Kind::EdgeCountMismatch,
                             "EdgeCountMismatch: malformed edge line '" + line + "'");
        if (static_cast<long long>(edges.size()) == n_edges)
            throw ParseError(ParseError::Kind::EdgeCountMismatch,
                             "EdgeCountMismatch: more than " + std::to_string(n_edges) + " edges");
        if (u < 1 || u > n_top)
            throw ParseError(ParseError::Kind::IndexOutOfRange,
                             "IndexOutOfRange: top endpoint " + std::to_string(u) +
                                 " outside [1," + std::to_string(n_top) + "]");
        if (v <= n_top || v > n_top + n_bottom)
            throw ParseError(ParseError::Kind::IndexOutOfRange,
                             "IndexOutOfRange: bottom endpoint " + std::to_string(v) +
                                 " outside [" + std::to_string(n_top + 1) + "," +
                                 std::to_string(n_top + n_bottom) + "]");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v - n_top));
    }
    if (!have_header)
        throw ParseError(ParseError::Kind::MalformedHeader, "MalformedHeader: missing 'p ocr' line");
    if (static_cast<long long>(edges.size()) != n_edges)
        throw ParseError(ParseError::Kind::EdgeCountMismatch,
                         "EdgeCountMismatch: header promised " + std::to_string(n_edges) +
                             " edges, got " + std::to_string(edges.size()));
    return make_instance(static_cast<int>(n_top), static_cast<int>(n_bottom), std::move(edges));
}

Instance parse_instance(const std::string& text) {
    std::istringstream iss(text);
    return parse_instance(iss);
}

void write_solution(const Instance& instance, const Solution& solution, std::ostream& out) {
    for (int id : solution.ordering.seq) out << (id + instance.n_top) << '\n';
}

std::string solution_to_string(const Instance& instance, const Solution& solution) {
    std::ostringstream oss;
    write_solution(instance, solution, oss);
    return oss.str();
}

bool is_valid_ordering(const Instance& instance, const Ordering& ordering) {
    if (static_cast<int>(ordering.seq.size()) != instance.n_bottom) return false;
    std::vector<bool> seen(static_cast<std::size_t>(instance.n_bottom), false);
    for (int id : ordering.seq) {
        if (id < 1 || id > instance.n_bottom || seen[static_cast<std::size_t>(id) - 1]) return false;
        seen[static_cast<std::size_t>(id) - 1] = true;
    }
    return true;
}

std::int64_t count_crossings(const Instance& instance, const Ordering& ordering) {
    // Inversion counting over the concatenated top-position lists: a crossing
    // is a pair with the earlier bottom node's endpoint strictly to the right
    // of the later one's. A Fenwick tree over top positions does the counting;
    // each node's list is queried in full before insertion so edges sharing a
    // bottom endpoint never pair up.
    std::vector<std::int64_t> tree(static_cast<std::size_t>(instance.n_top) + 1, 0);
    auto add = [&](int pos) {
        for (; pos <= instance.n_top; pos += pos & -pos) ++tree[static_cast<std::size_t>(pos)];
    };
    auto prefix = [&](int pos) {
        std::int64_t s = 0;
        for (; pos > 0; pos -= pos & -pos) s += tree[static_cast<std::size_t>(pos)];
        return s;
    };

    std::int64_t crossings = 0;
    std::int64_t inserted = 0;
    for (int id : ordering.seq) {
        const auto& list = instance.neighbors(id);
        for (int pos : list) crossings += inserted - prefix(pos);  // strictly greater only
        for (int pos : list) add(pos);
        inserted += static_cast<std::int64_t>(list.size());
    }
    return crossings;
}

Solution brute_force_optimum(const Instance& instance) {
    if (instance.n_bottom > 10)
        throw TooLargeError("brute_force_optimum: n_bottom = " + std::to_string(instance.n_bottom) +
                            " exceeds the enumeration guard of 10");

    const int n = instance.n_bottom;
    // Pairwise crossing counts keep the per-permutation cost at O(n^2).
    std::vector<std::int64_t> cost(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            const auto& a = instance.neighbors(i);
            const auto& b = instance.neighbors(j);
            // pairs (u, v) in N(i) x N(j) with u > v
            std::int64_t c = 0;
            std::size_t k = 0;
            for (int u : a) {
                while (k < b.size() && b[k] < u) ++k;
                c += static_cast<std::int64_t>(k);
            }
            cost[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(j - 1)] = c;
        }
    }
    auto c_at = [&](int i, int j) {
        return cost[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n) +
                    static_cast<std::size_t>(j - 1)];
    };

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<int> best = perm;
    std::int64_t best_cost = -1;
    do {
        std::int64_t total = 0;
        for (std::size_t i = 0; i + 1 < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j) total += c_at(perm[i], perm[j]);
        if (best_cost < 0 || total < best_cost) {  // strict: keeps the first (lexicographic) optimum
            best_cost = total;
            best = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    Solution sol;
    sol.ordering.seq = std::move(best);
    sol.crossings = best_cost < 0 ? 0 : best_cost;
    sol.optimal = true;
    return sol;
}

}  // namespace crossmin
