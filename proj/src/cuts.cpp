#include "crossmin/cuts.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace crossmin {

namespace {

constexpr double kSupportEps = 1e-9;  // arcs below this value cannot help a violation
constexpr double kTightEps = 1e-6;

/// Arc-value digraph restricted to arcs worth traversing.
struct SupportGraph {
    int n = 0;
    std::vector<std::vector<int>> out;  // sorted
    std::vector<std::vector<int>> in;   // sorted
};

SupportGraph build_support(const LOModel& model, const Eigen::VectorXd& x, bool include_fixed,
                           double min_value) {
    SupportGraph g;
    g.n = model.size;
    g.out.resize(static_cast<std::size_t>(g.n));
    g.in.resize(static_cast<std::size_t>(g.n));
    for (int u = 0; u < g.n; ++u) {
        for (int v = 0; v < g.n; ++v) {
            if (u == v) continue;
            const ArcKind k = model.kind(u, v);
            if (k == ArcKind::Absent || k == ArcKind::FixedZero) continue;
            if (k == ArcKind::FixedOne && !include_fixed) continue;
            if (model.arc_value(u, v, x) <= min_value) continue;
            g.out[static_cast<std::size_t>(u)].push_back(v);
            g.in[static_cast<std::size_t>(v)].push_back(u);
        }
    }
    return g;
}

double cycle_value(const LOModel& model, const Eigen::VectorXd& x,
                   const std::vector<std::pair<int, int>>& arcs) {
    double s = 0.0;
    for (const auto& [t, h] : arcs) s += model.arc_value(t, h, x);
    return s;
}

std::vector<std::pair<int, int>> close_cycle(const std::vector<int>& nodes) {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        arcs.emplace_back(nodes[i], nodes[(i + 1) % nodes.size()]);
    }
    return arcs;
}

using CutKey = std::vector<std::pair<int, int>>;

/// Batch-local dedup + collection helper.
struct CutSink {
    const LOModel& model;
    const Eigen::VectorXd& x;
    std::set<CutKey> seen;
    std::vector<Cut> cuts;

    bool add(std::vector<std::pair<int, int>> support, int rhs, bool mobius = false) {
        CutKey key = cut_key(support);
        if (!seen.insert(std::move(key)).second) return false;
        Cut cut = make_cut(model, std::move(support), rhs, x);
        cut.mobius = mobius;
        cuts.push_back(std::move(cut));
        return true;
    }
};

void separate_triangles(const LOModel& model, const Eigen::VectorXd& x, const SupportGraph& g,
                        double eps_viol, CutSink& sink) {
    // Canonical form: the cycle starts at its smallest node.
    for (int u = 0; u < g.n; ++u) {
        for (int v : g.out[static_cast<std::size_t>(u)]) {
            if (v < u) continue;
            const double vu = model.arc_value(u, v, x);
            // w with v->w and w->u: sorted-list intersection
            const auto& a = g.out[static_cast<std::size_t>(v)];
            const auto& b = g.in[static_cast<std::size_t>(u)];
            std::size_t i = 0, j = 0;
            while (i < a.size() && j < b.size()) {
                if (a[i] < b[j]) {
                    ++i;
                } else if (a[i] > b[j]) {
                    ++j;
                } else {
                    const int w = a[i];
                    ++i;
                    ++j;
                    if (w < u || w == v) continue;
                    const double total =
                        vu + model.arc_value(v, w, x) + model.arc_value(w, u, x);
                    if (total > 2.0 + eps_viol) sink.add(close_cycle({u, v, w}), 2);
                }
            }
        }
    }
}

/// DFS for cycles among (near-)integral arcs; each back arc yields a cycle,
/// shortened to the shortest dicycle through that arc by a BFS restricted to
/// the nodes of the discovered cycle.
void separate_integral_cycles(const LOModel& model, const Eigen::VectorXd& x,
                              const Config& cfg, CutSink& sink) {
    SupportGraph g = build_support(model, x, /*include_fixed=*/false, 1.0 - cfg.eps_int);
    const int n = g.n;
    std::vector<int> color(static_cast<std::size_t>(n), 0);  // 0 new, 1 on stack, 2 done
    std::vector<int> parent(static_cast<std::size_t>(n), -1);

    for (int root = 0; root < n; ++root) {
        if (color[static_cast<std::size_t>(root)] != 0) continue;
        // Iterative DFS; frame = (node, next child index).
        std::vector<std::pair<int, std::size_t>> stack;
        stack.emplace_back(root, 0);
        color[static_cast<std::size_t>(root)] = 1;
        while (!stack.empty()) {
            auto& [u, it] = stack.back();
            const auto& outs = g.out[static_cast<std::size_t>(u)];
            if (it >= outs.size()) {
                color[static_cast<std::size_t>(u)] = 2;
                stack.pop_back();
                continue;
            }
            const int v = outs[it++];
            if (color[static_cast<std::size_t>(v)] == 0) {
                parent[static_cast<std::size_t>(v)] = u;
                color[static_cast<std::size_t>(v)] = 1;
                stack.emplace_back(v, 0);
            } else if (color[static_cast<std::size_t>(v)] == 1) {
                // Back arc u->v: tree path v..u plus (u, v) is a dicycle.
                std::vector<int> cyc;
                for (int w = u; w != v; w = parent[static_cast<std::size_t>(w)]) cyc.push_back(w);
                cyc.push_back(v);
                std::reverse(cyc.begin(), cyc.end());  // v ... u
                // BFS from v to u inside the cycle's node set.
                std::set<int> nodes(cyc.begin(), cyc.end());
                std::map<int, int> pred;
                std::queue<int> q;
                q.push(v);
                pred[v] = v;
                while (!q.empty() && pred.find(u) == pred.end()) {
                    const int a = q.front();
                    q.pop();
                    for (int b : g.out[static_cast<std::size_t>(a)]) {
                        if (nodes.count(b) == 0 || pred.count(b)) continue;
                        pred[b] = a;
                        q.push(b);
                    }
                }
                std::vector<int> path;  // u back to v
                for (int w = u;; w = pred[w]) {
                    path.push_back(w);
                    if (w == v) break;
                }
                std::reverse(path.begin(), path.end());  // v ... u, arcs all present
                sink.add(close_cycle(path), static_cast<int>(path.size()) - 1);
                if (static_cast<int>(sink.cuts.size()) >= 2 * cfg.cut_limit) return;
            }
        }
    }
}

/// Fractional separation: for each support arc (u, v), the shortest v->u path
/// under weights 1 - value closes to the most violated dicycle through that
/// arc; violated iff the total weight stays below 1.
void separate_fractional(const LOModel& model, const Eigen::VectorXd& x, const SupportGraph& g,
                         const Config& cfg, CutSink& sink) {
    const int n = g.n;
    std::vector<double> dist(static_cast<std::size_t>(n));
    std::vector<int> pred(static_cast<std::size_t>(n));
    auto weight = [&](int a, int b) {
        return std::clamp(1.0 - model.arc_value(a, b, x), 0.0, 1.0);
    };

    for (int u = 0; u < n; ++u) {
        for (int v : g.out[static_cast<std::size_t>(u)]) {
            const double budget = 1.0 - weight(u, v) - cfg.eps_viol;
            if (budget <= 0.0) continue;
            std::fill(dist.begin(), dist.end(), std::numeric_limits<double>::infinity());
            std::fill(pred.begin(), pred.end(), -1);
            using Item = std::pair<double, int>;
            std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
            dist[static_cast<std::size_t>(v)] = 0.0;
            pq.emplace(0.0, v);
            while (!pq.empty()) {
                const auto [d, a] = pq.top();
                pq.pop();
                if (d > dist[static_cast<std::size_t>(a)] + 1e-12) continue;
                if (a == u || d > budget) break;
                for (int b : g.out[static_cast<std::size_t>(a)]) {
                    if (a == u && b == v) continue;  // do not reuse the closing arc
                    const double nd = d + weight(a, b);
                    if (nd < dist[static_cast<std::size_t>(b)] - 1e-12 && nd <= budget) {
                        dist[static_cast<std::size_t>(b)] = nd;
                        pred[static_cast<std::size_t>(b)] = a;
                        pq.emplace(nd, b);
                    }
                }
            }
            if (dist[static_cast<std::size_t>(u)] <= budget) {
                std::vector<int> path;  // u back to v along pred
                bool ok = true;
                for (int w = u; w != v; w = pred[static_cast<std::size_t>(w)]) {
                    if (w < 0) {
                        ok = false;
                        break;
                    }
                    path.push_back(w);
                    if (path.size() > static_cast<std::size_t>(n)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                path.push_back(v);
                std::reverse(path.begin(), path.end());  // v ... u; closing arc (u, v)
                sink.add(close_cycle(path), static_cast<int>(path.size()) - 1);
                if (static_cast<int>(sink.cuts.size()) >= 2 * cfg.cut_limit) return;
            }
        }
    }
}

void finalize(std::vector<Cut>& cuts, int limit) {
    std::stable_sort(cuts.begin(), cuts.end(),
                     [](const Cut& a, const Cut& b) { return a.violation > b.violation; });
    if (static_cast<int>(cuts.size()) > limit) cuts.resize(static_cast<std::size_t>(limit));
}

}  // namespace

std::vector<std::pair<int, int>> cut_key(const std::vector<std::pair<int, int>>& support) {
    auto key = support;
    std::sort(key.begin(), key.end());
    return key;
}

int support_forward_count(const std::vector<std::pair<int, int>>& support,
                          const std::vector<int>& local_order) {
    std::vector<int> pos;
    int needed = 0;
    for (const auto& [t, h] : support) needed = std::max({needed, t + 1, h + 1});
    pos.assign(static_cast<std::size_t>(std::max(needed, static_cast<int>(local_order.size()))),
               -1);
    for (int p = 0; p < static_cast<int>(local_order.size()); ++p)
        pos[static_cast<std::size_t>(local_order[static_cast<std::size_t>(p)])] = p;
    int count = 0;
    for (const auto& [t, h] : support) {
        if (pos[static_cast<std::size_t>(t)] < pos[static_cast<std::size_t>(h)]) ++count;
    }
    return count;
}

Cut make_cut(const LOModel& model, std::vector<std::pair<int, int>> support, int rhs_support,
             const Eigen::VectorXd& x) {
    Cut cut;
    cut.rhs_support = rhs_support;
    cut.violation = cycle_value(model, x, support) - rhs_support;

    std::map<int, double> coefs;
    double rhs = rhs_support;
    for (const auto& [t, h] : support) {
        switch (model.kind(t, h)) {
            case ArcKind::FreeForward:
                coefs[model.var_of(t, h)] += 1.0;
                break;
            case ArcKind::FreeBackward:
                coefs[model.var_of(t, h)] -= 1.0;
                rhs -= 1.0;
                break;
            case ArcKind::FixedOne:
                rhs -= 1.0;
                break;
            case ArcKind::FixedZero:
                break;
            case ArcKind::Absent:
                throw std::logic_error("cut support uses an absent arc");
        }
    }
    cut.row.rhs = rhs;
    cut.row.coefs.reserve(coefs.size());
    std::uint64_t tag = 1469598103934665603ULL;
    for (const auto& [v, c] : coefs) {
        if (c != 0.0) cut.row.coefs.emplace_back(v, c);
    }
    for (const auto& [t, h] : cut_key(support)) {
        tag = (tag ^ static_cast<std::uint64_t>(t * 8191 + h)) * 1099511628211ULL;
    }
    cut.row.tag = tag;
    cut.support = std::move(support);
    return cut;
}

std::vector<Cut> separate_cycles(const LOModel& model, const Eigen::VectorXd& x,
                                 const Config& cfg) {
    CutSink sink{model, x, {}, {}};
    SupportGraph free_graph = build_support(model, x, /*include_fixed=*/false, kSupportEps);

    separate_triangles(model, x, free_graph, cfg.eps_viol, sink);
    if (sink.cuts.empty()) separate_integral_cycles(model, x, cfg, sink);
    if (sink.cuts.empty()) separate_fractional(model, x, free_graph, cfg, sink);
    if (sink.cuts.empty()) {
        SupportGraph full = build_support(model, x, /*include_fixed=*/true, kSupportEps);
        separate_fractional(model, x, full, cfg, sink);
    }
    finalize(sink.cuts, cfg.cut_limit);
    return sink.cuts;
}

std::vector<Cut> separate_mobius(const LOModel& model, const Eigen::VectorXd& x,
                                 const Config& cfg) {
    // Rungs: small dicycles that are tight (or violated) at x.
    struct Rung {
        std::vector<std::pair<int, int>> arcs;  // sorted
    };
    constexpr int kMaxRungs = 300;
    constexpr int kMaxTriples = 50000;
    constexpr int kMaxLadders = 30;

    SupportGraph g = build_support(model, x, /*include_fixed=*/false, kSupportEps);
    std::vector<Rung> rungs;
    auto consider = [&](std::vector<int> nodes) {
        if (static_cast<int>(rungs.size()) >= kMaxRungs) return;
        auto arcs = close_cycle(nodes);
        const double total = cycle_value(model, x, arcs);
        if (total < static_cast<double>(arcs.size()) - 1.0 - kTightEps) return;
        std::sort(arcs.begin(), arcs.end());
        rungs.push_back({std::move(arcs)});
    };

    for (int u = 0; u < g.n && static_cast<int>(rungs.size()) < kMaxRungs; ++u) {
        for (int v : g.out[static_cast<std::size_t>(u)]) {
            if (v < u) continue;
            for (int w : g.out[static_cast<std::size_t>(v)]) {
                if (w < u || w == v) continue;
                // triangle u -> v -> w -> u
                if (std::binary_search(g.out[static_cast<std::size_t>(w)].begin(),
                                       g.out[static_cast<std::size_t>(w)].end(), u)) {
                    consider({u, v, w});
                }
                // 4-cycles u -> v -> w -> t -> u
                for (int t : g.out[static_cast<std::size_t>(w)]) {
                    if (t < u || t == v || t == w) continue;
                    if (std::binary_search(g.out[static_cast<std::size_t>(t)].begin(),
                                           g.out[static_cast<std::size_t>(t)].end(), u)) {
                        consider({u, v, w, t});
                    }
                }
            }
        }
    }

    // Shared-arc counts between rung pairs; a ladder needs each cyclically
    // adjacent pair to share exactly one arc and no arc to sit in all three.
    const int nr = static_cast<int>(rungs.size());
    auto shared_one = [&](int a, int b, std::pair<int, int>& arc) {
        int count = 0;
        for (const auto& e : rungs[static_cast<std::size_t>(a)].arcs) {
            if (std::binary_search(rungs[static_cast<std::size_t>(b)].arcs.begin(),
                                   rungs[static_cast<std::size_t>(b)].arcs.end(), e)) {
                if (++count > 1) return false;
                arc = e;
            }
        }
        return count == 1;
    };

    CutSink sink{model, x, {}, {}};
    int triples = 0;
    for (int i = 0; i < nr && static_cast<int>(sink.cuts.size()) < kMaxLadders; ++i) {
        for (int j = i + 1; j < nr && static_cast<int>(sink.cuts.size()) < kMaxLadders; ++j) {
            std::pair<int, int> eij;
            if (!shared_one(i, j, eij)) continue;
            for (int k = j + 1; k < nr; ++k) {
                if (++triples > kMaxTriples) return finalize(sink.cuts, kMaxLadders), sink.cuts;
                std::pair<int, int> ejk, eki;
                if (!shared_one(j, k, ejk) || !shared_one(k, i, eki)) continue;
                if (eij == ejk || ejk == eki || eij == eki) continue;  // arc in all three

                std::set<std::pair<int, int>> arc_set;
                for (int r : {i, j, k})
                    arc_set.insert(rungs[static_cast<std::size_t>(r)].arcs.begin(),
                                   rungs[static_cast<std::size_t>(r)].arcs.end());
                std::vector<std::pair<int, int>> arcs(arc_set.begin(), arc_set.end());
                const int rhs = static_cast<int>(arcs.size()) - 2;
                if (cycle_value(model, x, arcs) <= rhs + cfg.eps_viol) continue;

                // Validity gate: enumerate every order of the support nodes.
                std::set<int> node_set;
                for (const auto& [t, h] : arcs) {
                    node_set.insert(t);
                    node_set.insert(h);
                }
                if (node_set.size() > 8) continue;
                std::vector<int> nodes(node_set.begin(), node_set.end());
                std::vector<int> order = nodes;
                bool valid = true;
                do {
                    if (support_forward_count(arcs, order) > rhs) {
                        valid = false;
                        break;
                    }
                } while (std::next_permutation(order.begin(), order.end()));
                if (!valid) continue;

                sink.add(arcs, rhs, /*mobius=*/true);
                if (static_cast<int>(sink.cuts.size()) >= kMaxLadders) break;
            }
        }
    }
    finalize(sink.cuts, kMaxLadders);
    return sink.cuts;
}

}  // namespace crossmin
