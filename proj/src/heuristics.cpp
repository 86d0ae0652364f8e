#include "crossmin/heuristics.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <queue>

namespace crossmin {

std::vector<double> barycenters(const Instance& instance, const std::vector<int>& members) {
    std::vector<double> out;
    out.reserve(members.size());
    for (int b : members) {
        const auto& nbrs = instance.neighbors(b);
        if (nbrs.empty()) {
            out.push_back(std::numeric_limits<double>::infinity());
            continue;
        }
        // Neighbor lists hold 1-based top positions already.
        double sum = 0.0;
        for (int u : nbrs) sum += u;
        out.push_back(sum / static_cast<double>(nbrs.size()));
    }
    return out;
}

std::vector<int> barycenter_order(const Instance& instance, const std::vector<int>& members) {
    const std::vector<double> bary = barycenters(instance, members);
    std::vector<int> order(members.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return bary[static_cast<std::size_t>(a)] < bary[static_cast<std::size_t>(b)];
    });
    return order;
}

std::int64_t ordering_crossings(const CrossingMatrix& cm, const std::vector<int>& order) {
    std::int64_t total = 0;
    for (std::size_t p = 0; p < order.size(); ++p) {
        for (std::size_t q = p + 1; q < order.size(); ++q) {
            total += cm.c(order[p], order[q]);
        }
    }
    return total;
}

std::int64_t kl2_improve(const CrossingMatrix& cm, std::vector<int>& order) {
    const int s = static_cast<int>(order.size());
    std::int64_t cost = ordering_crossings(cm, order);
    if (s < 2) return cost;

    auto a = [&](int v, int w) { return cm.c(v, w) - cm.c(w, v); };

    for (;;) {
        // One pass: every node gets its best relocation, id order, applied
        // unconditionally; remember the best prefix to roll back to.
        const std::vector<int> pass_start = order;
        const std::int64_t cost_start = cost;
        std::int64_t best_prefix_cost = cost;
        std::vector<int> best_prefix_order = order;

        for (int v = 0; v < s; ++v) {
            const int p = static_cast<int>(
                std::find(order.begin(), order.end(), v) - order.begin());
            // Walk v leftwards and rightwards, accumulating the flip deltas.
            std::int64_t best_delta = std::numeric_limits<std::int64_t>::max();
            int best_q = p;
            std::int64_t delta = 0;
            for (int q = p - 1; q >= 0; --q) {
                delta += a(v, order[static_cast<std::size_t>(q)]);
                if (delta < best_delta) {
                    best_delta = delta;
                    best_q = q;
                }
            }
            delta = 0;
            for (int q = p + 1; q < s; ++q) {
                delta -= a(v, order[static_cast<std::size_t>(q)]);
                if (delta < best_delta) {
                    best_delta = delta;
                    best_q = q;
                }
            }
            if (best_q == p) continue;  // s == 1 handled above; every other node has a move
            order.erase(order.begin() + p);
            order.insert(order.begin() + best_q, v);
            cost += best_delta;
            if (cost < best_prefix_cost) {
                best_prefix_cost = cost;
                best_prefix_order = order;
            }
        }

        if (best_prefix_cost < cost_start) {
            order = std::move(best_prefix_order);
            cost = best_prefix_cost;
        } else {
            order = pass_start;
            cost = cost_start;
            break;
        }
    }
    assert(cost == ordering_crossings(cm, order));
    return cost;
}

std::vector<int> repair_fixed(const LOModel& model, const std::vector<int>& order) {
    const int s = model.size;
    std::vector<int> pos(static_cast<std::size_t>(s), 0);
    for (int p = 0; p < s; ++p) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] = p;

    std::vector<std::vector<int>> out(static_cast<std::size_t>(s));
    std::vector<int> indeg(static_cast<std::size_t>(s), 0);
    for (const auto& arc : model.fixed_arcs) {
        out[static_cast<std::size_t>(arc.tail)].push_back(arc.head);
        ++indeg[static_cast<std::size_t>(arc.head)];
    }
    // Kahn's algorithm, always releasing the available node that was earliest
    // in the input order.
    using Item = std::pair<int, int>;  // (position, node)
    std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
    for (int v = 0; v < s; ++v) {
        if (indeg[static_cast<std::size_t>(v)] == 0) ready.emplace(pos[static_cast<std::size_t>(v)], v);
    }
    std::vector<int> result;
    result.reserve(static_cast<std::size_t>(s));
    while (!ready.empty()) {
        const int v = ready.top().second;
        ready.pop();
        result.push_back(v);
        for (int w : out[static_cast<std::size_t>(v)]) {
            if (--indeg[static_cast<std::size_t>(w)] == 0)
                ready.emplace(pos[static_cast<std::size_t>(w)], w);
        }
    }
    assert(static_cast<int>(result.size()) == s);  // fixed arcs are acyclic by contract
    return result;
}

std::vector<int> initial_order(const Instance& instance, const CrossingMatrix& cm,
                               const LOModel& model, const Config& cfg) {
    std::vector<int> order = barycenter_order(instance, cm.members);
    if (cm.size() <= cfg.kl2_threshold) kl2_improve(cm, order);
    return repair_fixed(model, order);
}

}  // namespace crossmin
