#include "crossmin/reduce.hpp"

#include <algorithm>
#include <queue>

namespace crossmin {

NodeInterval node_interval(const Instance& instance, int bottom_id) {
    NodeInterval iv;
    const auto& nb = instance.neighbors(bottom_id);
    if (nb.empty()) return iv;
    iv.defined = true;
    iv.left = nb.front();
    iv.right = nb.back();
    return iv;
}

ComponentPartition decompose(const Instance& instance) {
    ComponentPartition part;

    struct Group {
        int left;
        int right;
        std::vector<int> members;
    };
    std::vector<Group> groups;

    // Nodes with a nonempty open interval, sorted by left endpoint, merged by
    // sweep: open intervals ]l1,r1[ and ]l2,r2[ with l1 <= l2 overlap iff
    // l2 < r1 strictly.
    std::vector<int> interval_nodes;
    std::vector<std::pair<int, int>> anchors;  // (position, bottom_id), degree-1 nodes
    for (int v = 1; v <= instance.n_bottom; ++v) {
        NodeInterval iv = node_interval(instance, v);
        if (!iv.defined) {
            part.isolated.push_back(v);
        } else if (iv.empty()) {
            anchors.emplace_back(iv.left, v);
        } else {
            interval_nodes.push_back(v);
        }
    }
    std::sort(interval_nodes.begin(), interval_nodes.end(), [&](int a, int b) {
        NodeInterval ia = node_interval(instance, a), ib = node_interval(instance, b);
        if (ia.left != ib.left) return ia.left < ib.left;
        if (ia.right != ib.right) return ia.right < ib.right;
        return a < b;
    });
    for (int v : interval_nodes) {
        NodeInterval iv = node_interval(instance, v);
        if (!groups.empty() && iv.left < groups.back().right) {
            groups.back().right = std::max(groups.back().right, iv.right);
            groups.back().members.push_back(v);
        } else {
            groups.push_back({iv.left, iv.right, {v}});
        }
    }

    // An anchor strictly inside a merged interval has real crossing trade-offs
    // with that component only; elsewhere one side is always crossing-free, so
    // a singleton sorted by anchor position is optimal.
    std::vector<Group> singletons;
    for (auto [p, v] : anchors) {
        Group* host = nullptr;
        int lo = 0, hi = static_cast<int>(groups.size()) - 1;
        while (lo <= hi) {
            int mid = (lo + hi) / 2;
            if (groups[static_cast<std::size_t>(mid)].right <= p) {
                lo = mid + 1;
            } else if (groups[static_cast<std::size_t>(mid)].left >= p) {
                hi = mid - 1;
            } else {
                host = &groups[static_cast<std::size_t>(mid)];
                break;
            }
        }
        if (host != nullptr)
            host->members.push_back(v);
        else
            singletons.push_back({p, p, {v}});
    }

    std::vector<Group> all;
    all.reserve(groups.size() + singletons.size());
    for (auto& g : groups) all.push_back(std::move(g));
    for (auto& g : singletons) all.push_back(std::move(g));
    for (auto& g : all) std::sort(g.members.begin(), g.members.end());
    std::sort(all.begin(), all.end(), [](const Group& a, const Group& b) {
        if (a.left != b.left) return a.left < b.left;
        if (a.right != b.right) return a.right < b.right;
        return a.members.front() < b.members.front();
    });

    for (auto& g : all) {
        part.components.push_back(std::move(g.members));
        part.component_intervals.emplace_back(g.left, g.right);
    }
    return part;
}

namespace {

void verify_fixed_acyclic(const PairClassification& cls) {
    const int n = cls.size;
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            PairStatus s = cls.pair_status(i, j);
            if (s == PairStatus::FixedForward) {
                out[static_cast<std::size_t>(i)].push_back(j);
                ++indeg[static_cast<std::size_t>(j)];
            } else if (s == PairStatus::FixedBackward) {
                out[static_cast<std::size_t>(j)].push_back(i);
                ++indeg[static_cast<std::size_t>(i)];
            }
        }
    }
    std::queue<int> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) ready.push(v);
    int removed = 0;
    while (!ready.empty()) {
        int v = ready.front();
        ready.pop();
        ++removed;
        for (int w : out[static_cast<std::size_t>(v)])
            if (--indeg[static_cast<std::size_t>(w)] == 0) ready.push(w);
    }
    if (removed != n) throw CycleError("CycleDetected: fixed arcs form a directed cycle");
}

}  // namespace

PairClassification classify_pairs(const CrossingMatrix& cm, bool enable_fixing) {
    const int n = cm.size();
    PairClassification cls;
    cls.size = n;
    cls.status.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), PairStatus::Zero);
    cls.a = CountMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const std::int64_t cij = cm.c(i, j);
            const std::int64_t cji = cm.c(j, i);
            cls.a(i, j) = cij - cji;
            PairStatus s;
            if (enable_fixing && cij == 0 && cji > 0) {
                s = PairStatus::FixedForward;
            } else if (enable_fixing && cji == 0 && cij > 0) {
                s = PairStatus::FixedBackward;
            } else if (cij == cji) {
                s = PairStatus::Zero;
            } else {
                s = PairStatus::Free;
            }
            cls.status[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                       static_cast<std::size_t>(j)] = s;
            if (s == PairStatus::Free)
                ++cls.num_free;
            else if (s == PairStatus::Zero)
                ++cls.num_zero;
            else
                ++cls.num_fixed;
        }
    }
    verify_fixed_acyclic(cls);
    return cls;
}

std::vector<int> complete_order(const PartialOrder& po) {
    const int n = po.size;
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
    for (auto [u, v] : po.arcs) {
        out[static_cast<std::size_t>(u)].push_back(v);
        ++indeg[static_cast<std::size_t>(v)];
    }
    // Min-id-first Kahn: deterministic and exactly the Zero-pair tie-break.
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) ready.push(v);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        order.push_back(v);
        for (int w : out[static_cast<std::size_t>(v)])
            if (--indeg[static_cast<std::size_t>(w)] == 0) ready.push(w);
    }
    if (static_cast<int>(order.size()) != n)
        throw CycleError("CycleDetected: precedence arcs admit no topological order");
    return order;
}

Ordering assemble_global(const std::vector<std::vector<int>>& parts,
                         const ComponentPartition& partition) {
    Ordering ord;
    for (const auto& p : parts) ord.seq.insert(ord.seq.end(), p.begin(), p.end());
    ord.seq.insert(ord.seq.end(), partition.isolated.begin(), partition.isolated.end());
    return ord;
}

}  // namespace crossmin
