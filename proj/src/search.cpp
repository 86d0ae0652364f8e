#include "crossmin/search.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <deque>
#include <fstream>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_set>

#include "crossmin/heuristics.hpp"
#include "crossmin/lp.hpp"

namespace crossmin {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct BBNode {
    int parent = -1;
    int depth = 0;
    int var = -1;  ///< branching decision taken at this node (none for the root)
    int val = 0;
    double bound = -kInf;  ///< valid LP lower bound for the subtree (raw, no constant)
    bool open = false;
};

}  // namespace

std::int64_t ceil_eps(double t) { return static_cast<std::int64_t>(std::ceil(t - 1e-6)); }

std::optional<std::vector<int>> check_integral_ordering(const LOModel& model,
                                                        const Eigen::VectorXd& x,
                                                        double eps_int) {
    const int s = model.size;
    std::vector<std::vector<int>> out(static_cast<std::size_t>(s));
    std::vector<int> indeg(static_cast<std::size_t>(s), 0);
    for (std::size_t v = 0; v < model.vars.size(); ++v) {
        const double xv = x[static_cast<Eigen::Index>(v)];
        const auto& var = model.vars[v];
        if (xv >= 1.0 - eps_int) {
            out[static_cast<std::size_t>(var.i)].push_back(var.j);
            ++indeg[static_cast<std::size_t>(var.j)];
        } else if (xv <= eps_int) {
            out[static_cast<std::size_t>(var.j)].push_back(var.i);
            ++indeg[static_cast<std::size_t>(var.i)];
        } else {
            return std::nullopt;  // fractional
        }
    }
    for (const auto& arc : model.fixed_arcs) {
        out[static_cast<std::size_t>(arc.tail)].push_back(arc.head);
        ++indeg[static_cast<std::size_t>(arc.head)];
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int v = 0; v < s; ++v) {
        if (indeg[static_cast<std::size_t>(v)] == 0) ready.push(v);
    }
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(s));
    while (!ready.empty()) {
        const int v = ready.top();
        ready.pop();
        order.push_back(v);
        for (int w : out[static_cast<std::size_t>(v)]) {
            if (--indeg[static_cast<std::size_t>(w)] == 0) ready.push(w);
        }
    }
    if (static_cast<int>(order.size()) != s) return std::nullopt;  // rounded tournament cyclic
    return order;
}

std::vector<int> relaxed_topological_order(const LOModel& model, const Eigen::VectorXd& x) {
    const int s = model.size;
    std::vector<double> in_sum(static_cast<std::size_t>(s), 0.0);
    for (int v = 0; v < s; ++v) {
        for (int u = 0; u < s; ++u) {
            if (u != v) in_sum[static_cast<std::size_t>(v)] += model.arc_value(u, v, x);
        }
    }
    std::vector<char> placed(static_cast<std::size_t>(s), 0);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(s));
    for (int step = 0; step < s; ++step) {
        int pick = -1;
        for (int v = 0; v < s; ++v) {
            if (placed[static_cast<std::size_t>(v)]) continue;
            if (pick < 0 || in_sum[static_cast<std::size_t>(v)] <
                                in_sum[static_cast<std::size_t>(pick)] - 1e-12) {
                pick = v;
            }
        }
        placed[static_cast<std::size_t>(pick)] = 1;
        order.push_back(pick);
        for (int w = 0; w < s; ++w) {
            if (!placed[static_cast<std::size_t>(w)])
                in_sum[static_cast<std::size_t>(w)] -= model.arc_value(pick, w, x);
        }
    }
    // The greedy rule favors but does not guarantee fixed-arc consistency;
    // the repair pass makes it a hard guarantee.
    return repair_fixed(model, order);
}

ComponentResult solve_component(const LOModel& model, const std::vector<int>& initial_order,
                                const Config& cfg, StopToken* stop,
                                const CutObserver& observer) {
    ComponentResult result;
    result.order = initial_order;
    result.crossings = model.ordering_cost(initial_order);

    if (model.vars.empty()) {
        // Nothing to decide: only fixed and order-insensitive pairs.
        result.optimal = true;
        result.lower_bound = result.crossings;
        result.lower_raw = static_cast<double>(result.crossings);
        return result;
    }

    const int num_vars = static_cast<int>(model.vars.size());
    std::vector<double> costs(static_cast<std::size_t>(num_vars));
    double trivial_bound = 0.0;  // box relaxation: every negative cost at 1
    for (int v = 0; v < num_vars; ++v) {
        costs[static_cast<std::size_t>(v)] = model.vars[static_cast<std::size_t>(v)].cost;
        trivial_bound += std::min(0.0, costs[static_cast<std::size_t>(v)]);
    }

    BoundedSimplex lp(num_vars, costs, cfg);
    std::int64_t upper = result.crossings;
    const double constant = static_cast<double>(model.constant);

    std::vector<BBNode> nodes;
    nodes.push_back({-1, 0, -1, 0, trivial_bound, true});
    std::vector<int> dfs_stack{0};
    std::unordered_set<std::uint64_t> pool_tags;
    double leaf_raw_min = kInf;  // over closed leaves, constant included
    std::int64_t ledger_lower = std::numeric_limits<std::int64_t>::min();
    bool stopped = false;
    bool first_solve = true;
    SearchStats& st = result.stats;

    auto record_leaf = [&](double raw_bound) {
        leaf_raw_min = std::min(leaf_raw_min, raw_bound + constant);
    };

    auto open_min_bound = [&](double also) {
        double m = also;
        for (const auto& n : nodes) {
            if (n.open) m = std::min(m, n.bound);
        }
        return m;
    };

    auto push_trace = [&](int id, double lp_value, double active_bound) {
        const double raw = open_min_bound(active_bound);
        std::int64_t cand = ceil_eps(raw) + model.constant;
        cand = std::min(cand, upper);
        ledger_lower = std::max(ledger_lower, cand);
        result.trace.push_back({id, lp_value, ledger_lower, upper});
    };

    auto prune_open = [&]() {
        for (auto& n : nodes) {
            if (n.open && ceil_eps(n.bound) + model.constant >= upper) {
                n.open = false;
                record_leaf(n.bound);
            }
        }
    };

    auto try_incumbent = [&](const std::vector<int>& order) {
        const std::int64_t cost = model.ordering_cost(order);
        if (cost < upper) {
            upper = cost;
            result.order = order;
            result.crossings = cost;
            prune_open();
            return true;
        }
        return false;
    };

    auto apply_node = [&](int id) {
        for (int v = 0; v < num_vars; ++v) lp.set_bounds(v, 0.0, 1.0);
        for (int cur = id; cur > 0; cur = nodes[static_cast<std::size_t>(cur)].parent) {
            const auto& n = nodes[static_cast<std::size_t>(cur)];
            lp.set_bounds(n.var, n.val, n.val);
        }
    };

    auto select_next = [&]() {
        while (!dfs_stack.empty() && !nodes[static_cast<std::size_t>(dfs_stack.back())].open)
            dfs_stack.pop_back();
        int best = -1;
        for (int id = 0; id < static_cast<int>(nodes.size()); ++id) {
            if (!nodes[static_cast<std::size_t>(id)].open) continue;
            if (best < 0 ||
                nodes[static_cast<std::size_t>(id)].bound < nodes[static_cast<std::size_t>(best)].bound)
                best = id;
        }
        if (best < 0) return -1;
        // Plunge into the most recent child while its bound is within the
        // optimality-gap unit of the global best bound.
        if (!dfs_stack.empty()) {
            const int cand = dfs_stack.back();
            if (nodes[static_cast<std::size_t>(cand)].bound -
                    nodes[static_cast<std::size_t>(best)].bound < 1.0)
                return cand;
        }
        return best;
    };

    auto solve_lp = [&](bool primal_ok) {
        const LpStatus s = primal_ok ? lp.solve() : lp.resolve_dual();
        ++st.lp_solves;
        if (s == LpStatus::Optimal) lp.age_rows();
        return s;
    };

    while (!stopped) {
        if (stop && stop->stop_requested()) {
            stopped = true;
            break;
        }
        const int sel = select_next();
        if (sel < 0) break;
        nodes[static_cast<std::size_t>(sel)].open = false;
        ++st.nodes;
        st.max_depth = std::max(st.max_depth, nodes[static_cast<std::size_t>(sel)].depth);

        apply_node(sel);
        LpStatus status = solve_lp(first_solve);
        first_solve = false;

        std::deque<double> window;
        bool mobius_fired = false;
        int tail_after_mobius = 0;
        bool branch_now = false;
        Eigen::VectorXd x;

        for (;;) {
            if (stop && stop->stop_requested()) {
                stopped = true;
                // Still open as far as the certificate is concerned.
                nodes[static_cast<std::size_t>(sel)].open = true;
                break;
            }
            if (status == LpStatus::Infeasible) break;  // leaf with no reachable point

            const double bound = lp.objective();
            auto& node = nodes[static_cast<std::size_t>(sel)];
            node.bound = std::max(node.bound, bound);
            push_trace(sel, bound, node.bound);

            if (ceil_eps(node.bound) + model.constant >= upper) {
                record_leaf(node.bound);
                break;
            }

            x = lp.solution();
            if (auto integral = check_integral_ordering(model, x, cfg.eps_int)) {
                try_incumbent(*integral);
                record_leaf(node.bound);  // LP optimum is integral: node solved
                break;
            }
            if (try_incumbent(relaxed_topological_order(model, x)) &&
                ceil_eps(node.bound) + model.constant >= upper) {
                record_leaf(node.bound);
                break;
            }

            window.push_back(bound);
            if (static_cast<int>(window.size()) > cfg.tail_window) window.pop_front();
            const bool tailing =
                static_cast<int>(window.size()) == cfg.tail_window &&
                window.back() - window.front() < cfg.tail_eps * std::max(1.0, std::abs(bound));

            std::vector<Cut> cuts = separate_cycles(model, x, cfg);
            bool fired_this_round = false;
            if ((tailing || cuts.empty()) && !mobius_fired) {
                std::vector<Cut> ladders = separate_mobius(model, x, cfg);
                for (auto& c : ladders) cuts.push_back(std::move(c));
                mobius_fired = true;
                fired_this_round = true;
            }

            std::vector<LpRow> rows;
            rows.reserve(cuts.size());
            for (auto& cut : cuts) {
                if (!pool_tags.insert(cut.row.tag).second) continue;
                if (observer) observer(model, cut);
                if (cut.mobius) {
                    ++st.cuts_mobius;
                } else {
                    ++st.cuts_cycle;
                }
                rows.push_back(std::move(cut.row));
            }

            if (rows.empty()) {
                branch_now = true;  // nothing left to cut with
                break;
            }
            if (tailing && mobius_fired && !fired_this_round && ++tail_after_mobius >= 2) {
                branch_now = true;  // cuts exist but the bound has flatlined
                // Add them anyway so siblings inherit the pool, then branch.
            }

            // Expire rows that have been slack for age_limit consecutive solves.
            std::vector<std::uint64_t> dead;
            for (int r = 0; r < lp.num_rows(); ++r) {
                if (lp.row(r).age >= cfg.age_limit) dead.push_back(lp.row(r).tag);
            }
            if (!dead.empty()) {
                st.rows_deleted += lp.delete_rows(
                    [&](const LpRow& row) { return row.age >= cfg.age_limit; });
                for (std::uint64_t t : dead) pool_tags.erase(t);
            }

            lp.add_rows(std::move(rows));
            status = solve_lp(false);
            if (branch_now) {
                if (status == LpStatus::Infeasible) {
                    branch_now = false;
                    break;
                }
                const double b2 = lp.objective();
                auto& nd = nodes[static_cast<std::size_t>(sel)];
                nd.bound = std::max(nd.bound, b2);
                push_trace(sel, b2, nd.bound);
                x = lp.solution();
                if (auto integral = check_integral_ordering(model, x, cfg.eps_int)) {
                    try_incumbent(*integral);
                    record_leaf(nd.bound);
                    branch_now = false;
                } else if (ceil_eps(nd.bound) + model.constant >= upper) {
                    record_leaf(nd.bound);
                    branch_now = false;
                }
                break;
            }
        }

        if (stopped) break;

        if (branch_now) {
            // Most fractional variable, ties to the smaller index.
            int bv = -1;
            double bdist = kInf;
            for (int v = 0; v < num_vars; ++v) {
                if (lp.upper_bound(v) - lp.lower_bound(v) < 1e-12) continue;
                const double d = std::abs(x[v] - 0.5);
                if (d < bdist - 1e-12) {
                    bdist = d;
                    bv = v;
                }
            }
            if (bv < 0) throw std::logic_error("branch requested with no fractional variable");
            const auto& parent = nodes[static_cast<std::size_t>(sel)];
            const double pb = parent.bound;
            const int pd = parent.depth;
            nodes.push_back({sel, pd + 1, bv, 1, pb, true});
            const int one_child = static_cast<int>(nodes.size()) - 1;
            nodes.push_back({sel, pd + 1, bv, 0, pb, true});
            const int zero_child = static_cast<int>(nodes.size()) - 1;
            dfs_stack.push_back(zero_child);
            dfs_stack.push_back(one_child);  // 1-branch explored first
        }

        if (!cfg.lp_dump.empty() && sel == 0) {
            std::ofstream os(cfg.lp_dump, std::ios::app);
            lp.dump(os, "root relaxation after cut loop");
        }
    }

    double raw_min = open_min_bound(leaf_raw_min - constant) + constant;
    if (raw_min == kInf) raw_min = static_cast<double>(upper);
    result.optimal = !stopped;
    result.lower_raw = raw_min;
    result.lower_bound = std::min<std::int64_t>(upper, ceil_eps(raw_min));
    if (result.optimal) {
        result.lower_bound = upper;
        assert(static_cast<double>(upper) - raw_min < 1.0 + 1e-6);
    }
    st.pivots = lp.pivot_count();
    return result;
}

}  // namespace crossmin
