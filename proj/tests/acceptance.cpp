// Acceptance gate: nine checks, one PASS/FAIL line each, nonzero exit if any
// fail. The random-instance sweep (check 1) also feeds the cut-soundness,
// trace, reduction-safety, and determinism checks.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "crossmin/config.hpp"
#include "crossmin/crossing_matrix.hpp"
#include "crossmin/cuts.hpp"
#include "crossmin/heuristics.hpp"
#include "crossmin/instance.hpp"
#include "crossmin/lo_model.hpp"
#include "crossmin/lp.hpp"
#include "crossmin/reduce.hpp"
#include "crossmin/search.hpp"
#include "crossmin/solver.hpp"

using namespace crossmin;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Instance random_instance(std::mt19937& rng, int n_top, int n_bottom, double p) {
    std::bernoulli_distribution flip(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n_top; ++u)
        for (int v = 1; v <= n_bottom; ++v)
            if (flip(rng)) edges.emplace_back(u, v);
    return make_instance(n_top, n_bottom, std::move(edges));
}

// Connected bipartite instance with exactly m edges: a random spanning tree
// over both layers, then random extra edges.
Instance connected_instance(std::mt19937& rng, int n_top, int n_bottom, int m) {
    std::vector<int> tops(static_cast<std::size_t>(n_top)), bottoms(static_cast<std::size_t>(n_bottom));
    std::iota(tops.begin(), tops.end(), 1);
    std::iota(bottoms.begin(), bottoms.end(), 1);
    std::shuffle(tops.begin(), tops.end(), rng);
    std::shuffle(bottoms.begin(), bottoms.end(), rng);

    std::set<std::pair<int, int>> edges{{tops[0], bottoms[0]}};
    std::vector<int> ctops{tops[0]}, cbots{bottoms[0]};
    std::size_t ti = 1, bi = 1;
    while (ti < tops.size() || bi < bottoms.size()) {
        const std::size_t left_top = tops.size() - ti, left_bot = bottoms.size() - bi;
        std::uniform_int_distribution<std::size_t> pickside(0, left_top + left_bot - 1);
        if (pickside(rng) < left_top) {
            const int t = tops[ti++];
            std::uniform_int_distribution<std::size_t> at(0, cbots.size() - 1);
            edges.insert({t, cbots[at(rng)]});
            ctops.push_back(t);
        } else {
            const int b = bottoms[bi++];
            std::uniform_int_distribution<std::size_t> at(0, ctops.size() - 1);
            edges.insert({ctops[at(rng)], b});
            cbots.push_back(b);
        }
    }
    std::uniform_int_distribution<int> td(1, n_top), bd(1, n_bottom);
    while (static_cast<int>(edges.size()) < m) edges.insert({td(rng), bd(rng)});
    return make_instance(n_top, n_bottom, {edges.begin(), edges.end()});
}

// One interval block: two bottom nodes with strictly overlapping spans.
Instance block_instance(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int b = 0; b < k; ++b) {
        const int t = 4 * b;
        edges.emplace_back(t + 1, 2 * b + 1);
        edges.emplace_back(t + 3, 2 * b + 1);
        edges.emplace_back(t + 2, 2 * b + 2);
        edges.emplace_back(t + 4, 2 * b + 2);
    }
    return make_instance(4 * k, 2 * k, std::move(edges));
}

// --- shared state produced by the check-1 sweep -----------------------------

// Sizes stay within 8 x 8 and densities within {0.1, ..., 0.9} throughout.
// The uniform tranche alone almost never triggers separation (reduction and
// warm starts close those models at the root), so two tranches weighted
// toward the shapes that do cut keep the cut audit (check 3) non-vacuous.
std::vector<Instance> g_instances;
std::vector<std::int64_t> g_optima;       // brute-force reference values
std::string g_solutions;                  // concatenated solution files
std::int64_t g_cuts_checked = 0, g_cut_violations = 0, g_cuts_unchecked = 0;
std::int64_t g_cuts_stats = 0;            // accepted cuts per solver counters

void generate_sweep_instances() {
    std::mt19937 rng(20240824);
    const auto tranche = [&](int n, int top_lo, int top_hi, int bot_lo, int bot_hi,
                             const std::vector<double>& densities) {
        std::uniform_int_distribution<int> td(top_lo, top_hi), bd(bot_lo, bot_hi);
        std::uniform_int_distribution<std::size_t> pd(0, densities.size() - 1);
        for (int i = 0; i < n; ++i)
            g_instances.push_back(random_instance(rng, td(rng), bd(rng), densities[pd(rng)]));
    };
    tranche(1000, 1, 8, 1, 8, {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9});
    tranche(6000, 6, 8, 5, 6, {0.3, 0.4, 0.5, 0.6, 0.7});
    tranche(2000, 7, 8, 7, 8, {0.3, 0.4});
    g_optima.reserve(g_instances.size());
    for (const Instance& ins : g_instances)
        g_optima.push_back(brute_force_optimum(ins).crossings);
}

// Every emitted cut, in support form, must hold at the characteristic vector
// of every permutation of its component.
void audit_cut(const LOModel& m, const Cut& cut) {
    if (m.size > 6) {
        ++g_cuts_unchecked;
        return;
    }
    std::vector<int> perm(static_cast<std::size_t>(m.size));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (support_forward_count(cut.support, perm) > cut.rhs_support) ++g_cut_violations;
    } while (std::next_permutation(perm.begin(), perm.end()));
    ++g_cuts_checked;
}

bool check1(std::string& detail) {
    generate_sweep_instances();
    const Config cfg;
    const std::size_t runs = g_instances.size();
    std::size_t matched = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (std::size_t it = 0; it < runs; ++it) {
        const SolveResult res = solve_instance(g_instances[it], cfg, nullptr, audit_cut);
        if (res.solution.optimal && res.solution.crossings == g_optima[it]) ++matched;
        g_cuts_stats += res.stats.cuts_cycle + res.stats.cuts_mobius;
        g_solutions += solution_to_string(g_instances[it], res.solution);
    }
    const double secs = seconds_since(t0);
    std::ostringstream os;
    os << matched << "/" << runs << " certified optima match brute force in " << secs << " s";
    detail = os.str();
    return matched == runs && runs >= 1000 && secs < 60.0;
}

bool check2(std::string& detail) {
    std::mt19937 rng(777001);
    std::uniform_int_distribution<int> top_dist(1, 8), bottom_dist(1, 6), pd(0, 8);
    const double densities[] = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    std::int64_t identities = 0, mismatches = 0;
    for (int it = 0; it < 200; ++it) {
        const Instance ins = random_instance(rng, top_dist(rng), bottom_dist(rng),
                                             densities[pd(rng)]);
        std::vector<int> members(static_cast<std::size_t>(ins.n_bottom));
        std::iota(members.begin(), members.end(), 1);
        const CrossingMatrix cm = compute_crossing_matrix(ins, members);
        const ObjectiveData data = objective_data(cm);

        std::vector<int> local(members.size());
        std::iota(local.begin(), local.end(), 0);
        do {
            Ordering global;
            for (int idx : local) global.seq.push_back(idx + 1);
            if (evaluate_objective(data, local) == count_crossings(ins, global))
                ++identities;
            else
                ++mismatches;
        } while (std::next_permutation(local.begin(), local.end()));
    }
    std::ostringstream os;
    os << identities << " permutation evaluations agree with the crossing count, " << mismatches
       << " mismatches over 200 instances";
    detail = os.str();
    return mismatches == 0 && identities > 0;
}

bool check3(std::string& detail) {
    std::ostringstream os;
    os << g_cuts_checked << " cuts audited at every member permutation, " << g_cut_violations
       << " violations (" << g_cuts_unchecked << " more from components above the size cap)";
    detail = os.str();
    return g_cut_violations == 0 && g_cuts_checked > 0 &&
           g_cuts_checked + g_cuts_unchecked == g_cuts_stats;
}

bool check4(std::string& detail) {
    const Config cfg;
    std::int64_t traces = 0, bound_violations = 0, ledger_violations = 0, gap_violations = 0;
    for (const Instance& ins : g_instances) {
        const ComponentPartition part = decompose(ins);
        for (const auto& members : part.components) {
            const CrossingMatrix cm = compute_crossing_matrix(ins, members);
            const PairClassification cls = classify_pairs(cm, cfg.fixing);
            const LOModel model = build_lo_model(cm, cls);
            const ComponentResult res =
                solve_component(model, initial_order(ins, cm, model, cfg), cfg);
            ++traces;
            for (std::size_t k = 1; k < res.trace.size(); ++k) {
                if (res.trace[k].node == res.trace[k - 1].node &&
                    res.trace[k].lp_value < res.trace[k - 1].lp_value - 1e-9)
                    ++bound_violations;
                if (res.trace[k].lower < res.trace[k - 1].lower ||
                    res.trace[k].upper > res.trace[k - 1].upper)
                    ++ledger_violations;
            }
            for (const TraceEntry& e : res.trace)
                if (e.lower > e.upper) ++ledger_violations;
            if (!res.optimal ||
                static_cast<double>(res.crossings) - res.lower_raw >= 1.0)
                ++gap_violations;
        }
    }
    std::ostringstream os;
    os << traces << " component traces: " << bound_violations << " bound regressions, "
       << ledger_violations << " ledger faults, " << gap_violations
       << " certificates with UB - LB_raw >= 1";
    detail = os.str();
    return bound_violations == 0 && ledger_violations == 0 && gap_violations == 0 && traces > 0;
}

std::vector<LpRow> random_rows(std::mt19937& rng, int n, int count, int min_rhs) {
    std::uniform_int_distribution<int> support(2, std::min(5, n));
    std::uniform_int_distribution<int> var(0, n - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    std::uniform_int_distribution<int> rhs(min_rhs, 5);
    std::vector<LpRow> rows;
    for (int k = 0; k < count; ++k) {
        const int s = support(rng);
        std::vector<int> vars;
        while (static_cast<int>(vars.size()) < s) {
            const int v = var(rng);
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
        }
        LpRow row;
        for (int v : vars) row.coefs.emplace_back(v, sign(rng) ? 1.0 : -1.0);
        row.rhs = rhs(rng);
        rows.push_back(std::move(row));
    }
    return rows;
}

bool check5(std::string& detail) {
    const Config cfg;
    std::mt19937 rng(555002);
    std::uniform_int_distribution<int> nvars(2, 12), steps(3, 8), action(0, 9), costd(-9, 9);
    std::int64_t sequences = 0, resolves = 0, mismatches = 0;
    for (int it = 0; it < 500; ++it) {
        const int n = nvars(rng);
        std::vector<double> costs(static_cast<std::size_t>(n));
        for (double& c : costs) c = costd(rng);
        BoundedSimplex lp(n, costs, cfg);
        if (lp.solve() != LpStatus::Optimal) continue;
        bool dead = false;
        const int k = steps(rng);
        for (int s = 0; s < k && !dead; ++s) {
            const int act = action(rng);
            if (act < 5) {
                lp.add_rows(random_rows(rng, n, 1 + act % 3, it % 4 == 0 ? -2 : 0));
            } else if (act < 7 && lp.num_rows() > 0) {
                std::uniform_int_distribution<int> which(0, lp.num_rows() - 1);
                const int kill = which(rng);
                int seen = 0;
                lp.delete_rows([&](const LpRow&) { return seen++ == kill; });
            } else {
                std::uniform_int_distribution<int> var(0, n - 1);
                const int v = var(rng);
                const int mode = action(rng) % 3;
                if (mode == 0)
                    lp.set_bounds(v, 0.0, 0.0);
                else if (mode == 1)
                    lp.set_bounds(v, 1.0, 1.0);
                else
                    lp.set_bounds(v, 0.0, 1.0);
            }
            const LpStatus st = lp.resolve_dual();

            BoundedSimplex fresh(n, costs, cfg);
            for (int v = 0; v < n; ++v) fresh.set_bounds(v, lp.lower_bound(v), lp.upper_bound(v));
            std::vector<LpRow> rows;
            for (int r = 0; r < lp.num_rows(); ++r) rows.push_back(lp.row(r));
            fresh.add_rows(std::move(rows));
            const LpStatus fresh_st = fresh.solve();

            ++resolves;
            if (st != fresh_st) {
                ++mismatches;
                dead = true;
            } else if (st == LpStatus::Infeasible) {
                dead = true;
            } else if (std::abs(lp.objective() - fresh.objective()) > 1e-6) {
                ++mismatches;
            }
        }
        ++sequences;
    }
    std::ostringstream os;
    os << sequences << " sequences / " << resolves << " dual resolves vs fresh solves, "
       << mismatches << " mismatches beyond 1e-6";
    detail = os.str();
    return sequences >= 500 && mismatches == 0;
}

bool check6(std::string& detail) {
    const std::size_t runs = g_instances.size();
    std::size_t agree_nodecomp = 0, agree_nofix = 0;
    Config nodecomp;
    nodecomp.decompose = false;
    Config nofix;
    nofix.fixing = false;
    for (std::size_t it = 0; it < runs; ++it) {
        const Instance& ins = g_instances[it];
        const SolveResult a = solve_instance(ins, nodecomp);
        if (a.solution.optimal && a.solution.crossings == g_optima[it]) ++agree_nodecomp;
        const SolveResult b = solve_instance(ins, nofix);
        if (b.solution.optimal && b.solution.crossings == g_optima[it]) ++agree_nofix;
    }
    std::ostringstream os;
    os << agree_nodecomp << "/" << runs << " without decomposition and " << agree_nofix << "/"
       << runs << " without fixing keep the optimal counts";
    detail = os.str();
    return agree_nodecomp == runs && agree_nofix == runs;
}

bool check7(std::string& detail) {
    int good = 0;
    for (int k = 1; k <= 20; ++k) {
        const ComponentPartition part = decompose(block_instance(k));
        if (static_cast<int>(part.components.size()) == k && part.isolated.empty()) ++good;
    }
    std::ostringstream os;
    os << good << "/20 block counts reproduced exactly";
    detail = os.str();
    return good == 20;
}

bool check8(std::string& detail) {
    const Config cfg;
    std::vector<double> times;
    int solved = 0;
    for (unsigned seed = 1; seed <= 20; ++seed) {
        std::mt19937 rng(9000 + seed);
        const Instance ins = connected_instance(rng, 60, 60, 180);
        const auto t0 = std::chrono::steady_clock::now();
        const SolveResult res = solve_instance(ins, cfg);
        times.push_back(seconds_since(t0));
        if (res.solution.optimal) ++solved;
    }
    std::sort(times.begin(), times.end());
    const double median = 0.5 * (times[9] + times[10]);
    std::ostringstream os;
    os << solved << "/20 connected 60x60 instances certified, median " << median << " s, max "
       << times.back() << " s";
    detail = os.str();
    return solved == 20 && median < 10.0;
}

bool check9(std::string& detail) {
    const Config cfg;
    std::string rerun;
    for (const Instance& ins : g_instances) {
        rerun += solution_to_string(ins, solve_instance(ins, cfg).solution);
    }
    std::ostringstream os;
    os << "solution files of the repeated sweep are "
       << (rerun == g_solutions ? "byte-identical" : "DIFFERENT") << " (" << g_solutions.size()
       << " bytes)";
    detail = os.str();
    return rerun == g_solutions && !g_solutions.empty();
}

}  // namespace

int main() {
    using Check = bool (*)(std::string&);
    const std::pair<int, Check> checks[] = {{1, check1}, {2, check2}, {3, check3},
                                            {4, check4}, {5, check5}, {6, check6},
                                            {7, check7}, {8, check8}, {9, check9}};
    int failures = 0;
    for (const auto& [num, fn] : checks) {
        std::string detail;
        bool ok = false;
        try {
            ok = fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << num << ": " << detail
                  << std::endl;
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
