#include "crossmin/solver.hpp"

#include <atomic>
#include <cassert>
#include <chrono>
#include <exception>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "crossmin/crossing_matrix.hpp"
#include "crossmin/heuristics.hpp"
#include "crossmin/lo_model.hpp"
#include "crossmin/reduce.hpp"

namespace crossmin {

namespace {

ComponentResult solve_one(const Instance& instance, const std::vector<int>& members,
                          const Config& cfg, StopToken* stop, const CutObserver& observer) {
    const CrossingMatrix cm = compute_crossing_matrix(instance, members);
    const PairClassification cls = classify_pairs(cm, cfg.fixing);
    const LOModel model = build_lo_model(cm, cls);
    const std::vector<int> warm = initial_order(instance, cm, model, cfg);
    return solve_component(model, warm, cfg, stop, observer);
}

}  // namespace

SolveResult solve_instance(const Instance& instance, const Config& cfg, StopToken* stop,
                           const CutObserver& observer) {
    const auto t0 = std::chrono::steady_clock::now();
    SolveResult result;

    ComponentPartition part;
    if (cfg.decompose) {
        part = decompose(instance);
    } else {
        // Diagnostic mode: the whole bottom layer as one component.
        std::vector<int> all(static_cast<std::size_t>(instance.n_bottom));
        std::iota(all.begin(), all.end(), 1);
        if (!all.empty()) {
            part.components.push_back(std::move(all));
            part.component_intervals.emplace_back(1, instance.n_top);
        }
    }

    const int nc = static_cast<int>(part.components.size());
    result.stats.components = nc;
    result.stats.isolated = static_cast<int>(part.isolated.size());
    for (const auto& comp : part.components) {
        result.stats.largest_component =
            std::max(result.stats.largest_component, static_cast<int>(comp.size()));
        if (static_cast<int>(comp.size()) > cfg.dense_limit) {
            throw TooLargeError("component with " + std::to_string(comp.size()) +
                                " members exceeds dense_limit=" +
                                std::to_string(cfg.dense_limit));
        }
    }

    std::vector<ComponentResult> comp_results(static_cast<std::size_t>(nc));
    if (cfg.threads > 1 && nc > 1) {
        std::atomic<int> next{0};
        std::atomic<bool> failed{false};
        std::exception_ptr error;
        std::mutex error_mu;
        auto worker = [&]() {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= nc || failed.load()) return;
                try {
                    comp_results[static_cast<std::size_t>(i)] = solve_one(
                        instance, part.components[static_cast<std::size_t>(i)], cfg, stop, observer);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!error) error = std::current_exception();
                    failed.store(true);
                    return;
                }
            }
        };
        std::vector<std::thread> threads;
        const int nt = std::min(cfg.threads, nc);
        threads.reserve(static_cast<std::size_t>(nt));
        for (int t = 0; t < nt; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
        if (error) std::rethrow_exception(error);
    } else {
        for (int i = 0; i < nc; ++i) {
            comp_results[static_cast<std::size_t>(i)] =
                solve_one(instance, part.components[static_cast<std::size_t>(i)], cfg, stop, observer);
        }
    }

    // Reassemble: component orders in partition order, isolated nodes last.
    std::vector<std::vector<int>> parts;
    parts.reserve(static_cast<std::size_t>(nc));
    bool all_optimal = true;
    for (int i = 0; i < nc; ++i) {
        const auto& members = part.components[static_cast<std::size_t>(i)];
        const auto& res = comp_results[static_cast<std::size_t>(i)];
        std::vector<int> ids;
        ids.reserve(members.size());
        for (int local : res.order) ids.push_back(members[static_cast<std::size_t>(local)]);
        parts.push_back(std::move(ids));
        all_optimal = all_optimal && res.optimal;
        result.lower_bound += res.lower_bound;
        result.stats.nodes += res.stats.nodes;
        result.stats.lp_solves += res.stats.lp_solves;
        result.stats.cuts_cycle += res.stats.cuts_cycle;
        result.stats.cuts_mobius += res.stats.cuts_mobius;
        result.stats.rows_deleted += res.stats.rows_deleted;
        result.stats.pivots += res.stats.pivots;
    }

    result.solution.ordering = assemble_global(parts, part);
    result.solution.crossings = count_crossings(instance, result.solution.ordering);
    result.solution.optimal = all_optimal;
    assert(!all_optimal ||
           result.solution.crossings ==
               std::accumulate(comp_results.begin(), comp_results.end(), std::int64_t{0},
                               [](std::int64_t acc, const ComponentResult& r) {
                                   return acc + r.crossings;
                               }));
    result.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

}  // namespace crossmin
