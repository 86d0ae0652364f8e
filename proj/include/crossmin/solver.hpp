#pragma once

#include <cstdint>
#include <vector>

#include "crossmin/config.hpp"
#include "crossmin/instance.hpp"
#include "crossmin/search.hpp"

namespace crossmin {

struct SolveStats {
    int components = 0;
    int isolated = 0;
    int largest_component = 0;
    std::int64_t nodes = 0;
    std::int64_t lp_solves = 0;
    std::int64_t cuts_cycle = 0;
    std::int64_t cuts_mobius = 0;
    std::int64_t rows_deleted = 0;
    std::int64_t pivots = 0;
    double wall_seconds = 0.0;
};

struct SolveResult {
    Solution solution;
    std::int64_t lower_bound = 0;  ///< certified; equals crossings when optimal
    SolveStats stats;
};

/// Full pipeline: decompose, classify, warm-start, branch&cut per component,
/// reassemble. Components may run on a worker pool (cfg.threads); results are
/// aggregated by component index, so output does not depend on scheduling.
/// The observer, when set, is called for every accepted cut (possibly from
/// worker threads when threads > 1).
SolveResult solve_instance(const Instance& instance, const Config& cfg,
                           StopToken* stop = nullptr, const CutObserver& observer = nullptr);

}  // namespace crossmin
