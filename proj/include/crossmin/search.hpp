#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "crossmin/config.hpp"
#include "crossmin/cuts.hpp"
#include "crossmin/lo_model.hpp"

namespace crossmin {

struct SearchStats {
    std::int64_t nodes = 0;
    std::int64_t lp_solves = 0;
    std::int64_t cuts_cycle = 0;
    std::int64_t cuts_mobius = 0;
    std::int64_t rows_deleted = 0;
    std::int64_t pivots = 0;
    int max_depth = 0;
};

/// One line of the optimality proof: recorded after every LP solve.
struct TraceEntry {
    int node = 0;
    double lp_value = 0.0;       ///< node LP objective, constant not included
    std::int64_t lower = 0;      ///< certified global lower bound at this time
    std::int64_t upper = 0;      ///< incumbent crossings at this time
};

struct ComponentResult {
    std::vector<int> order;          ///< local indices, best found
    std::int64_t crossings = 0;      ///< cost of order, model constant included
    std::int64_t lower_bound = 0;    ///< certified lower bound on the component
    double lower_raw = 0.0;          ///< unrounded bound backing the certificate
    bool optimal = false;
    SearchStats stats;
    std::vector<TraceEntry> trace;
};

/// Called for every cut accepted into the LP, before it is added.
using CutObserver = std::function<void(const LOModel&, const Cut&)>;

/// Branch&cut over one component model. `initial_order` must respect the
/// fixed arcs. Stops early (optimal = false) when `stop` fires.
ComponentResult solve_component(const LOModel& model, const std::vector<int>& initial_order,
                                const Config& cfg, StopToken* stop = nullptr,
                                const CutObserver& observer = nullptr);

/// ceil with a tolerance for values a hair below an integer; node bounds are
/// integral in exact arithmetic, so round up before pruning.
std::int64_t ceil_eps(double t);

/// If every free var is within eps_int of a bound: round, add the fixed arcs,
/// and topologically sort (smallest local id first). None when fractional or
/// cyclic.
std::optional<std::vector<int>> check_integral_ordering(const LOModel& model,
                                                        const Eigen::VectorXd& x,
                                                        double eps_int);

/// Greedy ordering for fractional points: repeatedly take the unplaced node
/// with the smallest incoming arc-value sum from other unplaced nodes (ties
/// by id). Followed by a fixed-arc repair pass so the result is always
/// consistent with the fixings.
std::vector<int> relaxed_topological_order(const LOModel& model, const Eigen::VectorXd& x);

}  // namespace crossmin
