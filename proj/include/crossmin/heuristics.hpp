#pragma once

#include <cstdint>
#include <vector>

#include "crossmin/config.hpp"
#include "crossmin/crossing_matrix.hpp"
#include "crossmin/instance.hpp"
#include "crossmin/lo_model.hpp"

namespace crossmin {

/// Average 1-based top position of each member's neighbors; +inf for
/// degree-0 members (they sort last).
std::vector<double> barycenters(const Instance& instance, const std::vector<int>& members);

/// Members ordered by barycenter, ties by local index. Returns local indices.
std::vector<int> barycenter_order(const Instance& instance, const std::vector<int>& members);

/// Crossings of a local ordering: sum of c(u, w) over u before w.
std::int64_t ordering_crossings(const CrossingMatrix& cm, const std::vector<int>& order);

/// Kernighan-Lin-style insertion local search. Each pass visits the nodes in
/// id order; every node is relocated once to its best other position (even
/// when that worsens), the cumulative gain is tracked, and the pass is rolled
/// back to its best strictly improving prefix. Passes repeat until no pass
/// improves. Modifies `order` in place and returns the final cost.
std::int64_t kl2_improve(const CrossingMatrix& cm, std::vector<int>& order);

/// Reorders to respect the model's fixed arcs while otherwise preserving the
/// given relative order (topological pass keyed by current position).
std::vector<int> repair_fixed(const LOModel& model, const std::vector<int>& order);

/// Warm start for one component: barycenter, then local search when the
/// component is small enough, then the fixed-arc repair pass.
std::vector<int> initial_order(const Instance& instance, const CrossingMatrix& cm,
                               const LOModel& model, const Config& cfg);

}  // namespace crossmin
