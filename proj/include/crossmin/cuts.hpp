#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "crossmin/config.hpp"
#include "crossmin/lo_model.hpp"
#include "crossmin/lp.hpp"

namespace crossmin {

/// A cutting plane in two forms. The support form lists the arcs of the
/// underlying digraph structure (dicycle or ladder) with a right-hand side
/// valid for every linear order of the members: at most rhs_support of the
/// support arcs can point forward. The row form is the same inequality folded
/// onto the free variables (backward arcs as 1-x, fixed arcs as constants),
/// which is what the LP consumes.
struct Cut {
    std::vector<std::pair<int, int>> support;  ///< (tail, head) arcs
    int rhs_support = 0;
    LpRow row;
    double violation = 0.0;
    bool mobius = false;
};

/// Support arcs sorted lexicographically; used as the dedup identity of a cut.
std::vector<std::pair<int, int>> cut_key(const std::vector<std::pair<int, int>>& support);

/// Folds a support-form inequality into an LP row over the free variables.
/// Every support arc must exist in the model (not Absent).
Cut make_cut(const LOModel& model, std::vector<std::pair<int, int>> support, int rhs_support,
             const Eigen::VectorXd& x);

/// Number of support arcs pointing forward under the local ordering; the cut
/// claims this never exceeds rhs_support.
int support_forward_count(const std::vector<std::pair<int, int>>& support,
                          const std::vector<int>& local_order);

/// Dicycle separation hierarchy: triangles first, then integral cycles, then
/// fractional cycles via shortest paths; each tier runs over free arcs and the
/// last retries with fixed arcs included before giving up. Returned cuts are
/// deduplicated and sorted by violation, strongest first.
std::vector<Cut> separate_cycles(const LOModel& model, const Eigen::VectorXd& x,
                                 const Config& cfg);

/// Moebius-ladder separation: assembles three-rung ladders from tight small
/// dicycles and keeps a candidate only if enumerating all orders of its
/// support nodes confirms validity.
std::vector<Cut> separate_mobius(const LOModel& model, const Eigen::VectorXd& x,
                                 const Config& cfg);

}  // namespace crossmin
