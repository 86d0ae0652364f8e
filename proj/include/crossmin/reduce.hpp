#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "crossmin/crossing_matrix.hpp"
#include "crossmin/instance.hpp"

namespace crossmin {

/// Signals an internal inconsistency: precedence arcs that should form a
/// partial order contain a directed cycle.
class CycleError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Open interval spanned by a bottom node's neighbors in the top order.
/// Empty (left == right) for degree <= 1; undefined for degree 0.
struct NodeInterval {
    int left = 0;
    int right = 0;
    bool defined = false;  ///< false for degree-0 nodes

    bool empty() const { return !defined || left == right; }
};

/// Partition of the bottom nodes into independently solvable components,
/// listed left to right by their (disjoint) merged intervals. Degree-0 nodes
/// are kept aside; they cross nothing and go last.
struct ComponentPartition {
    std::vector<std::vector<int>> components;           ///< bottom ids, ascending
    std::vector<std::pair<int, int>> component_intervals;  ///< merged [left, right] endpoints
    std::vector<int> isolated;                          ///< degree-0 bottom ids, ascending
};

enum class PairStatus : std::uint8_t {
    Free,           ///< genuine decision, coefficient a != 0
    FixedForward,   ///< i before j in every optimum (c_ij = 0, c_ji > 0)
    FixedBackward,  ///< j before i in every optimum (c_ji = 0, c_ij > 0)
    Zero,           ///< a = 0: relative order never changes the objective
};

/// Per-pair status for one component, plus the a coefficients. Pairs are
/// indexed by local member positions (i < j).
struct PairClassification {
    int size = 0;
    std::vector<PairStatus> status;  ///< flat (i * size + j), upper triangle
    CountMatrix a;                   ///< a(i, j) = c(i, j) - c(j, i) for i < j
    int num_free = 0;
    int num_fixed = 0;
    int num_zero = 0;

    PairStatus pair_status(int i, int j) const {
        return status[static_cast<std::size_t>(i) * static_cast<std::size_t>(size) +
                      static_cast<std::size_t>(j)];
    }
};

/// Directed precedence arcs over local member indices; acyclic by contract.
struct PartialOrder {
    int size = 0;
    std::vector<std::pair<int, int>> arcs;  ///< (before, after)
};

NodeInterval node_interval(const Instance& instance, int bottom_id);

/// Interval decomposition. An empty-interval node whose anchor lies strictly
/// inside a merged interval joins that component (its placement genuinely
/// interacts with it); all other anchors become singleton components sorted
/// by anchor position.
ComponentPartition decompose(const Instance& instance);

/// Applies the fixing and zero-elimination rules to every pair of `cm`.
/// Verifies that the fixed arcs alone are acyclic (throws CycleError
/// otherwise). `enable_fixing = false` downgrades fixable pairs to Free for
/// diagnostics.
PairClassification classify_pairs(const CrossingMatrix& cm, bool enable_fixing = true);

/// Topological order of 0..members-1 consistent with `po`; unconstrained
/// nodes come smallest-id first. Returns local indices.
std::vector<int> complete_order(const PartialOrder& po);

/// Concatenates per-component orderings in partition order and appends the
/// isolated nodes in id order.
Ordering assemble_global(const std::vector<std::vector<int>>& parts,
                         const ComponentPartition& partition);

}  // namespace crossmin
