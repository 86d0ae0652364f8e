#pragma once

#include <cstdint>
#include <vector>

#include "crossmin/crossing_matrix.hpp"
#include "crossmin/reduce.hpp"

namespace crossmin {

/// Orientation info for an ordered pair of component members.
enum class ArcKind : std::uint8_t {
    FreeForward,   ///< value is x[var] (tail < head)
    FreeBackward,  ///< value is 1 - x[var] (tail > head)
    FixedOne,      ///< constant 1
    FixedZero,     ///< constant 0
    Absent,        ///< zero-coefficient pair: no arc either way
};

/// Reduced linear ordering program for one component. Variables are the Free
/// pairs only; Fixed pairs are constants consulted by separation; Zero pairs
/// are removed entirely and restored by topological sorting at the end.
struct LOModel {
    struct Var {
        int i = 0;  ///< local member index, i < j
        int j = 0;
        double cost = 0.0;  ///< a(i, j)
    };
    struct FixedArc {
        int tail = 0;  ///< precedes
        int head = 0;
    };

    int size = 0;  ///< number of component members
    std::vector<int> members;  ///< bottom ids per local index
    std::vector<Var> vars;
    std::vector<FixedArc> fixed_arcs;
    /// Crossings contributed by this component when all free vars are 0:
    /// sum of c(j,i) over Free pairs plus c(i,j) over Zero pairs. Fixed pairs
    /// contribute nothing in their forced orientation.
    std::int64_t constant = 0;

    /// Flat size*size lookup: arc kind for ordered (tail, head).
    std::vector<ArcKind> arc_kind;
    /// Flat size*size lookup: var index for Free pairs (either direction), -1 otherwise.
    std::vector<int> arc_var;

    ArcKind kind(int tail, int head) const {
        return arc_kind[static_cast<std::size_t>(tail) * static_cast<std::size_t>(size) +
                        static_cast<std::size_t>(head)];
    }
    int var_of(int tail, int head) const {
        return arc_var[static_cast<std::size_t>(tail) * static_cast<std::size_t>(size) +
                       static_cast<std::size_t>(head)];
    }

    /// Value of arc (tail, head) under the free-variable assignment `x`.
    template <typename Vec>
    double arc_value(int tail, int head, const Vec& x) const {
        switch (kind(tail, head)) {
            case ArcKind::FreeForward: return x[var_of(tail, head)];
            case ArcKind::FreeBackward: return 1.0 - x[var_of(tail, head)];
            case ArcKind::FixedOne: return 1.0;
            case ArcKind::FixedZero: return 0.0;
            case ArcKind::Absent: return 0.0;
        }
        return 0.0;
    }

    /// Objective value (component crossings) of a concrete member ordering,
    /// given as local indices left to right.
    std::int64_t ordering_cost(const std::vector<int>& local_order) const;
};

/// Assembles the reduced model from a component's crossing matrix and pair
/// classification.
LOModel build_lo_model(const CrossingMatrix& cm, const PairClassification& cls);

}  // namespace crossmin
