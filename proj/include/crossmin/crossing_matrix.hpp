#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "crossmin/instance.hpp"

namespace crossmin {

/// Dense integer matrix of pairwise crossing counts for one component:
/// c(i, j) is the number of crossings between edges of the i-th and j-th
/// member when the i-th precedes the j-th. Counts are 64-bit; c(i, j) can be
/// as large as deg_i * deg_j.
using CountMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

struct CrossingMatrix {
    std::vector<int> members;  ///< bottom ids, in local-index order
    CountMatrix c;

    int size() const { return static_cast<int>(members.size()); }
};

/// Objective data of the reduced linear ordering program: the antisymmetric
/// coefficients a(i, j) = c(i, j) - c(j, i) for i < j, and the constant
/// offset = sum of c(j, i) over i < j. For any ordering of the members,
///   crossings = sum_{i<j} a(i, j) * x(i, j) + offset,
/// with x(i, j) = 1 iff member i precedes member j.
struct ObjectiveData {
    CountMatrix a;  ///< upper triangle (i < j) is meaningful
    std::int64_t offset = 0;
};

/// Pairwise counts via two-pointer merges of the sorted adjacency lists;
/// O(deg_i + deg_j) per unordered pair.
CrossingMatrix compute_crossing_matrix(const Instance& instance, const std::vector<int>& members);

ObjectiveData objective_data(const CrossingMatrix& cm);

/// Crossings between the edge sets of two bottom nodes when `first` precedes
/// `second`; the shared building block of the matrix and streaming paths.
std::int64_t pair_crossings(const std::vector<int>& first_neighbors,
                            const std::vector<int>& second_neighbors);

/// sum_{i<j} a(i,j) * x(i,j) + offset evaluated at a concrete member ordering
/// (local indices). Used by tests and incumbent bookkeeping.
std::int64_t evaluate_objective(const ObjectiveData& data, const std::vector<int>& local_order);

}  // namespace crossmin
