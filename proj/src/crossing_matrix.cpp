#include "crossmin/crossing_matrix.hpp"

namespace crossmin {

std::int64_t pair_crossings(const std::vector<int>& first_neighbors,
                            const std::vector<int>& second_neighbors) {
    // Count pairs (u, v) with u in the first list, v in the second, u > v.
    std::int64_t count = 0;
    std::size_t k = 0;
    for (int u : first_neighbors) {
        while (k < second_neighbors.size() && second_neighbors[k] < u) ++k;
        count += static_cast<std::int64_t>(k);
    }
    return count;
}

CrossingMatrix compute_crossing_matrix(const Instance& instance, const std::vector<int>& members) {
    CrossingMatrix cm;
    cm.members = members;
    const int n = cm.size();
    cm.c = CountMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const auto& ni = instance.neighbors(members[static_cast<std::size_t>(i)]);
        for (int j = i + 1; j < n; ++j) {
            const auto& nj = instance.neighbors(members[static_cast<std::size_t>(j)]);
            cm.c(i, j) = pair_crossings(ni, nj);
            cm.c(j, i) = pair_crossings(nj, ni);
        }
    }
    return cm;
}

ObjectiveData objective_data(const CrossingMatrix& cm) {
    const int n = cm.size();
    ObjectiveData data;
    data.a = CountMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            data.a(i, j) = cm.c(i, j) - cm.c(j, i);
            data.offset += cm.c(j, i);
        }
    }
    return data;
}

std::int64_t evaluate_objective(const ObjectiveData& data, const std::vector<int>& local_order) {
    const int n = static_cast<int>(local_order.size());
    std::vector<int> pos(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < n; ++k) pos[static_cast<std::size_t>(local_order[static_cast<std::size_t>(k)])] = k;
    std::int64_t total = data.offset;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (pos[static_cast<std::size_t>(i)] < pos[static_cast<std::size_t>(j)]) total += data.a(i, j);
    return total;
}

}  // namespace crossmin
