#include "crossmin/lo_model.hpp"

#include <cassert>
#include <stdexcept>

namespace crossmin {

std::int64_t LOModel::ordering_cost(const std::vector<int>& local_order) const {
    assert(static_cast<int>(local_order.size()) == size);
    std::vector<int> pos(static_cast<std::size_t>(size), -1);
    for (int p = 0; p < size; ++p) pos[static_cast<std::size_t>(local_order[static_cast<std::size_t>(p)])] = p;
    // Only valid for orderings consistent with the fixed arcs: a violated
    // fixed pair would contribute crossings the reduced objective cannot see.
    for (const auto& arc : fixed_arcs) {
        assert(pos[static_cast<std::size_t>(arc.tail)] < pos[static_cast<std::size_t>(arc.head)]);
    }
    std::int64_t total = constant;
    for (const auto& v : vars) {
        if (pos[static_cast<std::size_t>(v.i)] < pos[static_cast<std::size_t>(v.j)]) {
            total += static_cast<std::int64_t>(v.cost);
        }
    }
    return total;
}

LOModel build_lo_model(const CrossingMatrix& cm, const PairClassification& cls) {
    const int n = cm.size();
    if (n != cls.size) throw std::invalid_argument("classification does not match crossing matrix");

    LOModel model;
    model.size = n;
    model.members = cm.members;
    const std::size_t nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    model.arc_kind.assign(nn, ArcKind::Absent);
    model.arc_var.assign(nn, -1);

    auto at = [n](int t, int h) {
        return static_cast<std::size_t>(t) * static_cast<std::size_t>(n) + static_cast<std::size_t>(h);
    };

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            switch (cls.pair_status(i, j)) {
                case PairStatus::Free: {
                    const int var = static_cast<int>(model.vars.size());
                    model.vars.push_back({i, j, static_cast<double>(cls.a(i, j))});
                    model.arc_kind[at(i, j)] = ArcKind::FreeForward;
                    model.arc_kind[at(j, i)] = ArcKind::FreeBackward;
                    model.arc_var[at(i, j)] = var;
                    model.arc_var[at(j, i)] = var;
                    model.constant += cm.c(j, i);
                    break;
                }
                case PairStatus::FixedForward:
                    model.arc_kind[at(i, j)] = ArcKind::FixedOne;
                    model.arc_kind[at(j, i)] = ArcKind::FixedZero;
                    model.fixed_arcs.push_back({i, j});
                    break;
                case PairStatus::FixedBackward:
                    model.arc_kind[at(i, j)] = ArcKind::FixedZero;
                    model.arc_kind[at(j, i)] = ArcKind::FixedOne;
                    model.fixed_arcs.push_back({j, i});
                    break;
                case PairStatus::Zero:
                    // c(i,j) == c(j,i): the pair is order-insensitive and owes
                    // that many crossings no matter what.
                    model.constant += cm.c(i, j);
                    break;
            }
        }
    }
    return model;
}

}  // namespace crossmin
