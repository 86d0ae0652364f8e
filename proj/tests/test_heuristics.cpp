#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "crossmin/crossing_matrix.hpp"
#include "crossmin/heuristics.hpp"
#include "crossmin/instance.hpp"
#include "crossmin/lo_model.hpp"
#include "crossmin/reduce.hpp"

using namespace crossmin;

namespace {

const std::string kE1 = "p ocr 3 3 5\n2 4\n3 4\n1 5\n3 5\n1 6\n";

Instance random_instance(std::mt19937& rng, int n_top, int n_bottom, double p) {
    std::bernoulli_distribution flip(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n_top; ++u)
        for (int v = 1; v <= n_bottom; ++v)
            if (flip(rng)) edges.emplace_back(u, v);
    return make_instance(n_top, n_bottom, std::move(edges));
}

std::vector<int> all_members(const Instance& ins) {
    std::vector<int> members(static_cast<std::size_t>(ins.n_bottom));
    std::iota(members.begin(), members.end(), 1);
    return members;
}

// Model over all bottom nodes, with the fixing rules applied.
LOModel whole_model(const Instance& ins, const CrossingMatrix& cm, bool fixing = true) {
    return build_lo_model(cm, classify_pairs(cm, fixing));
}

bool respects_fixed(const LOModel& m, const std::vector<int>& order) {
    std::vector<int> pos(static_cast<std::size_t>(m.size));
    for (int p = 0; p < m.size; ++p) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] = p;
    for (const auto& arc : m.fixed_arcs)
        if (pos[static_cast<std::size_t>(arc.tail)] >= pos[static_cast<std::size_t>(arc.head)]) return false;
    return true;
}

bool is_permutation_of_range(const std::vector<int>& order, int n) {
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (int v = 0; v < n; ++v)
        if (sorted[static_cast<std::size_t>(v)] != v) return false;
    return true;
}

// Bare model carrying only what repair_fixed consumes: a size and arcs.
LOModel arcs_only_model(int n, const std::vector<std::pair<int, int>>& arcs) {
    LOModel m;
    m.size = n;
    m.members.resize(static_cast<std::size_t>(n));
    std::iota(m.members.begin(), m.members.end(), 1);
    m.arc_kind.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), ArcKind::Absent);
    m.arc_var.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    for (auto [t, h] : arcs) m.fixed_arcs.push_back({t, h});
    return m;
}

}  // namespace

TEST_CASE("barycenters of the five-edge example") {
    Instance ins = parse_instance(kE1);
    std::vector<double> bary = barycenters(ins, all_members(ins));
    REQUIRE(bary.size() == 3);
    CHECK(bary[0] == doctest::Approx(2.5));  // neighbors {2, 3}
    CHECK(bary[1] == doctest::Approx(2.0));  // neighbors {1, 3}
    CHECK(bary[2] == doctest::Approx(1.0));  // neighbors {1}
    CHECK(barycenters(ins, {}).empty());
}

TEST_CASE("degree-0 members get +inf and sort last") {
    // b1 isolated, b2 -> {1}, b3 -> {2}.
    Instance ins = make_instance(2, 3, {{1, 2}, {2, 3}});
    std::vector<double> bary = barycenters(ins, all_members(ins));
    CHECK(std::isinf(bary[0]));
    CHECK(bary[1] == doctest::Approx(1.0));
    CHECK(bary[2] == doctest::Approx(2.0));
    CHECK(barycenter_order(ins, all_members(ins)) == std::vector<int>{1, 2, 0});
}

TEST_CASE("barycenter order breaks ties by local index") {
    // Both bottom nodes see {1, 2}: equal averages, stable order.
    Instance ins = make_instance(2, 2, {{1, 1}, {2, 1}, {1, 2}, {2, 2}});
    CHECK(barycenter_order(ins, all_members(ins)) == std::vector<int>{0, 1});

    Instance e1 = parse_instance(kE1);
    CHECK(barycenter_order(e1, all_members(e1)) == std::vector<int>{2, 1, 0});
}

TEST_CASE("ordering_crossings matches the count oracle") {
    Instance ins = parse_instance(kE1);
    CrossingMatrix cm = compute_crossing_matrix(ins, all_members(ins));
    CHECK(ordering_crossings(cm, {2, 1, 0}) == 1);
    CHECK(ordering_crossings(cm, {0, 1, 2}) == 5);
    CHECK(ordering_crossings(cm, {}) == 0);
    CHECK(ordering_crossings(cm, {1}) == 0);

    std::mt19937 rng(4242);
    for (int it = 0; it < 200; ++it) {
        Instance r = random_instance(rng, 2 + it % 6, 2 + it % 5, 0.4);
        CrossingMatrix rcm = compute_crossing_matrix(r, all_members(r));
        std::vector<int> local(static_cast<std::size_t>(r.n_bottom));
        std::iota(local.begin(), local.end(), 0);
        std::shuffle(local.begin(), local.end(), rng);
        Ordering global;
        for (int idx : local) global.seq.push_back(idx + 1);
        CHECK(ordering_crossings(rcm, local) == count_crossings(r, global));
    }
}

TEST_CASE("kl2 walks the example from worst to optimal") {
    Instance ins = parse_instance(kE1);
    CrossingMatrix cm = compute_crossing_matrix(ins, all_members(ins));
    std::vector<int> order = {0, 1, 2};  // cost 5, the worst ordering
    std::int64_t cost = kl2_improve(cm, order);
    CHECK(cost == 1);
    CHECK(order == std::vector<int>{2, 1, 0});
}

TEST_CASE("kl2 on trivial orders is a no-op") {
    Instance ins = parse_instance(kE1);
    CrossingMatrix cm = compute_crossing_matrix(ins, {1});
    std::vector<int> solo = {0};
    CHECK(kl2_improve(cm, solo) == 0);
    CHECK(solo == std::vector<int>{0});

    CrossingMatrix empty_cm = compute_crossing_matrix(ins, {});
    std::vector<int> none;
    CHECK(kl2_improve(empty_cm, none) == 0);
    CHECK(none.empty());
}

TEST_CASE("kl2 never worsens, reports the true cost, and is stable at rest") {
    std::mt19937 rng(90210);
    for (int it = 0; it < 300; ++it) {
        Instance ins = random_instance(rng, 2 + it % 8, 2 + it % 11, 0.15 + 0.1 * (it % 7));
        CrossingMatrix cm = compute_crossing_matrix(ins, all_members(ins));
        std::vector<int> order(static_cast<std::size_t>(ins.n_bottom));
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        const std::int64_t start = ordering_crossings(cm, order);

        std::int64_t cost = kl2_improve(cm, order);
        CHECK(cost <= start);
        CHECK(cost == ordering_crossings(cm, order));
        CHECK(is_permutation_of_range(order, ins.n_bottom));

        // The search stops only when a whole pass fails to improve, so an
        // immediate rerun must terminate at the same cost and order.
        std::vector<int> again = order;
        CHECK(kl2_improve(cm, again) == cost);
        CHECK(again == order);
    }
}

TEST_CASE("barycenter plus kl2 finds the optimum on most small instances") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> top_dist(2, 8);
    std::uniform_int_distribution<int> bottom_dist(2, 7);
    const double densities[] = {0.2, 0.35, 0.5, 0.65, 0.8};

    int optimal = 0;
    const int trials = 1200;
    for (int it = 0; it < trials; ++it) {
        Instance ins = random_instance(rng, top_dist(rng), bottom_dist(rng), densities[it % 5]);
        CrossingMatrix cm = compute_crossing_matrix(ins, all_members(ins));
        std::vector<int> order = barycenter_order(ins, all_members(ins));
        std::int64_t cost = kl2_improve(cm, order);

        std::int64_t best = brute_force_optimum(ins).crossings;
        REQUIRE(cost >= best);
        if (cost == best) ++optimal;
    }
    // Measured 1199/1200 with this seed; anything near the claimed ~80%
    // should clear this with a wide margin.
    CHECK(optimal >= trials * 80 / 100);
    MESSAGE("warm start optimal on ", optimal, " of ", trials, " instances");
}

TEST_CASE("repair_fixed lifts forced predecessors past their targets") {
    LOModel m = arcs_only_model(4, {{2, 0}, {3, 1}});
    CHECK(repair_fixed(m, {0, 1, 2, 3}) == std::vector<int>{2, 0, 3, 1});
}

TEST_CASE("repair_fixed keeps an already-consistent order untouched") {
    std::mt19937 rng(5150);
    for (int it = 0; it < 200; ++it) {
        const int n = 2 + it % 8;
        std::vector<int> hidden(static_cast<std::size_t>(n));
        std::iota(hidden.begin(), hidden.end(), 0);
        std::shuffle(hidden.begin(), hidden.end(), rng);
        std::vector<int> pos(static_cast<std::size_t>(n));
        for (int p = 0; p < n; ++p) pos[static_cast<std::size_t>(hidden[static_cast<std::size_t>(p)])] = p;

        // Arcs sampled consistently with `hidden`, so it is a topological order.
        std::bernoulli_distribution pick(0.4);
        std::vector<std::pair<int, int>> arcs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (pick(rng)) {
                    if (pos[static_cast<std::size_t>(i)] < pos[static_cast<std::size_t>(j)])
                        arcs.emplace_back(i, j);
                    else
                        arcs.emplace_back(j, i);
                }
        LOModel m = arcs_only_model(n, arcs);
        CHECK(repair_fixed(m, hidden) == hidden);

        // Any other input comes back as a permutation satisfying every arc.
        std::vector<int> scrambled(static_cast<std::size_t>(n));
        std::iota(scrambled.begin(), scrambled.end(), 0);
        std::shuffle(scrambled.begin(), scrambled.end(), rng);
        std::vector<int> repaired = repair_fixed(m, scrambled);
        CHECK(is_permutation_of_range(repaired, n));
        CHECK(respects_fixed(m, repaired));
    }
}

TEST_CASE("repair_fixed without arcs is the identity") {
    LOModel m = arcs_only_model(5, {});
    CHECK(repair_fixed(m, {4, 2, 0, 3, 1}) == std::vector<int>{4, 2, 0, 3, 1});
}

TEST_CASE("initial_order runs the full pipeline on the example") {
    Instance ins = parse_instance(kE1);
    CrossingMatrix cm = compute_crossing_matrix(ins, all_members(ins));
    LOModel m = whole_model(ins, cm);
    REQUIRE(m.fixed_arcs.size() == 2);  // node 3 is forced before both others

    Config cfg;
    std::vector<int> order = initial_order(ins, cm, m, cfg);
    CHECK(order == std::vector<int>{2, 1, 0});
    CHECK(ordering_crossings(cm, order) == 1);
}

TEST_CASE("kl2_threshold gates the local-search stage") {
    // b1 -> {1, 6, 7} averages 14/3 < 5, so barycenter puts it first, yet
    // that costs 2 crossings against 1 for the swap. Only kl2 repairs this.
    Instance ins = make_instance(7, 2, {{1, 1}, {6, 1}, {7, 1}, {5, 2}});
    CrossingMatrix cm = compute_crossing_matrix(ins, all_members(ins));
    REQUIRE(cm.c(0, 1) == 2);
    REQUIRE(cm.c(1, 0) == 1);
    LOModel m = whole_model(ins, cm);
    REQUIRE(m.fixed_arcs.empty());

    Config cfg;
    CHECK(initial_order(ins, cm, m, cfg) == std::vector<int>{1, 0});
    cfg.kl2_threshold = 0;
    CHECK(initial_order(ins, cm, m, cfg) == std::vector<int>{0, 1});
}

TEST_CASE("initial_order always satisfies the fixed arcs") {
    std::mt19937 rng(31337);
    Config cfg;
    int with_arcs = 0;
    for (int it = 0; it < 300; ++it) {
        Instance ins = random_instance(rng, 2 + it % 7, 2 + it % 9, 0.15 + 0.1 * (it % 7));
        CrossingMatrix cm = compute_crossing_matrix(ins, all_members(ins));
        LOModel m = whole_model(ins, cm);
        if (!m.fixed_arcs.empty()) ++with_arcs;

        std::vector<int> order = initial_order(ins, cm, m, cfg);
        CHECK(is_permutation_of_range(order, ins.n_bottom));
        CHECK(respects_fixed(m, order));
    }
    CHECK(with_arcs >= 50);  // the property must actually get exercised
}
