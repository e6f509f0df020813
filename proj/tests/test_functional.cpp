#include <random>

#include "doctest.h"
#include "netrob/error.hpp"
#include "netrob/functional.hpp"
#include "netrob/generators.hpp"
#include "support.hpp"

using namespace netrob;

TEST_CASE("lcc examples") {
    const Graph g = k4();
    CHECK(lcc(g, apply_attack(g, RemovalMask(g), {TargetKind::Node, 0})) == 3);
    const Graph s = star4();
    CHECK(lcc(s, apply_attack(s, RemovalMask(s), {TargetKind::Node, 0})) == 1);
    const Graph e = make(3, {});
    RemovalMask m(e);
    CHECK(lcc(e, m) == 1);
    for (NodeId v = 0; v < 3; ++v) m.remove_node(e, v);
    CHECK(lcc(e, m) == 0);
}

TEST_CASE("MIT driver nodes examples") {
    const Graph chain = make(4, {{0, 1}, {1, 2}, {2, 3}}, true);
    CHECK(maximum_matching_size(chain, RemovalMask(chain)) == 3);
    CHECK(driver_nodes_mit(chain, RemovalMask(chain)) == 1);
    const Graph iso = make(4, {}, true);
    CHECK(driver_nodes_mit(iso, RemovalMask(iso)) == 4);
    const Graph sso = canonical4("SSO", true);
    CHECK(maximum_matching_size(sso, RemovalMask(sso)) == 1);
    CHECK(driver_nodes_mit(sso, RemovalMask(sso)) == 3);
    CHECK_THROWS_AS(driver_nodes_mit(k4(), RemovalMask(k4())), GraphKindError);
}

TEST_CASE("ECT driver nodes examples") {
    CHECK(adjacency_rank(k4(), RemovalMask(k4())) == 4);
    CHECK(driver_nodes_ect(k4(), RemovalMask(k4())) == 1);
    const Graph e = make(4, {});
    CHECK(driver_nodes_ect(e, RemovalMask(e)) == 4);
    CHECK(adjacency_rank(c4(), RemovalMask(c4())) == 2);
    CHECK(driver_nodes_ect(c4(), RemovalMask(c4())) == 2);
}

TEST_CASE("cnp examples") {
    const Graph g = k4();
    CHECK(cnp(g, RemovalMask(g)).exact == 6);
    CHECK(cnp(g, apply_attack(g, RemovalMask(g), {TargetKind::Node, 0})).exact == 3);
    const Graph two = make(4, {{0, 1}, {2, 3}});
    const auto c = cnp(two, RemovalMask(two));
    CHECK(c.exact == 2);
    CHECK(c.squared == 8);
}

TEST_CASE("sample computes only requested fields") {
    const Graph g = k4();
    const auto s = sample(g, RemovalMask(g), MeasureSet::connectivity());
    CHECK(s.lcc == 4u);
    CHECK(s.ncc == 1u);
    CHECK_FALSE(s.drivers_ect.has_value());
    CHECK(s.alive == 4);
    CHECK_THROWS_AS(sample(g, RemovalMask(g), MeasureSet{false, false, false, false, false}), ParameterError);
    CHECK_THROWS_AS(sample(g, RemovalMask(g), MeasureSet{false, false, false, true, false}), GraphKindError);
}

TEST_CASE("MIT matches exhaustive matching search") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const auto og = oracle::random_graph(rng, n, 0.35, true);
        const Graph g = to_graph(og);
        const int m = oracle::max_matching_bruteforce(og);
        CHECK(maximum_matching_size(g, RemovalMask(g)) == static_cast<std::size_t>(m));
        CHECK(driver_nodes_mit(g, RemovalMask(g)) == static_cast<std::size_t>(std::max(1, n - m)));
    }
}

TEST_CASE("MIT never decreases when an arc is removed") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const auto og = oracle::random_graph(rng, 8, 0.3, true);
        const Graph g = to_graph(og);
        if (g.edge_count() == 0) continue;
        const auto before = driver_nodes_mit(g, RemovalMask(g));
        const auto e = static_cast<EdgeId>(rng() % g.edge_count());
        CHECK(driver_nodes_mit(g, apply_attack(g, RemovalMask(g), {TargetKind::Edge, e})) >= before);
    }
}

TEST_CASE("adjacency rank matches rational elimination") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 30);
        const auto og = oracle::random_graph(rng, n, 0.1 + 0.05 * (trial % 8), trial % 2 == 1);
        const Graph g = to_graph(og);
        CHECK(adjacency_rank(g, RemovalMask(g)) == static_cast<std::size_t>(oracle::adjacency_rank(og)));
    }
}
