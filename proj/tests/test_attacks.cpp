#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "netrob/apriori.hpp"
#include "netrob/attacks.hpp"
#include "netrob/engine.hpp"
#include "netrob/error.hpp"
#include "netrob/generators.hpp"
#include "support.hpp"

using namespace netrob;
using doctest::Approx;

namespace {
AttackPlan plan_of(Strategy s, TargetKind t = TargetKind::Node) {
    AttackPlan p;
    p.strategy = s;
    p.target = t;
    return p;
}
}  // namespace

TEST_CASE("MDTA and MBTA picks") {
    Rng rng(1);
    const Graph p4 = path4();
    CHECK(next_target(plan_of(Strategy::MDTA), p4, RemovalMask(p4), rng) == 1);
    const Graph s = star4();
    CHECK(next_target(plan_of(Strategy::MDTA), s, RemovalMask(s), rng) == 0);
    CHECK(next_target(plan_of(Strategy::MBTA), s, RemovalMask(s), rng) == 0);
    CHECK(next_target(plan_of(Strategy::MBTA, TargetKind::Edge), s, RemovalMask(s), rng) == 0);
    CHECK(next_target(plan_of(Strategy::MBTA), p4, RemovalMask(p4), rng) == 1);
}

TEST_CASE("directed MDTA degree kinds") {
    // 0 has out-degree 2, 3 has in-degree 3.
    const Graph g = make(4, {{0, 1}, {0, 3}, {1, 3}, {2, 3}}, true);
    Rng rng(1);
    AttackPlan p = plan_of(Strategy::MDTA);
    p.degree = DegreeKind::Out;
    CHECK(next_target(p, g, RemovalMask(g), rng) == 0);
    p.degree = DegreeKind::In;
    CHECK(next_target(p, g, RemovalMask(g), rng) == 3);
    p.degree = DegreeKind::Total;
    CHECK(next_target(p, g, RemovalMask(g), rng) == 3);
    CHECK_THROWS_AS(parse_degree_kind("sideways"), ParameterError);
}

TEST_CASE("no alive target") {
    const Graph g = k4();
    RemovalMask mask(g);
    for (NodeId v = 0; v < 4; ++v) mask.remove_node(g, v);
    Rng rng(1);
    CHECK_THROWS_AS(next_target(plan_of(Strategy::MDTA), g, mask, rng), NoTargetError);
    CHECK_THROWS_AS(next_target(plan_of(Strategy::Random), g, mask, rng), NoTargetError);
}

TEST_CASE("damage-greedy examples") {
    CHECK(damage_greedy_target(star4(), RemovalMask(star4())) == 0);
    CHECK(damage_greedy_target(k4(), RemovalMask(k4())) == 0);
    CHECK(damage_greedy_target(path4(), RemovalMask(path4())) == 1);
}

TEST_CASE("controllability-critical examples") {
    const Graph chain = make(4, {{0, 1}, {1, 2}, {2, 3}}, true);
    CHECK(critical_ctrl_target(chain, RemovalMask(chain)) == 0);
    std::vector<Edge> full;
    for (NodeId u = 0; u < 4; ++u)
        for (NodeId v = 0; v < 4; ++v)
            if (u != v) full.push_back({u, v});
    const Graph dk4 = make(4, full, true);
    CHECK(critical_ctrl_target(dk4, RemovalMask(dk4)) == 0);
    const Graph single = make(3, {{0, 1}}, true);
    CHECK(critical_ctrl_target(single, RemovalMask(single)) == 0);
    // Arc 0 is redundant here: 0->2 and 2->1 still match two nodes without it.
    const Graph alt = make(3, {{0, 1}, {2, 1}, {0, 2}}, true);
    CHECK(critical_ctrl_target(alt, RemovalMask(alt)) == 1);
    CHECK_THROWS_AS(critical_ctrl_target(k4(), RemovalMask(k4())), GraphKindError);
}

TEST_CASE("critical arcs match brute-force matching drops") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        auto og = oracle::random_graph(rng, n, 0.4, true);
        if (og.edges.empty()) continue;
        const Graph g = to_graph(og);
        auto drivers = [n](const oracle::SmallGraph& h) { return std::max(1, n - oracle::max_matching_bruteforce(h)); };
        const int base = drivers(og);
        std::optional<std::size_t> first;
        for (std::size_t e = 0; e < og.edges.size() && !first; ++e) {
            auto h = og;
            h.edges.erase(h.edges.begin() + static_cast<long>(e));
            if (drivers(h) > base) first = e;
        }
        CHECK(critical_ctrl_target(g, RemovalMask(g)) == first.value_or(0));
    }
}

TEST_CASE("weighted probabilities") {
    const Graph s = star4();
    AttackPlan p = plan_of(Strategy::WeightedProb);
    p.alpha = {1.0, 0.0};
    auto pr = attack_probabilities(p, s, RemovalMask(s));
    CHECK(pr[0] == Approx(0.5));
    CHECK(pr[1] == Approx(1.0 / 6.0));
    p.alpha = {0.0, 1.0};
    pr = attack_probabilities(p, s, RemovalMask(s));
    CHECK(pr[0] == Approx(1.0));
    p.alpha = {0.5, 0.5};
    for (double x : attack_probabilities(p, k4(), RemovalMask(k4()))) CHECK(x == Approx(0.25));
    // All-zero features fall back to uniform over the alive nodes.
    const Graph iso = make(4, {});
    RemovalMask m(iso);
    m.remove_node(iso, 2);
    pr = attack_probabilities(p, iso, m);
    CHECK(pr[2] == 0.0);
    CHECK(pr[0] == Approx(1.0 / 3.0));
    p.alpha = {0.7, 0.7};
    CHECK_THROWS_AS(validate(p, s), ParameterError);
}

TEST_CASE("weighted draws pass a chi-square test") {
    const Graph g = make(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {3, 4}});
    AttackPlan p = plan_of(Strategy::WeightedProb);
    p.alpha = {0.6, 0.4};
    const RemovalMask mask(g);
    const auto pr = attack_probabilities(p, g, mask);
    Rng rng(7);
    const int draws = 100000;
    std::vector<int> hits(5, 0);
    for (int i = 0; i < draws; ++i) ++hits[weighted_prob_target(p, g, mask, rng)];
    double chi2 = 0.0;
    for (int j = 0; j < 5; ++j) {
        const double expect = pr[j] * draws;
        const double sd = std::sqrt(draws * pr[j] * (1.0 - pr[j]));
        CHECK(std::abs(hits[j] - expect) <= 3.0 * sd);
        chi2 += (hits[j] - expect) * (hits[j] - expect) / expect;
    }
    // Upper 0.1% point of chi-square with 4 degrees of freedom.
    CHECK(chi2 < 18.47);
}

TEST_CASE("exhaustive enumeration") {
    ExaEnumerator four(4, std::nullopt, 1);
    CHECK(four.exact());
    CHECK(four.count() == 24);
    AttackSequence seq;
    std::set<AttackSequence> seen;
    AttackSequence prev;
    while (four.next(seq)) {
        if (!seen.empty()) CHECK(prev < seq);
        prev = seq;
        seen.insert(seq);
    }
    CHECK(seen.size() == 24);
    CHECK(ExaEnumerator(1, std::nullopt, 1).count() == 1);
    CHECK_THROWS_AS(ExaEnumerator(9, std::nullopt, 1), ParameterError);
    ExaEnumerator sampled(9, 50, 3);
    CHECK_FALSE(sampled.exact());
    std::size_t got = 0;
    while (sampled.next(seq)) {
        CHECK(std::set<std::uint32_t>(seq.begin(), seq.end()).size() == 9);
        ++got;
    }
    CHECK(got == 50);
}

TEST_CASE("positive scores are always taken before zero scores") {
    for (Strategy s : {Strategy::MDTA, Strategy::MBTA}) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            GeneratorConfig c;
            c.model = Model::ER;
            c.n = 60;
            c.mean_degree = 3;
            c.seed = seed;
            const Graph g = generate(c);
            Rng rng(seed);
            TargetSelector sel(g, plan_of(s));
            RemovalMask mask(g);
            while (mask.alive_nodes() > 0) {
                const NodeId v = sel.next(mask, rng);
                CHECK(mask.node_alive(v));
                if (s == Strategy::MDTA) {
                    // Degree zero means isolated, so MDTA clears every edge first.
                    if (degree(g, mask, v) == 0) CHECK(mask.alive_edges() == 0);
                } else if (betweenness(g, mask).node[v] == 0.0) {
                    for (double b : betweenness(g, mask).node) CHECK(b == 0.0);
                }
                mask.remove_node(g, v);
            }
        }
    }
}

// A dyad has zero betweenness, same as an isolated node, so MBTA may take an
// isolated node while dyads survive. The smallest-id order among the zeros is
// what the 4-node rank tables rely on.
TEST_CASE("MBTA on a path takes the stray end before the dyad") {
    const Graph p4 = path4();
    const auto t = run_trace(p4, plan_of(Strategy::MBTA), MeasureSet::connectivity());
    CHECK(t.sequence == AttackSequence{1, 0, 2, 3});
}

TEST_CASE("fixed seeds give identical sequences") {
    GeneratorConfig c;
    c.model = Model::BA;
    c.n = 80;
    c.mean_degree = 4;
    const Graph g = generate(c);
    for (Strategy s : {Strategy::Random, Strategy::MDTA, Strategy::MBTA, Strategy::DamageLcc, Strategy::WeightedProb}) {
        AttackPlan p = plan_of(s);
        p.tie = TieBreak::Random;
        p.seed = 11;
        if (s == Strategy::WeightedProb) p.alpha = {0.5, 0.5};
        const auto a = run_trace(g, p, MeasureSet::connectivity()).sequence;
        const auto b = run_trace(g, p, MeasureSet::connectivity()).sequence;
        CHECK(a == b);
        CHECK(std::set<std::uint32_t>(a.begin(), a.end()).size() == a.size());
    }
}

TEST_CASE("plan validation") {
    CHECK_THROWS_AS(validate(plan_of(Strategy::CriticalCtrl, TargetKind::Node), make(3, {{0, 1}}, true)),
                    ParameterError);
    CHECK_THROWS_AS(validate(plan_of(Strategy::EXA), generate(GeneratorConfig{Model::ER, 9, 2, false, {}, 1})),
                    ParameterError);
    CHECK_THROWS_AS(parse_strategy("nope"), ParameterError);
    CHECK(parse_strategy("wprob") == Strategy::WeightedProb);
}
