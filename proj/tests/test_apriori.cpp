#include <cmath>
#include <random>

#include "doctest.h"
#include "netrob/apriori.hpp"
#include "netrob/error.hpp"
#include "netrob/generators.hpp"
#include "netrob/linalg.hpp"
#include "support.hpp"

using namespace netrob;
using doctest::Approx;

TEST_CASE("efficiency examples") {
    CHECK(efficiency(k4()) == Approx(1.0));
    CHECK(efficiency(path4()) == Approx(13.0 / 18.0));
    CHECK(efficiency(make(4, {})) == Approx(0.0));
    CHECK_THROWS_AS(efficiency(make(1, {})), ParameterError);
}

TEST_CASE("betweenness examples") {
    CHECK(betweenness(star4()).node[0] == Approx(3.0));
    CHECK(betweenness(path4()).node[1] == Approx(2.0));
    const auto r = apriori(make(4, {}));
    CHECK_FALSE(r.nb.has_value());
    CHECK_FALSE(r.eb.has_value());
}

TEST_CASE("betweenness agrees with all-pairs path counting") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const auto og = oracle::random_graph(rng, n, 0.4, trial % 2 == 0);
        const Graph g = to_graph(og);
        const auto got = betweenness(g);
        const auto want = oracle::betweenness(og);
        for (int v = 0; v < n; ++v) CHECK(got.node[v] == Approx(want.node[v]).epsilon(1e-9));
        for (std::size_t e = 0; e < og.edges.size(); ++e) CHECK(got.edge[e] == Approx(want.edge[e]).epsilon(1e-9));
    }
}

TEST_CASE("clustering examples") {
    CHECK(clustering(k4()) == Approx(1.0));
    CHECK(clustering(star4()) == Approx(0.0));
    CHECK(clustering(canonical4("CTS", false)) == Approx(7.0 / 12.0));
}

TEST_CASE("spectral examples") {
    const auto s = spectral(k4());
    CHECK(s.spectral_radius == Approx(3.0));
    CHECK(s.spectral_gap == Approx(4.0));
    CHECK(s.algebraic_connectivity == Approx(4.0));
    CHECK(s.spanning_trees_exact == 16u);
    CHECK(std::exp(*s.spanning_trees_log) == Approx(16.0));
    CHECK(*s.effective_resistance == Approx(3.0));
    CHECK(s.natural_connectivity == Approx(std::log((std::exp(3.0) + 3.0 * std::exp(-1.0)) / 4.0)));

    const auto c = spectral(c4());
    CHECK(c.spectral_radius == Approx(2.0));
    CHECK(c.spectral_gap == Approx(2.0));
    CHECK(c.algebraic_connectivity == Approx(2.0));
    CHECK(c.spanning_trees_exact == 4u);

    const auto iso = spectral(make(4, {}));
    CHECK(iso.spectral_radius == Approx(0.0));
    CHECK(iso.algebraic_connectivity == Approx(0.0));
    CHECK_FALSE(iso.effective_resistance.has_value());
    CHECK_FALSE(iso.spanning_trees_log.has_value());

    CHECK_THROWS_AS(spectral(make(3, {{0, 1}}, true)), GraphKindError);
    const auto dir = apriori(make(3, {{0, 1}, {1, 2}}, true));
    CHECK_FALSE(dir.as_sr.has_value());
    CHECK(dir.eff.has_value());
}

TEST_CASE("Jacobi eigendecomposition reconstructs the matrix") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + rng() % 25;
        DenseMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = u(rng);
        const auto e = jacobi_eigen(a);
        for (std::size_t i = 1; i < n; ++i) CHECK(e.values[i - 1] >= e.values[i]);
        double err = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                double x = 0.0;
                for (std::size_t k = 0; k < n; ++k) x += e.vectors(i, k) * e.values[k] * e.vectors(j, k);
                err += (x - a(i, j)) * (x - a(i, j));
            }
        CHECK(std::sqrt(err) <= 1e-8 * static_cast<double>(n) * a.max_abs());
    }
}

TEST_CASE("spanning tree count matches Laplacian cofactor") {
    std::mt19937_64 rng(29);
    int checked = 0;
    while (checked < 60) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const auto og = oracle::random_graph(rng, n, 0.5, false);
        const Graph g = to_graph(og);
        const auto s = spectral(g);
        const auto want = oracle::spanning_trees(og);
        REQUIRE(s.spanning_trees_exact.has_value());
        CHECK(oracle::Rational(*s.spanning_trees_exact) == want);
        if (want > 0) CHECK(std::exp(*s.spanning_trees_log) == Approx(static_cast<double>(want)).epsilon(1e-9));
        ++checked;
    }
}

TEST_CASE("numeric rank matches rational rank on signed matrices") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng() % 50;
        DenseMatrix a(n, n);
        std::vector<std::vector<oracle::Rational>> r(n, std::vector<oracle::Rational>(n));
        // Sparse rows make rank deficiency common.
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const int x = rng() % 10 == 0 ? (rng() % 2 ? 1 : -1) : 0;
                a(i, j) = x;
                r[i][j] = x;
            }
        CHECK(numeric_rank(a) == static_cast<std::size_t>(oracle::rank_rational(r)));
    }
}

TEST_CASE("natural connectivity does not drop when an edge is added") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 29);
        auto og = oracle::random_graph(rng, n, 0.15, false);
        const double before = spectral(to_graph(og)).natural_connectivity;
        const auto a = og.matrix();
        for (int tries = 0; tries < 50; ++tries) {
            const int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
            if (u != v && !a[u][v]) {
                og.edges.emplace_back(std::min(u, v), std::max(u, v));
                break;
            }
        }
        CHECK(spectral(to_graph(og)).natural_connectivity >= before - 1e-12);
    }
}
