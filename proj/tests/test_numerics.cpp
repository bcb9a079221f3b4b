#include "ascheme/errors.hpp"
#include "ascheme/numerics.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

using namespace ascheme;

namespace {

SymMatrix cycle_adjacency(std::size_t n)
{
    SymMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        a.set(i, (i + 1) % n, 1.0);
    return a;
}

SymMatrix random_symmetric(std::size_t n, std::mt19937_64& gen)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            m.set(i, j, u(gen));
    return m;
}

} // namespace

TEST_CASE("construction symmetrizes and rejects bad input")
{
    auto m = SymMatrix::from_rows({{1, 2}, {4, 3}});
    CHECK(m(0, 1) == doctest::Approx(3.0));
    CHECK(m(1, 0) == m(0, 1));
    CHECK_THROWS_AS(SymMatrix::from_rows({{1, 2}, {3}}), Error);
    CHECK_THROWS_AS(SymMatrix::from_rows({{1, NAN}, {NAN, 1}}), Error);
}

TEST_CASE("hadamard power conventions")
{
    auto m = SymMatrix::from_rows({{2, -1}, {-1, 3}});
    CHECK(hadamard_power(m, 0) == SymMatrix::ones(2));
    CHECK(hadamard_power(SymMatrix::identity(4), 2) == SymMatrix::identity(4));
    CHECK(hadamard_power(m, 3)(0, 1) == doctest::Approx(-1.0));
    CHECK(hadamard_power(m, 3)(1, 1) == doctest::Approx(27.0));
}

TEST_CASE("hadamard power of the pentagon Gram")
{
    const auto g = SymMatrix::from_rows(oracle::polygon_gram(5));
    const auto sq = hadamard_power(g, 2);
    const double c1 = std::cos(2.0 * std::numbers::pi / 5.0), c2 = std::cos(4.0 * std::numbers::pi / 5.0);
    CHECK(sq(0, 0) == doctest::Approx(1.0));
    CHECK(sq(0, 1) == doctest::Approx(c1 * c1));
    CHECK(sq(0, 2) == doctest::Approx(c2 * c2));
}

TEST_CASE("hadamard power additivity is exact")
{
    std::mt19937_64 gen(7);
    std::uniform_int_distribution<int> small(-3, 3);
    for (int trial = 0; trial < 5; ++trial) {
        SymMatrix m(6);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = i; j < 6; ++j)
                m.set(i, j, small(gen));
        for (unsigned a = 0; a < 4; ++a)
            for (unsigned b = 0; b < 4; ++b)
                CHECK(hadamard_power(m, a + b) == hadamard_product(hadamard_power(m, a), hadamard_power(m, b)));
        const auto r = random_symmetric(6, gen);
        for (unsigned a = 0; a < 4; ++a)
            for (unsigned b = 0; b < 4; ++b)
                CHECK(max_abs_diff(hadamard_power(r, a + b), hadamard_product(hadamard_power(r, a), hadamard_power(r, b))) < 1e-15);
    }
}

TEST_CASE("matrix polynomial constant and identity terms")
{
    std::mt19937_64 gen(3);
    const auto m = random_symmetric(5, gen);
    const std::vector<double> one{1.0}, x{0.0, 1.0};
    CHECK(eval_matrix_poly(one, m, PolyMode::Ordinary) == SymMatrix::identity(5));
    CHECK(eval_matrix_poly(one, m, PolyMode::Hadamard) == SymMatrix::ones(5));
    CHECK(max_abs_diff(eval_matrix_poly(x, m, PolyMode::Ordinary), m) < 1e-15);
    CHECK(max_abs_diff(eval_matrix_poly(x, m, PolyMode::Hadamard), m) < 1e-15);
}

TEST_CASE("ordinary polynomial evaluation commutes with permutation")
{
    std::mt19937_64 gen(11);
    const std::vector<double> coeffs{0.5, -1.0, 2.0, 0.25};
    for (int trial = 0; trial < 10; ++trial) {
        const auto m = random_symmetric(7, gen);
        std::vector<std::size_t> perm(7);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), gen);
        const auto lhs = eval_matrix_poly(coeffs, m.permuted(perm), PolyMode::Ordinary);
        const auto rhs = eval_matrix_poly(coeffs, m, PolyMode::Ordinary).permuted(perm);
        CHECK(max_abs_diff(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("poly_from_roots expands products")
{
    const std::vector<double> roots{1.0, -2.0};
    const auto c = poly_from_roots(roots, 3.0);
    REQUIRE(c.size() == 3);
    CHECK(c[0] == doctest::Approx(-6.0));
    CHECK(c[1] == doctest::Approx(3.0));
    CHECK(c[2] == doctest::Approx(3.0));
}

TEST_CASE("Jacobi eigenpairs reconstruct the matrix")
{
    std::mt19937_64 gen(5);
    const auto m = random_symmetric(8, gen);
    const auto r = jacobi_eigen(m, true);
    REQUIRE(std::is_sorted(r.values.begin(), r.values.end()));
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            double acc = 0.0;
            for (std::size_t t = 0; t < 8; ++t)
                acc += r.values[t] * r.vectors[t * 8 + i] * r.vectors[t * 8 + j];
            CHECK(acc == doctest::Approx(m(i, j)).epsilon(1e-10));
        }
}

TEST_CASE("cycle spectra match the circulant formula")
{
    for (std::size_t n : {5u, 6u, 7u}) {
        auto ev = eigenvalues(cycle_adjacency(n));
        std::vector<double> expect;
        for (std::size_t t = 0; t < n; ++t)
            expect.push_back(2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(n)));
        std::sort(expect.begin(), expect.end());
        for (std::size_t i = 0; i < n; ++i)
            CHECK(ev[i] == doctest::Approx(expect[i]).epsilon(1e-12));
    }
}

TEST_CASE("clustering snaps integers and orders decreasing")
{
    const auto c = eigen_clusters(SymMatrix::ones(4) - SymMatrix::identity(4));
    REQUIRE(c.count() == 2);
    CHECK(c.values[0] == 3.0);
    CHECK(c.values[1] == -1.0);
    CHECK(c.multiplicities[0] == 1);
    CHECK(c.multiplicities[1] == 3);
    CHECK(c.total() == 4);
}

TEST_CASE("clustering flags ambiguous gaps")
{
    CHECK_THROWS_AS(cluster_values({0.0, 1.5e-9, 5.0}, 1e-9), ToleranceAmbiguity);
    CHECK(cluster_values({0.0, 0.5e-9, 5.0}, 1e-9).count() == 2);
    CHECK(cluster_values({0.0, 3e-9, 5.0}, 1e-9).count() == 3);
}

TEST_CASE("rank plus kernel dimension is n")
{
    std::mt19937_64 gen(17);
    std::normal_distribution<double> nd;
    for (std::size_t n : {3u, 6u, 9u}) {
        for (std::size_t r = 0; r <= n; ++r) {
            // sum of r random rank-one terms
            SymMatrix m(n);
            for (std::size_t t = 0; t < r; ++t) {
                std::vector<double> v(n);
                for (double& x : v)
                    x = nd(gen);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = i; j < n; ++j)
                        m.set(i, j, m(i, j) + v[i] * v[j]);
            }
            const auto ev = eigenvalues(m);
            const auto kernel = static_cast<std::size_t>(std::count_if(ev.begin(), ev.end(), [](double x) { return std::abs(x) <= 1e-9; }));
            CHECK(rank_tol(m) == r);
            CHECK(rank_tol(m) + kernel == n);
        }
    }
}

TEST_CASE("binomial agrees with Pascal's triangle")
{
    const auto t = oracle::pascal(60);
    for (int n = 0; n <= 60; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(binomial(n, k) == t[n][k]);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK_THROWS_AS(binomial(200, 100), OverflowError);
}

TEST_CASE("small inverse")
{
    const auto inv = invert_small({2, 1, 1, 1}, 2);
    CHECK(inv[0] == doctest::Approx(1.0));
    CHECK(inv[1] == doctest::Approx(-1.0));
    CHECK(inv[3] == doctest::Approx(2.0));
    CHECK_THROWS_AS(invert_small({1, 2, 2, 4}, 2), Error);
}
