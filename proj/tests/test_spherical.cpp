#include "ascheme/errors.hpp"
#include "ascheme/generators.hpp"
#include "ascheme/spherical.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace ascheme;

TEST_CASE("absolute bound agrees with Pascal's triangle")
{
    const auto t = oracle::pascal(70);
    for (unsigned m = 1; m <= 30; ++m)
        for (unsigned d = 1; d <= 30; ++d)
            CHECK(absolute_bound(m, d) == t[m + d - 1][d] + t[m + d - 2][d - 1]);
    CHECK(absolute_bound(2, 1) == 3);
    CHECK(absolute_bound(5, 1) == 6);
    CHECK(absolute_bound(6, 2) == 27);
    CHECK_THROWS_AS(absolute_bound(1000000, 40), OverflowError);
}

TEST_CASE("Gram ingestion")
{
    const auto set = from_gram(SymMatrix::from_rows(oracle::polygon_gram(5)));
    CHECK(set.dimension == 2);
    REQUIRE(set.distance_count() == 2);
    CHECK(set.values[1] == doctest::Approx(std::cos(2.0 * std::numbers::pi / 5.0)));
    CHECK(set.values[2] == doctest::Approx(std::cos(4.0 * std::numbers::pi / 5.0)));
    CHECK_THROWS_AS(from_gram(SymMatrix::from_rows({{1, 2}, {2, 1}})), Error);
    CHECK_THROWS_AS(from_gram(SymMatrix::from_rows({{2, 0}, {0, 1}})), Error);
    CHECK_THROWS_AS(from_gram(SymMatrix::from_rows({{1, 1}, {1, 1}})), Error);
}

TEST_CASE("K* and the annihilating polynomial")
{
    const auto set = from_gram(SymMatrix::from_rows(oracle::polygon_gram(5)));
    CHECK(k_star(set.values, 1) == doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0));
    const auto c = f_star_coefficients(set.values, 1);
    const auto lhs = eval_matrix_poly(c, set.gram, PolyMode::Hadamard);
    const auto rhs = k_star(set.values, 1) * SymMatrix::identity(5) + set.relation_adjacency(1, kDefaultTol);
    CHECK(max_abs_diff(lhs, rhs) < 1e-12);
}

TEST_CASE("Schur-diameter")
{
    CHECK(schur_diameter(SymMatrix::identity(6)) == 1);
    CHECK(schur_diameter(SymMatrix::from_rows(oracle::polygon_gram(5))) == 2);
    const auto s = analyze_explicit(build_scheme({Family::Petersen, {}}));
    CHECK(schur_diameter(2.0 * s.idempotents[1]) == 2);
    const auto h = analyze_explicit(build_scheme({Family::Hamming, {3, 2}}));
    CHECK(schur_diameter(from_idempotent(h.idempotents[1]).gram) == 3);
    CHECK_THROWS_AS(schur_diameter(SymMatrix::ones(4)), Error);
}

TEST_CASE("forced eigenvalue theorem")
{
    SUBCASE("pentagon")
    {
        const auto r = verify_sphere_theorem(from_gram(SymMatrix::from_rows(oracle::polygon_gram(5))));
        CHECK(r.status == Status::Pass);
        const auto& c = r.evidence["classes"][0];
        CHECK(c["eigenvalue"].get<double>() == doctest::Approx(-(1.0 + std::sqrt(5.0)) / 2.0));
        CHECK(c["multiplicity"].get<int>() == 2);
        CHECK(r.evidence["multiplicity_required"].get<int>() == 2);
    }
    SUBCASE("Petersen first idempotent")
    {
        const auto s = analyze_explicit(build_scheme({Family::Petersen, {}}));
        const auto set = from_idempotent(s.idempotents[1]);
        CHECK(set.dimension == 5);
        const auto r = verify_sphere_theorem(set);
        CHECK(r.status == Status::Pass);
        const auto& c = r.evidence["classes"][0];
        CHECK(c["eigenvalue"].get<double>() == doctest::Approx(-2.0));
        CHECK(c["multiplicity"].get<int>() == 4);
        CHECK(c["f_star_residual"].get<double>() <= 1e-7);
    }
    SUBCASE("Schur route")
    {
        const auto r = verify_sphere_theorem(from_gram(SymMatrix::from_rows(oracle::polygon_gram(5))), kDefaultTol,
                                             SphereRoute::SchurDiameter);
        CHECK(r.status == Status::Pass);
        CHECK(r.theorem == "sphere-eigenvalue");
    }
    SUBCASE("size hypothesis")
    {
        // regular hexagon: 3 inner products, N(2,2) = 5 < 6
        const auto r = verify_sphere_theorem(from_gram(SymMatrix::from_rows(oracle::polygon_gram(6))));
        CHECK(r.status != Status::Fail);
        const auto small = verify_sphere_theorem(from_gram(SymMatrix::identity(3)), kDefaultTol, SphereRoute::Size, 1);
        CHECK(small.status != Status::Fail);
    }
}

TEST_CASE("regular simplex from K_n")
{
    const auto s = analyze_explicit(build_scheme({Family::Complete, {6}}));
    const auto set = from_idempotent(s.idempotents[1]);
    CHECK(set.dimension == 5);
    REQUIRE(set.distance_count() == 1);
    CHECK(set.values[1] == doctest::Approx(-1.0 / 5.0));
    CHECK(k_star(set.values, 1) == doctest::Approx(1.0));
    const auto r = verify_sphere_theorem(set);
    CHECK(r.status == Status::Pass);
    CHECK(r.evidence["classes"][0]["multiplicity"].get<int>() == 5);
}

TEST_CASE("idempotent embeddings carry Q_j(i) / m_j")
{
    for (const auto spec : {FamilySpec{Family::Johnson, {7, 3}}, FamilySpec{Family::Petersen, {}}}) {
        CAPTURE(spec.name());
        const auto s = analyze_explicit(build_scheme(spec));
        const auto set = from_idempotent(s.idempotents[1]);
        const auto again = from_gram(set.gram);
        CHECK(again.values == set.values);
        const double m = s.params.multiplicities[1];
        for (int i = 1; i <= s.params.d; ++i) {
            const double target = s.params.q_val(1, i) / m;
            bool found = false;
            for (double v : set.values)
                found = found || std::abs(v - target) < 1e-9;
            CHECK(found);
        }
    }
}
