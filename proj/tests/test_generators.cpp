#include "ascheme/errors.hpp"
#include "ascheme/generators.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace ascheme;

TEST_CASE("family names and domains")
{
    for (auto f : {Family::Cycle, Family::Complete, Family::Petersen, Family::HoffmanSingleton, Family::Paley,
                   Family::Johnson, Family::Hamming})
        CHECK(family_from_name(family_name(f)) == f);
    CHECK_THROWS_AS(family_from_name("dodecahedron"), DomainError);
    CHECK_THROWS_AS(parse_family("cycle", {2}), DomainError);
    CHECK_THROWS_AS(parse_family("paley", {7}), DomainError);
    CHECK_THROWS_AS(parse_family("paley", {15}), DomainError);
    CHECK_THROWS_AS(parse_family("johnson", {3, 3}), DomainError);
    CHECK_THROWS_AS(parse_family("hamming", {2, 1}), DomainError);
    CHECK(parse_family("johnson", {51, 3}).point_count() == 20825);
}

TEST_CASE("small constructions")
{
    const auto k4 = build_graph({Family::Complete, {4}});
    CHECK(k4.order() == 4);
    CHECK(k4.edge_count() == 6);
    const auto pet = build_graph({Family::Petersen, {}});
    CHECK(pet.order() == 10);
    CHECK(pet.edge_count() == 15);
    CHECK(pet.regular_degree() == 3);
    const auto h32 = build_scheme({Family::Hamming, {3, 2}});
    CHECK(h32.order() == 8);
    CHECK(h32.classes() == 3);
}

TEST_CASE("Hoffman-Singleton graph")
{
    const auto g = build_graph({Family::HoffmanSingleton, {}});
    CHECK(g.order() == 50);
    CHECK(g.regular_degree() == 7);
    CHECK(girth(g) == 5);
    CHECK(distance_data(g).diameter() == 2);
    // Moore graph: A^2 + A - 6I = J
    std::vector<std::vector<std::int64_t>> a(50, std::vector<std::int64_t>(50, 0));
    for (auto [u, v] : g.edges())
        a[u][v] = a[v][u] = 1;
    const auto a2 = oracle::int_product(a, a);
    for (int x = 0; x < 50; ++x)
        for (int y = 0; y < 50; ++y)
            CHECK(a2[x][y] + a[x][y] - (x == y ? 6 : 0) == 1);
}

TEST_CASE("Paley graph is strongly regular")
{
    const auto g = build_graph({Family::Paley, {13}});
    CHECK(g.regular_degree() == 6);
    const auto dd = distance_data(g);
    for (int x = 0; x < 13; ++x)
        for (int y = x + 1; y < 13; ++y) {
            int common = 0;
            for (int z : g.neighbors(x))
                common += g.has_edge(z, y) ? 1 : 0;
            CHECK(common == (g.has_edge(x, y) ? 2 : 3));
        }
    CHECK(dd.diameter() == 2);
}

TEST_CASE("dense limit")
{
    CHECK_THROWS_AS(build_graph({Family::Hamming, {4, 10}}, 5000), GraphError);
    CHECK_NOTHROW(build_graph({Family::Cycle, {20}}, 20));
    CHECK_THROWS_AS(build_graph({Family::Cycle, {21}}, 20), GraphError);
}

TEST_CASE("combinatorial intersection numbers equal brute-force counts")
{
    for (const auto spec : {FamilySpec{Family::Johnson, {6, 2}}, FamilySpec{Family::Johnson, {7, 3}},
                            FamilySpec{Family::Johnson, {8, 3}}, FamilySpec{Family::Hamming, {3, 2}},
                            FamilySpec{Family::Hamming, {3, 3}}, FamilySpec{Family::Hamming, {4, 2}}}) {
        CAPTURE(spec.name());
        const auto rel = build_scheme(spec);
        const auto p = family_intersection_numbers(spec);
        const int d = rel.classes();
        REQUIRE(p.classes() == d);
        auto label = [&](int x, int y) { return rel(x, y); };
        for (int k = 0; k <= d; ++k) {
            const auto [x, y] = rel.representative(k);
            for (int i = 0; i <= d; ++i)
                for (int j = 0; j <= d; ++j)
                    CHECK(p(i, j, k) == oracle::count_paths(rel.order(), label, x, y, i, j));
        }
        CHECK(p == validate_scheme(rel));
    }
}

TEST_CASE("closed forms")
{
    SUBCASE("J(n,3) first relation")
    {
        for (int n = 6; n <= 60; ++n) {
            const auto cf = closed_form({Family::Johnson, {n, 3}});
            CHECK(cf.points == oracle::choose(n, 3));
            CHECK(cf.degrees[1] == 3 * (n - 3));
            CHECK(cf.multiplicities[1] == n - 1);
            for (int j = 0; j <= 3; ++j)
                CHECK(cf.first_eigenvalues[static_cast<std::size_t>(j)] == oracle::eberlein(n, 3, 1, j));
        }
    }
    SUBCASE("H(3,q)")
    {
        for (int q = 2; q <= 12; ++q) {
            const auto cf = closed_form({Family::Hamming, {3, q}});
            CHECK(cf.points == static_cast<std::uint64_t>(q * q * q));
            CHECK(cf.degrees[1] == 3 * (q - 1));
            CHECK(cf.multiplicities[1] == 3 * (q - 1));
            for (int j = 0; j <= 3; ++j)
                CHECK(cf.first_eigenvalues[static_cast<std::size_t>(j)] == oracle::krawtchouk(3, q, 1, j));
        }
    }
    SUBCASE("k > n/2 uses the complement")
    {
        const auto a = closed_form({Family::Johnson, {9, 6}});
        const auto b = closed_form({Family::Johnson, {9, 3}});
        CHECK(a.degrees == b.degrees);
        CHECK(a.multiplicities == b.multiplicities);
    }
}

TEST_CASE("family parameters at large sizes")
{
    const auto p = family_parameters({Family::Johnson, {51, 3}});
    CHECK(p.n == 20825);
    CHECK(p.degrees[1] == 144);
    CHECK(p.multiplicities[1] == 50);
    CHECK(p.pq_deviation() < 1e-6 * static_cast<double>(p.n));
    const auto h = family_parameters({Family::Hamming, {3, 7}});
    CHECK(h.n == 343);
    CHECK(h.p_val(1, 1) == 18 - 7);
}

TEST_CASE("catalog builds")
{
    for (const auto& spec : catalog_graphs()) {
        CAPTURE(spec.name());
        const auto g = build_graph(spec);
        CHECK(static_cast<std::uint64_t>(g.order()) == spec.point_count());
        CHECK(g.regular_degree().has_value());
    }
    for (const auto& spec : catalog_schemes()) {
        CAPTURE(spec.name());
        CHECK_NOTHROW(validate_scheme(build_scheme(spec)));
    }
}
