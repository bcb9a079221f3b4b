#include "ascheme/spherical.hpp"

#include "ascheme/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace ascheme {

namespace {

constexpr std::uint64_t kSchurSeeds[] = {0x243f6a8885a308d3ULL, 0x13198a2e03707344ULL, 0xa4093822299f31d0ULL};

std::vector<double> off_diagonal(const SymMatrix& m)
{
    std::vector<double> v;
    const std::size_t n = m.size();
    v.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            v.push_back(m(i, j));
    return v;
}

} // namespace

SymMatrix SphericalSet::relation_adjacency(std::size_t i, double tol) const
{
    const std::size_t n = size();
    SymMatrix a(n);
    const double target = values.at(i);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            if (std::abs(gram(x, y) - target) <= tol)
                a.set(x, y, 1.0);
    return a;
}

std::uint64_t absolute_bound(std::uint64_t m, unsigned d)
{
    const auto mm = static_cast<std::int64_t>(m);
    const auto dd = static_cast<std::int64_t>(d);
    std::uint64_t sum = 0;
    if (__builtin_add_overflow(binomial(mm + dd - 1, dd), binomial(mm + dd - 2, dd - 1), &sum))
        throw OverflowError("absolute bound overflow");
    return sum;
}

SphericalSet from_gram(const SymMatrix& gram, double tol)
{
    const std::size_t n = gram.size();
    if (n == 0)
        throw Error("not a unit-sphere Gram matrix: empty");
    std::vector<double> data(gram.data().begin(), gram.data().end());
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(data[i * n + i] - 1.0) > tol)
            throw Error("not a unit-sphere Gram matrix: diagonal entry " + std::to_string(i) + " is "
                        + std::to_string(data[i * n + i]));
        data[i * n + i] = 1.0;
    }
    SphericalSet s;
    s.gram = SymMatrix::from_dense(n, std::move(data));
    const auto ev = eigenvalues(s.gram);
    if (ev.front() < -tol)
        throw Error("not a unit-sphere Gram matrix: smallest eigenvalue " + std::to_string(ev.front())
                    + " is negative");
    s.dimension = static_cast<std::size_t>(std::count_if(ev.begin(), ev.end(), [tol](double v) { return v > tol; }));
    s.values = {1.0};
    if (n > 1) {
        const auto clusters = cluster_values(off_diagonal(s.gram), tol);
        if (clusters.values.front() >= 1.0 - tol)
            throw Error("not a unit-sphere Gram matrix: repeated points (inner product 1)");
        s.values.insert(s.values.end(), clusters.values.begin(), clusters.values.end());
    }
    return s;
}

SphericalSet from_idempotent(const SymMatrix& idempotent, double tol)
{
    const double m = idempotent.trace();
    if (m < 0.5)
        throw Error("idempotent has rank 0");
    return from_gram((static_cast<double>(idempotent.size()) / m) * idempotent, tol);
}

double k_star(const std::vector<double>& values, std::size_t i)
{
    if (i < 1 || i >= values.size())
        throw Error("k_star index out of range");
    double k = 1.0;
    for (std::size_t j = 1; j < values.size(); ++j)
        if (j != i)
            k *= (values[0] - values[j]) / (values[i] - values[j]);
    return k;
}

std::vector<double> f_star_coefficients(const std::vector<double>& values, std::size_t i)
{
    std::vector<double> roots;
    double denom = 1.0;
    for (std::size_t j = 1; j < values.size(); ++j)
        if (j != i) {
            roots.push_back(values[j]);
            denom *= values[i] - values[j];
        }
    return poly_from_roots(roots, 1.0 / denom);
}

int schur_diameter(const SymMatrix& m, double tol, std::optional<int> t_max)
{
    const std::size_t n = m.size();
    if (n <= 1)
        return 0;

    // Annihilator certificate: constant diagonal outside the off-diagonal values.
    const auto off = cluster_values(off_diagonal(m), tol);
    const double c = m(0, 0);
    bool constant_diag = true;
    for (std::size_t i = 0; i < n; ++i)
        constant_diag = constant_diag && std::abs(m(i, i) - c) <= tol;
    std::optional<int> cap;
    if (constant_diag && off.find(c, tol) == EigenClusters::npos)
        cap = static_cast<int>(off.count());
    const int limit = t_max.value_or(cap.value_or(static_cast<int>(off.count()) + 1));

    std::vector<SymMatrix> powers{SymMatrix::ones(n)};
    for (int t = 0; t <= limit; ++t) {
        if (cap && t == *cap) {
            std::vector<double> roots(off.values.begin(), off.values.end());
            if (rank_tol(eval_matrix_poly(poly_from_roots(roots), m, PolyMode::Hadamard), tol) == n)
                return t;
        }
        if (t > 0)
            powers.push_back(hadamard_product(powers.back(), m));
        for (std::uint64_t seed : kSchurSeeds) {
            std::mt19937_64 gen(seed + static_cast<std::uint64_t>(t));
            SymMatrix combo(n);
            for (const auto& h : powers) {
                const double mag = 0.5 + static_cast<double>(gen() >> 11) * 0x1.0p-53;
                combo += ((gen() & 1) ? mag : -mag) * h;
            }
            if (rank_tol(combo, tol) == n)
                return t;
        }
    }
    throw Error("Schur-disconnected up to degree limit " + std::to_string(limit));
}

TheoremReport verify_sphere_theorem(const SphericalSet& set, double tol, SphereRoute route,
                                    std::optional<int> declared_d)
{
    TheoremReport r;
    r.subject = std::to_string(set.size()) + " points on S^" + std::to_string(static_cast<long>(set.dimension) - 1);
    r.theorem = route == SphereRoute::Size ? "sphere-eigenvalue-large" : "sphere-eigenvalue";
    r.tolerance = tol;
    const int s = static_cast<int>(set.distance_count());
    const auto n = static_cast<std::uint64_t>(set.size());
    r.evidence["points"] = n;
    r.evidence["dimension"] = set.dimension;
    r.evidence["distance_count"] = s;
    r.evidence["inner_products"] = std::vector<double>(set.values.begin() + 1, set.values.end());
    if (s == 0) {
        r.status = Status::HypothesisNotMet;
        r.reason = "a single point has no inner products";
        return r;
    }

    int d = s;
    std::uint64_t bound = 0;
    if (route == SphereRoute::Size) {
        d = declared_d.value_or(s);
        r.evidence["declared_d"] = d;
        if (s > d) {
            r.status = Status::HypothesisNotMet;
            r.reason = "|A(X)| exceeds the declared d";
            return r;
        }
        bound = absolute_bound(set.dimension, static_cast<unsigned>(d - 1));
        r.evidence["absolute_bound_d_minus_1"] = bound;
        if (n <= bound) {
            r.status = Status::Inconclusive;
            r.reason = "size hypothesis not met";
            return r;
        }
        r.status = Status::Pass;
        const int sd = schur_diameter(set.gram, tol);
        r.evidence["schur_diameter"] = sd;
        if (sd != d) {
            r.fail("Schur-diameter differs from d", {{"schur_diameter", sd}, {"d", d}});
            return r;
        }
        if (s != d) {
            r.fail("|A(X)| differs from d", {{"distance_count", s}, {"d", d}});
            return r;
        }
    } else {
        const int sd = schur_diameter(set.gram, tol);
        r.evidence["schur_diameter"] = sd;
        if (sd != s) {
            r.status = Status::HypothesisNotMet;
            r.reason = "Schur-diameter " + std::to_string(sd) + " differs from |A(X)| = " + std::to_string(s);
            return r;
        }
        bound = absolute_bound(set.dimension, static_cast<unsigned>(d - 1));
        r.evidence["absolute_bound_d_minus_1"] = bound;
        r.status = Status::Pass;
    }

    const auto need = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(bound);
    r.evidence["multiplicity_required"] = need;
    nlohmann::json per_class = nlohmann::json::array();
    for (int i = 1; i <= d; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        const double k = k_star(set.values, ui);
        const SymMatrix a = set.relation_adjacency(ui, tol);
        const auto spec = eigen_clusters(a, tol);
        const auto idx = spec.find(-k, tol);
        const std::size_t mult = idx == EigenClusters::npos ? 0 : spec.multiplicities[idx];

        const auto coeffs = f_star_coefficients(set.values, ui);
        const SymMatrix lhs = eval_matrix_poly(coeffs, set.gram, PolyMode::Hadamard);
        const double residual = max_abs_diff(lhs, k * SymMatrix::identity(set.size()) + a);
        r.max_deviation = std::max(r.max_deviation, residual);
        per_class.push_back({{"i", i},
                             {"K_star", k},
                             {"eigenvalue", -k},
                             {"eigenvalue_text", format_value(-k, tol)},
                             {"multiplicity", mult},
                             {"f_star_residual", residual}});
        if (residual > 100.0 * tol) {
            r.evidence["classes"] = per_class;
            r.fail("f_i*(M o) differs from K_i* I + A_i", {{"i", i}, {"residual", residual}});
            return r;
        }
        if (need >= 1 && static_cast<std::int64_t>(mult) < need) {
            r.evidence["classes"] = per_class;
            r.fail("-K_i* multiplicity below |X| - N(m, d-1)",
                   {{"i", i}, {"multiplicity", mult}, {"required", need}});
            return r;
        }
    }
    if (need < 1)
        r.evidence["note"] = "multiplicity bound is vacuous";
    r.evidence["classes"] = per_class;
    return r;
}

} // namespace ascheme
