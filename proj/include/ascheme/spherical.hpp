#pragma once

#include "ascheme/numerics.hpp"
#include "ascheme/report.hpp"
#include "ascheme/schemes.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ascheme {

/// Finite set on a unit sphere, held as its Gram matrix.
struct SphericalSet {
    SymMatrix gram;                  // unit diagonal
    std::size_t dimension = 0;       // m = rank of the Gram matrix
    std::vector<double> values;      // theta*_0 = 1 > theta*_1 > ... > theta*_s

    std::size_t size() const noexcept { return gram.size(); }
    /// s = |A(X)|
    std::size_t distance_count() const noexcept { return values.empty() ? 0 : values.size() - 1; }
    /// Adjacency of {(x,y) : <x,y> = theta*_i}.
    SymMatrix relation_adjacency(std::size_t i, double tol) const;
};

/// Checked C(m+d-1, d) + C(m+d-2, d-1). Throws OverflowError.
std::uint64_t absolute_bound(std::uint64_t m, unsigned d);

/// Validates unit diagonal and positive semidefiniteness within tol, then
/// clusters the off-diagonal values into A(X).
SphericalSet from_gram(const SymMatrix& gram, double tol = kDefaultTol);

/// (n / m_j) E_j, which has unit diagonal.
SphericalSet from_idempotent(const SymMatrix& idempotent, double tol = kDefaultTol);

/// prod_{j in 1..s, j != i} (theta*_0 - theta*_j) / (theta*_i - theta*_j)
double k_star(const std::vector<double>& values, std::size_t i);

/// Coefficients of f_i*(t) = prod_{j in 1..s, j != i} (t - theta*_j) / (theta*_i - theta*_j).
std::vector<double> f_star_coefficients(const std::vector<double>& values, std::size_t i);

/// Least t such that some combination of M^{o0}, ..., M^{ot} has full rank.
/// The lower bound uses several fixed-seed random combinations; when the
/// diagonal is constant and outside the off-diagonal value set the
/// annihilator of that value set caps the answer. Throws when no degree up
/// to `t_max` works.
int schur_diameter(const SymMatrix& m, double tol = kDefaultTol, std::optional<int> t_max = std::nullopt);

enum class SphereRoute {
    SchurDiameter,  // take Schur-diameter = |A(X)| = d as the hypothesis
    Size,           // |A(X)| <= d and |X| > N(m, d-1)
};

/// Forced eigenvalues -K_i* of the distance-class graphs A_i, their
/// multiplicity bound |X| - N(m, d-1), and the residual of
/// f_i*(M o) = K_i* I + A_i. `declared_d` is the upper bound on |A(X)| used
/// by the size route (defaults to s).
TheoremReport verify_sphere_theorem(const SphericalSet& set, double tol = kDefaultTol,
                                    SphereRoute route = SphereRoute::Size,
                                    std::optional<int> declared_d = std::nullopt);

} // namespace ascheme
