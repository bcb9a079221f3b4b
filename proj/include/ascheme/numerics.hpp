#pragma once

// Dense symmetric matrix kernel: Jacobi eigenvalues, clustering, tolerance
// rank, Hadamard powers and matrix polynomial evaluation.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ascheme {

inline constexpr double kDefaultTol = 1e-9;
inline constexpr std::size_t kDefaultMaxDense = 5000;

/// Real symmetric n x n matrix with row-major storage. Every constructor
/// symmetrizes its input, so (i,j) and (j,i) always hold the same value.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t n, double fill = 0.0);

    static SymMatrix identity(std::size_t n);
    static SymMatrix ones(std::size_t n);
    /// Takes the average of (i,j) and (j,i). Throws on ragged or non-finite input.
    static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);
    static SymMatrix from_dense(std::size_t n, std::vector<double> data);

    std::size_t size() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }
    /// Sets both (i,j) and (j,i).
    void set(std::size_t i, std::size_t j, double v) noexcept
    {
        data_[i * n_ + j] = v;
        data_[j * n_ + i] = v;
    }
    std::span<const double> data() const noexcept { return data_; }

    SymMatrix& operator+=(const SymMatrix& o);
    SymMatrix& operator-=(const SymMatrix& o);
    SymMatrix& operator*=(double s);

    double trace() const noexcept;
    double max_abs() const noexcept;
    /// Conjugation by the permutation matrix that sends index i to perm[i].
    SymMatrix permuted(std::span<const std::size_t> perm) const;

    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

SymMatrix operator+(SymMatrix a, const SymMatrix& b);
SymMatrix operator-(SymMatrix a, const SymMatrix& b);
SymMatrix operator*(double s, SymMatrix a);

/// Matrix product, symmetrized. Exact only for commuting operands, which is
/// the case for every product taken inside a Bose-Mesner algebra.
SymMatrix product(const SymMatrix& a, const SymMatrix& b);
SymMatrix hadamard_product(const SymMatrix& a, const SymMatrix& b);
/// Entrywise t-th power; t = 0 gives the all-ones matrix.
SymMatrix hadamard_power(const SymMatrix& m, unsigned t);
double max_abs_diff(const SymMatrix& a, const SymMatrix& b);
/// Sum of all entries of the entrywise product, i.e. trace(a * b).
double frobenius_inner(const SymMatrix& a, const SymMatrix& b);

enum class PolyMode { Ordinary, Hadamard };

/// sum_t coeffs[t] * M^t, with M^0 = I (ordinary) or the all-ones matrix
/// (Hadamard).
SymMatrix eval_matrix_poly(std::span<const double> coeffs, const SymMatrix& m, PolyMode mode);

/// Coefficients (constant term first) of prod_i (x - roots[i]) * scale.
std::vector<double> poly_from_roots(std::span<const double> roots, double scale = 1.0);

struct JacobiResult {
    std::vector<double> values;       // ascending
    std::vector<double> vectors;      // column-major n x n, column i pairs with values[i]
    int sweeps = 0;
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
/// 1e-12 times the diagonal norm.
JacobiResult jacobi_eigen(const SymMatrix& m, bool want_vectors = false);
std::vector<double> eigenvalues(const SymMatrix& m);

struct EigenClusters {
    std::vector<double> values;       // strictly decreasing
    std::vector<std::size_t> multiplicities;
    double tolerance = kDefaultTol;

    std::size_t count() const noexcept { return values.size(); }
    std::size_t total() const noexcept;
    /// Index of the cluster within tol of x, or npos.
    std::size_t find(double x, double tol) const noexcept;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Groups real values into clusters separated by gaps > 2*tol. Internal
/// spread must stay <= tol, otherwise ToleranceAmbiguity. A representative
/// within tol of an integer is reported as that integer.
EigenClusters cluster_values(std::vector<double> raw, double tol);
EigenClusters eigen_clusters(const SymMatrix& m, double tol = kDefaultTol);

std::size_t rank_tol(const SymMatrix& m, double tol = kDefaultTol);

/// Snaps x to the nearest integer when within tol.
double snap(double x, double tol) noexcept;

/// Exact binomial coefficient; 0 outside 0 <= k <= n. Throws OverflowError.
std::uint64_t binomial(std::int64_t n, std::int64_t k);

/// Inverse of a small dense (row-major) matrix by Gauss-Jordan with partial
/// pivoting. Throws Error("singular matrix") when a pivot falls below tol.
std::vector<double> invert_small(std::vector<double> a, std::size_t n, double tol = 1e-12);

} // namespace ascheme
