#pragma once

#include "ascheme/numerics.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace ascheme {

/// Relation labels on X x X with values in {0..d}. Construction enforces
/// axioms 1-3 (identity relation, partition, symmetry) and that every class
/// is nonempty; axiom 4 is checked by validate_scheme.
class RelationPartition {
public:
    RelationPartition(int n, int d, std::vector<int> labels);

    int order() const noexcept { return n_; }
    int classes() const noexcept { return d_; }
    int operator()(int x, int y) const noexcept { return labels_[static_cast<std::size_t>(x * n_ + y)]; }
    const std::vector<int>& labels() const noexcept { return labels_; }
    /// Some pair (x, y) in R_i.
    std::pair<int, int> representative(int i) const { return reps_.at(static_cast<std::size_t>(i)); }
    /// |R_i(x)|, which is the same for every x once axiom 4 holds.
    int valency(int i) const;
    SymMatrix adjacency(int i) const;

private:
    int n_;
    int d_;
    std::vector<int> labels_;
    std::vector<std::pair<int, int>> reps_;
};

/// Intersection numbers p_ij^k, stored densely in (d+1)^3 exact integers.
class IntersectionNumbers {
public:
    IntersectionNumbers() = default;
    explicit IntersectionNumbers(int d) : d_(d), data_(static_cast<std::size_t>((d + 1) * (d + 1) * (d + 1)), 0) {}

    int classes() const noexcept { return d_; }
    std::int64_t operator()(int i, int j, int k) const noexcept { return data_[index(i, j, k)]; }
    std::int64_t& at(int i, int j, int k) noexcept { return data_[index(i, j, k)]; }
    std::int64_t valency(int i) const noexcept { return (*this)(i, i, 0); }

    friend bool operator==(const IntersectionNumbers&, const IntersectionNumbers&) = default;

private:
    std::size_t index(int i, int j, int k) const noexcept
    {
        const auto s = static_cast<std::size_t>(d_ + 1);
        return (static_cast<std::size_t>(i) * s + static_cast<std::size_t>(j)) * s + static_cast<std::size_t>(k);
    }
    int d_ = 0;
    std::vector<std::int64_t> data_;
};

/// Eigenmatrices and derived parameters. P and Q are (d+1) x (d+1), row-major,
/// with entry [j][i] = P_i(j) (resp. Q_i(j)): rows are indexed by the
/// argument, columns by the relation (resp. idempotent).
struct SchemeParameters {
    std::int64_t n = 0;
    int d = 0;
    IntersectionNumbers p;
    std::vector<double> P;
    std::vector<double> Q;
    std::vector<std::int64_t> degrees;
    std::vector<double> multiplicities;
    std::vector<double> krein;  // q_ij^k at ((i*(d+1))+j)*(d+1)+k

    double p_val(int i, int j) const noexcept { return P[static_cast<std::size_t>(j * (d + 1) + i)]; }
    double q_val(int i, int j) const noexcept { return Q[static_cast<std::size_t>(j * (d + 1) + i)]; }
    double krein_at(int i, int j, int k) const noexcept
    {
        return krein[static_cast<std::size_t>((i * (d + 1) + j) * (d + 1) + k)];
    }
    /// max |(PQ)_{jl} - n delta_jl|
    double pq_deviation() const;
};

/// Seeds for the generic algebra element; each set holds the primary seed
/// followed by two alternates used on reseeding.
using SeedSet = std::array<std::uint64_t, 3>;
SeedSet seed_set(int which);

/// Counts p_ij^k for every pair with exact integers; throws SchemeAxiomError
/// (axiom 4) naming two pairs that disagree.
IntersectionNumbers validate_scheme(const RelationPartition& rel);

/// Primitive idempotents E_0..E_d in canonical order: E_0 = J/n, the rest by
/// decreasing eigenvalue of A_1, ties by increasing rank, then by the
/// eigenvalues of A_2, A_3, ...
std::vector<SymMatrix> idempotents(const RelationPartition& rel, double tol = kDefaultTol,
                                   const SeedSet& seeds = seed_set(0));

SchemeParameters eigenmatrices(const RelationPartition& rel, const IntersectionNumbers& p,
                               const std::vector<SymMatrix>& idem, double tol = kDefaultTol);

/// q_ij^k from E_i o E_j = (1/n) sum_k q_ij^k E_k via trace inner products.
std::vector<double> krein_parameters(const std::vector<SymMatrix>& idem);

/// q_ij^k = (1/n) sum_l Q_i(l) Q_j(l) P_l(k), from the eigenmatrices alone.
std::vector<double> krein_from_eigenmatrices(const SchemeParameters& params);

/// P and Q derived from intersection numbers only: the intersection matrices
/// L_i with (L_i)_{jk} = p_ij^k share eigenvectors (P_0(l), ..., P_d(l)).
SchemeParameters parametric_parameters(const IntersectionNumbers& p, std::int64_t n,
                                       double tol = kDefaultTol, const SeedSet& seeds = seed_set(0));

/// Everything computed for a scheme given by its relation matrix.
struct ExplicitScheme {
    RelationPartition rel;
    std::vector<SymMatrix> idempotents;
    SchemeParameters params;
};

ExplicitScheme analyze_explicit(RelationPartition rel, double tol = kDefaultTol,
                                const SeedSet& seeds = seed_set(0));

/// Reorders P/Q/multiplicities/Krein of `params` so that idempotent l moves to
/// position perm[l]. Relations are untouched.
SchemeParameters permute_idempotents(const SchemeParameters& params, const std::vector<int>& perm);

/// Permutation aligning the idempotents of `b` to those of `a` by matching P
/// rows; empty when no alignment exists within tol.
std::vector<int> match_idempotents(const SchemeParameters& a, const SchemeParameters& b, double tol);

} // namespace ascheme
