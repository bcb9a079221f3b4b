#pragma once

#include "ascheme/report.hpp"
#include "ascheme/schemes.hpp"

#include <string>
#include <vector>

namespace ascheme {

enum class PolyKind { P, Q };
enum class PolyStatus { Polynomial, NotPolynomial, Inconclusive };

std::string_view to_string(PolyKind k) noexcept;
std::string_view to_string(PolyStatus s) noexcept;

/// Outcome of a P- or Q-polynomial check with respect to A_j (resp. E_j).
/// When polynomial, `ordering` is a permutation of {0..d} starting 0, j.
struct PolyVerdict {
    PolyKind kind = PolyKind::P;
    int base_index = 1;
    PolyStatus status = PolyStatus::Inconclusive;
    std::string reason;
    std::vector<int> ordering;
    int witness = -1;  // product-formula index l
    nlohmann::json evidence = nlohmann::json::object();

    bool polynomial() const noexcept { return status == PolyStatus::Polynomial; }
    int last() const { return ordering.empty() ? -1 : ordering.back(); }
};

nlohmann::json to_json(const PolyVerdict& v);

/// P_j(0) differs from every P_j(i), i >= 1.
bool degree_separated(const SchemeParameters& params, int j, double tol);
/// Q_j(0) differs from every Q_j(i), i >= 1.
bool multiplicity_separated(const SchemeParameters& params, int j, double tol);

/// Distance partition of (X, R_j) compared with the relations: polynomial
/// iff the diameter is d and every distance class is a single relation.
PolyVerdict p_polynomial_ordering(const RelationPartition& rel, const SchemeParameters& params, int j,
                                  double tol = kDefaultTol);
/// Same test on the index graph h ~ i iff p_{j,h}^i != 0.
PolyVerdict p_polynomial_ordering(const SchemeParameters& params, int j, double tol = kDefaultTol);

/// |X| > M(k_j, d-1) implies P-polynomial w.r.t. A_j. Never returns
/// NotPolynomial; the ordering found by the detector must agree.
PolyVerdict check_p_large(const SchemeParameters& params, int j, const RelationPartition* rel = nullptr,
                          double tol = kDefaultTol);

/// Searches l with prod_{i != h} (P_j(0) - P_j(i)) / (P_j(h) - P_j(i)) = -Q_h(l)
/// for every h = 1..d.
PolyVerdict check_product_formula_P(const SchemeParameters& params, int j, double tol = kDefaultTol);

/// Krein-path test (h ~ i iff q_{j,h}^i > tol); when `idempotent` is given
/// the Schur-diameter of E_j is computed as well and must agree.
PolyVerdict q_polynomial_ordering(const SchemeParameters& params, int j, double tol = kDefaultTol,
                                  const SymMatrix* idempotent = nullptr);

/// |X| > N(m_j, d-1) implies Q-polynomial w.r.t. E_j.
PolyVerdict check_q_large(const SchemeParameters& params, int j, double tol = kDefaultTol);

/// Dual product formula: prod_{i != h} (Q_j(0) - Q_j(i)) / (Q_j(h) - Q_j(i)) = -P_h(l).
PolyVerdict check_product_formula_Q(const SchemeParameters& params, int j, double tol = kDefaultTol);

} // namespace ascheme
