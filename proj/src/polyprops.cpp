#include "ascheme/polyprops.hpp"

#include "ascheme/errors.hpp"
#include "ascheme/graphs.hpp"
#include "ascheme/spherical.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace ascheme {

std::string_view to_string(PolyKind k) noexcept { return k == PolyKind::P ? "P" : "Q"; }

std::string_view to_string(PolyStatus s) noexcept
{
    switch (s) {
    case PolyStatus::Polynomial: return "polynomial";
    case PolyStatus::NotPolynomial: return "not_polynomial";
    case PolyStatus::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

nlohmann::json to_json(const PolyVerdict& v)
{
    nlohmann::json j = {
        {"kind", std::string(to_string(v.kind))},
        {"base_index", v.base_index},
        {"status", std::string(to_string(v.status))},
        {"reason", v.reason},
        {"ordering", v.ordering},
        {"evidence", v.evidence},
    };
    if (v.witness >= 0)
        j["witness"] = v.witness;
    return j;
}

namespace {

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

PolyVerdict make(PolyKind kind, int j)
{
    PolyVerdict v;
    v.kind = kind;
    v.base_index = j;
    return v;
}

void check_index(const SchemeParameters& params, int j)
{
    if (j < 1 || j > params.d)
        throw Error("index j must lie in 1.." + std::to_string(params.d));
}

// BFS layering from 0 on an index graph; polynomial iff every layer is a
// single index and the layers cover 0..d.
PolyVerdict path_from_zero(PolyVerdict v, int d, const std::function<bool(int, int)>& adjacent)
{
    std::vector<int> layer_of(static_cast<std::size_t>(d + 1), -1);
    std::vector<std::vector<int>> layers{{0}};
    layer_of[0] = 0;
    while (true) {
        std::vector<int> next;
        for (int h : layers.back())
            for (int i = 0; i <= d; ++i)
                if (layer_of[static_cast<std::size_t>(i)] < 0 && adjacent(h, i)) {
                    layer_of[static_cast<std::size_t>(i)] = static_cast<int>(layers.size());
                    next.push_back(i);
                }
        if (next.empty())
            break;
        layers.push_back(std::move(next));
    }
    v.evidence["layers"] = layers;
    if (std::find(layer_of.begin(), layer_of.end(), -1) != layer_of.end()) {
        v.status = PolyStatus::NotPolynomial;
        v.reason = "index graph is disconnected";
        return v;
    }
    for (const auto& l : layers)
        if (l.size() != 1) {
            v.status = PolyStatus::NotPolynomial;
            v.reason = "a layer of the index graph holds several indices";
            return v;
        }
    v.status = PolyStatus::Polynomial;
    for (const auto& l : layers)
        v.ordering.push_back(l.front());
    return v;
}

} // namespace

bool degree_separated(const SchemeParameters& params, int j, double tol)
{
    for (int i = 1; i <= params.d; ++i)
        if (close(params.p_val(j, i), params.p_val(j, 0), tol))
            return false;
    return true;
}

bool multiplicity_separated(const SchemeParameters& params, int j, double tol)
{
    for (int i = 1; i <= params.d; ++i)
        if (close(params.q_val(j, i), params.q_val(j, 0), tol))
            return false;
    return true;
}

PolyVerdict p_polynomial_ordering(const RelationPartition& rel, const SchemeParameters& params, int j, double tol)
{
    check_index(params, j);
    auto v = make(PolyKind::P, j);
    v.evidence["method"] = "distance partition of (X, R_j)";
    if (!degree_separated(params, j, tol)) {
        v.status = PolyStatus::NotPolynomial;
        v.reason = "degree not separated: (X,R_" + std::to_string(j) + ") is disconnected";
        return v;
    }
    const int n = rel.order();
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (rel(x, y) == j)
                edges.emplace_back(x, y);
    const DistanceData dd(Graph(n, edges));
    if (!dd.connected()) {
        v.status = PolyStatus::NotPolynomial;
        v.reason = "graph (X,R_" + std::to_string(j) + ") is disconnected";
        return v;
    }
    v.evidence["diameter"] = dd.diameter();
    if (dd.diameter() != rel.classes()) {
        v.status = PolyStatus::NotPolynomial;
        v.reason = "graph (X,R_" + std::to_string(j) + ") has diameter " + std::to_string(dd.diameter())
                   + ", not " + std::to_string(rel.classes());
        return v;
    }
    std::vector<int> label_at(static_cast<std::size_t>(rel.classes() + 1), -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int& l = label_at[static_cast<std::size_t>(dd(x, y))];
            if (l < 0) {
                l = rel(x, y);
            } else if (l != rel(x, y)) {
                v.status = PolyStatus::NotPolynomial;
                v.reason = "distance class " + std::to_string(dd(x, y)) + " meets relations "
                           + std::to_string(l) + " and " + std::to_string(rel(x, y));
                v.evidence["witness_pair"] = {x, y};
                return v;
            }
        }
    v.status = PolyStatus::Polynomial;
    v.ordering = label_at;
    return v;
}

PolyVerdict p_polynomial_ordering(const SchemeParameters& params, int j, double tol)
{
    check_index(params, j);
    auto v = make(PolyKind::P, j);
    v.evidence["method"] = "index graph h ~ i iff p_{j,h}^i != 0";
    if (!degree_separated(params, j, tol)) {
        v.status = PolyStatus::NotPolynomial;
        v.reason = "degree not separated: (X,R_" + std::to_string(j) + ") is disconnected";
        return v;
    }
    return path_from_zero(std::move(v), params.d, [&](int h, int i) { return h != i && params.p(j, h, i) != 0; });
}

PolyVerdict check_p_large(const SchemeParameters& params, int j, const RelationPartition* rel, double tol)
{
    check_index(params, j);
    auto v = make(PolyKind::P, j);
    if (!degree_separated(params, j, tol)) {
        v.reason = "degree not separated";
        return v;
    }
    const auto k = static_cast<std::uint64_t>(params.degrees[static_cast<std::size_t>(j)]);
    const std::uint64_t bound = moore_bound(k, static_cast<unsigned>(params.d - 1));
    v.evidence["n"] = params.n;
    v.evidence["k_j"] = k;
    v.evidence["moore_bound_d_minus_1"] = bound;
    if (static_cast<std::uint64_t>(params.n) <= bound) {
        v.reason = "size hypothesis not met";
        return v;
    }
    v.status = PolyStatus::Polynomial;
    const auto detected = rel ? p_polynomial_ordering(*rel, params, j, tol) : p_polynomial_ordering(params, j, tol);
    v.evidence["detector"] = to_json(detected);
    if (!detected.polynomial())
        throw Error("size bound promises a P-polynomial ordering for j = " + std::to_string(j)
                    + " but the detector found none: " + detected.reason);
    v.ordering = detected.ordering;
    return v;
}

PolyVerdict check_product_formula_P(const SchemeParameters& params, int j, double tol)
{
    check_index(params, j);
    auto v = make(PolyKind::P, j);
    const int d = params.d;
    for (int a = 0; a <= d; ++a)
        for (int b = a + 1; b <= d; ++b)
            if (close(params.p_val(j, a), params.p_val(j, b), tol)) {
                v.reason = "P_j values not mutually distinct";
                return v;
            }
    std::vector<double> lhs;
    for (int h = 1; h <= d; ++h) {
        double prod = 1.0;
        for (int i = 1; i <= d; ++i)
            if (i != h)
                prod *= (params.p_val(j, 0) - params.p_val(j, i)) / (params.p_val(j, h) - params.p_val(j, i));
        lhs.push_back(prod);
    }
    v.evidence["lhs"] = lhs;
    std::vector<int> matches;
    for (int l = 0; l <= d; ++l) {
        bool all = true;
        for (int h = 1; h <= d && all; ++h)
            all = close(lhs[static_cast<std::size_t>(h - 1)], -params.q_val(h, l), tol);
        if (all)
            matches.push_back(l);
    }
    v.evidence["matches"] = matches;
    if (matches.empty()) {
        v.status = PolyStatus::NotPolynomial;
        v.reason = "no l satisfies the product formula";
        return v;
    }
    if (matches.size() > 1)
        v.evidence["anomaly"] = "several l satisfy the product formula";
    v.status = PolyStatus::Polynomial;
    v.witness = matches.front();
    std::vector<double> rhs;
    for (int h = 1; h <= d; ++h)
        rhs.push_back(-params.q_val(h, v.witness));
    v.evidence["rhs"] = rhs;
    return v;
}

PolyVerdict q_polynomial_ordering(const SchemeParameters& params, int j, double tol, const SymMatrix* idempotent)
{
    check_index(params, j);
    auto v = make(PolyKind::Q, j);
    v.evidence["method"] = "Krein index graph h ~ i iff q_{j,h}^i > tol";
    if (!multiplicity_separated(params, j, tol)) {
        v.reason = "multiplicity not separated";
        return v;
    }
    v = path_from_zero(std::move(v), params.d,
                       [&](int h, int i) { return h != i && params.krein_at(j, h, i) > tol; });
    if (idempotent) {
        const auto set = from_idempotent(*idempotent, tol);
        const int sd = schur_diameter(set.gram, tol);
        v.evidence["schur_diameter"] = sd;
        if ((sd == params.d) != v.polynomial())
            throw Error("methods disagree for E_" + std::to_string(j) + ": Krein path says "
                        + std::string(to_string(v.status)) + ", Schur-diameter is " + std::to_string(sd)
                        + " with d = " + std::to_string(params.d));
    }
    return v;
}

PolyVerdict check_q_large(const SchemeParameters& params, int j, double tol)
{
    check_index(params, j);
    auto v = make(PolyKind::Q, j);
    if (!multiplicity_separated(params, j, tol)) {
        v.reason = "multiplicity not separated";
        return v;
    }
    const double mj = params.multiplicities[static_cast<std::size_t>(j)];
    const double rounded = std::round(mj);
    if (std::abs(mj - rounded) > tol * std::max(1.0, mj) || rounded < 1.0)
        throw Error("non-integral multiplicity m_" + std::to_string(j) + " = " + std::to_string(mj));
    const auto m = static_cast<std::uint64_t>(rounded);
    const std::uint64_t bound = absolute_bound(m, static_cast<unsigned>(params.d - 1));
    v.evidence["n"] = params.n;
    v.evidence["m_j"] = m;
    v.evidence["absolute_bound_d_minus_1"] = bound;
    if (static_cast<std::uint64_t>(params.n) <= bound) {
        v.reason = "size hypothesis not met";
        return v;
    }
    v.status = PolyStatus::Polynomial;
    const auto detected = q_polynomial_ordering(params, j, tol);
    v.evidence["detector"] = to_json(detected);
    if (!detected.polynomial())
        throw Error("absolute bound promises a Q-polynomial ordering for j = " + std::to_string(j)
                    + " but the Krein path found none: " + detected.reason);
    v.ordering = detected.ordering;
    return v;
}

PolyVerdict check_product_formula_Q(const SchemeParameters& params, int j, double tol)
{
    check_index(params, j);
    auto v = make(PolyKind::Q, j);
    const int d = params.d;
    for (int a = 0; a <= d; ++a)
        for (int b = a + 1; b <= d; ++b)
            if (close(params.q_val(j, a), params.q_val(j, b), tol)) {
                v.reason = "Q_j values not mutually distinct";
                return v;
            }
    std::vector<double> lhs;
    for (int h = 1; h <= d; ++h) {
        double prod = 1.0;
        for (int i = 1; i <= d; ++i)
            if (i != h)
                prod *= (params.q_val(j, 0) - params.q_val(j, i)) / (params.q_val(j, h) - params.q_val(j, i));
        lhs.push_back(prod);
    }
    v.evidence["lhs"] = lhs;
    std::vector<int> matches;
    for (int l = 0; l <= d; ++l) {
        bool all = true;
        for (int h = 1; h <= d && all; ++h)
            all = close(lhs[static_cast<std::size_t>(h - 1)], -params.p_val(h, l), tol);
        if (all)
            matches.push_back(l);
    }
    v.evidence["matches"] = matches;
    if (matches.empty()) {
        v.status = PolyStatus::NotPolynomial;
        v.reason = "no l satisfies the dual product formula";
        return v;
    }
    if (matches.size() > 1)
        v.evidence["anomaly"] = "several l satisfy the dual product formula";
    v.status = PolyStatus::Polynomial;
    v.witness = matches.front();
    std::vector<double> rhs;
    for (int h = 1; h <= d; ++h)
        rhs.push_back(-params.p_val(h, v.witness));
    v.evidence["rhs"] = rhs;
    return v;
}

} // namespace ascheme
