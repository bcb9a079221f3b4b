#include "ascheme/schemes.hpp"

#include "ascheme/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

namespace ascheme {

namespace {

std::string pair_text(std::pair<int, int> p)
{
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

std::vector<double> generic_coefficients(std::uint64_t seed, int count)
{
    std::mt19937_64 gen(seed);
    std::vector<double> c(static_cast<std::size_t>(count));
    for (double& v : c)
        v = 1.0 + static_cast<double>(gen() >> 11) * 0x1.0p-53;
    return c;
}

} // namespace

SeedSet seed_set(int which)
{
    switch (which) {
    case 0: return {0x9e3779b97f4a7c15ULL, 0xd1b54a32d192ed03ULL, 0x8cb92ba72f3d8dd7ULL};
    case 1: return {0x2545f4914f6cdd1dULL, 0x5851f42d4c957f2dULL, 0x14057b7ef767814fULL};
    default: throw DomainError("seed set must be 0 or 1");
    }
}

RelationPartition::RelationPartition(int n, int d, std::vector<int> labels)
    : n_(n), d_(d), labels_(std::move(labels))
{
    if (n < 2)
        throw SchemeAxiomError(1, "a scheme needs at least 2 points");
    if (d < 1)
        throw SchemeAxiomError(2, "a scheme needs at least one nontrivial class");
    if (labels_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw SchemeAxiomError(2, "relation matrix has wrong size");
    reps_.assign(static_cast<std::size_t>(d + 1), {-1, -1});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int l = (*this)(x, y);
            if (l < 0 || l > d)
                throw SchemeAxiomError(2, "axiom 2 violated: label " + std::to_string(l) + " at "
                                              + pair_text({x, y}) + " outside 0.."
                                              + std::to_string(d),
                                       {{x, y}});
            if ((x == y) != (l == 0))
                throw SchemeAxiomError(1, "axiom 1 violated: R_0 must be the diagonal, found label "
                                              + std::to_string(l) + " at " + pair_text({x, y}),
                                       {{x, y}});
            if (l != (*this)(y, x))
                throw SchemeAxiomError(3, "axiom 3 violated: relation is not symmetric at "
                                              + pair_text({x, y}) + " and " + pair_text({y, x}),
                                       {{x, y}, {y, x}});
            auto& rep = reps_[static_cast<std::size_t>(l)];
            if (rep.first < 0)
                rep = {x, y};
        }
    for (int i = 0; i <= d; ++i)
        if (reps_[static_cast<std::size_t>(i)].first < 0)
            throw SchemeAxiomError(2, "axiom 2 violated: class " + std::to_string(i) + " is empty");
}

int RelationPartition::valency(int i) const
{
    int c = 0;
    for (int y = 0; y < n_; ++y)
        c += (*this)(0, y) == i ? 1 : 0;
    return c;
}

SymMatrix RelationPartition::adjacency(int i) const
{
    SymMatrix a(static_cast<std::size_t>(n_));
    for (int x = 0; x < n_; ++x)
        for (int y = x; y < n_; ++y)
            if ((*this)(x, y) == i)
                a.set(static_cast<std::size_t>(x), static_cast<std::size_t>(y), 1.0);
    return a;
}

IntersectionNumbers validate_scheme(const RelationPartition& rel)
{
    const int n = rel.order();
    const int d = rel.classes();
    const auto s = static_cast<std::size_t>(d + 1);
    IntersectionNumbers p(d);
    std::vector<std::pair<int, int>> first(s, {-1, -1});
    std::vector<std::int64_t> counts(s * s);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            std::fill(counts.begin(), counts.end(), 0);
            for (int z = 0; z < n; ++z)
                ++counts[static_cast<std::size_t>(rel(x, z)) * s + static_cast<std::size_t>(rel(z, y))];
            const int k = rel(x, y);
            auto& seen = first[static_cast<std::size_t>(k)];
            for (int i = 0; i <= d; ++i)
                for (int j = 0; j <= d; ++j) {
                    const auto c = counts[static_cast<std::size_t>(i) * s + static_cast<std::size_t>(j)];
                    if (seen.first < 0) {
                        p.at(i, j, k) = c;
                    } else if (p(i, j, k) != c) {
                        std::ostringstream msg;
                        msg << "not a scheme (axiom 4): p_{" << i << "," << j << "}^{" << k
                            << "} differs between pairs " << pair_text(seen) << " (" << p(i, j, k)
                            << ") and " << pair_text({x, y}) << " (" << c << ")";
                        throw SchemeAxiomError(4, msg.str(), {seen, {x, y}});
                    }
                }
            if (seen.first < 0)
                seen = {x, y};
        }
    return p;
}

namespace {

// Per-idempotent eigenvalues of every A_i: trace(A_i E) / trace(E).
std::vector<double> relation_eigenvalues(const RelationPartition& rel, const SymMatrix& e)
{
    const int n = rel.order();
    std::vector<double> sums(static_cast<std::size_t>(rel.classes() + 1), 0.0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            sums[static_cast<std::size_t>(rel(x, y))] += e(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
    const double m = e.trace();
    for (double& v : sums)
        v /= m;
    return sums;
}

// Order for idempotents 1..d: decreasing first eigenvalue, then increasing
// rank, then decreasing later eigenvalues.
bool canonical_less(const std::vector<double>& ea, double ma, const std::vector<double>& eb, double mb,
                    double tol)
{
    const double gap = 10.0 * tol;
    if (ea.size() > 1 && std::abs(ea[1] - eb[1]) > gap)
        return ea[1] > eb[1];
    if (std::abs(ma - mb) > 0.5)
        return ma < mb;
    for (std::size_t i = 2; i < ea.size(); ++i)
        if (std::abs(ea[i] - eb[i]) > gap)
            return ea[i] > eb[i];
    return false;
}

// Largest deviation of E from being constant on each relation class.
double class_spread(const RelationPartition& rel, const SymMatrix& e)
{
    const int n = rel.order();
    double worst = 0.0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto [rx, ry] = rel.representative(rel(x, y));
            worst = std::max(worst, std::abs(e(static_cast<std::size_t>(x), static_cast<std::size_t>(y))
                                             - e(static_cast<std::size_t>(rx), static_cast<std::size_t>(ry))));
        }
    return worst;
}

// Spectral projectors of g from its eigenvectors, grouped by nearest cluster.
std::vector<SymMatrix> eigenvector_projectors(const SymMatrix& g, const std::vector<double>& theta)
{
    const std::size_t n = g.size();
    const auto jr = jacobi_eigen(g, true);
    std::vector<std::vector<double>> acc(theta.size(), std::vector<double>(n * n, 0.0));
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < theta.size(); ++i)
            if (std::abs(jr.values[c] - theta[i]) < std::abs(jr.values[c] - theta[best]))
                best = i;
        const double* v = &jr.vectors[c * n];
        auto& a = acc[best];
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                a[x * n + y] += v[x] * v[y];
    }
    std::vector<SymMatrix> out;
    for (auto& a : acc)
        out.push_back(SymMatrix::from_dense(n, std::move(a)));
    return out;
}

// Replaces every entry by the mean over its relation class.
SymMatrix class_average(const RelationPartition& rel, const SymMatrix& e)
{
    const int n = rel.order();
    const int s = rel.classes() + 1;
    std::vector<double> sum(static_cast<std::size_t>(s), 0.0);
    std::vector<double> count(static_cast<std::size_t>(s), 0.0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            sum[static_cast<std::size_t>(rel(x, y))] += e(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
            count[static_cast<std::size_t>(rel(x, y))] += 1.0;
        }
    SymMatrix out(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y) {
            const auto r = static_cast<std::size_t>(rel(x, y));
            out.set(static_cast<std::size_t>(x), static_cast<std::size_t>(y), sum[r] / count[r]);
        }
    return out;
}

} // namespace

std::vector<SymMatrix> idempotents(const RelationPartition& rel, double tol, const SeedSet& seeds)
{
    const int n = rel.order();
    const int d = rel.classes();
    std::string last_problem;
    for (std::uint64_t seed : seeds) {
        const auto c = generic_coefficients(seed, d + 1);
        SymMatrix g(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                g.set(static_cast<std::size_t>(x), static_cast<std::size_t>(y), c[static_cast<std::size_t>(rel(x, y))]);
        EigenClusters spec;
        try {
            spec = eigen_clusters(g, tol);
        } catch (const ToleranceAmbiguity& e) {
            last_problem = e.what();
            continue;
        }
        if (spec.count() != static_cast<std::size_t>(d + 1)) {
            last_problem = "generic element has " + std::to_string(spec.count())
                           + " distinct eigenvalues, expected " + std::to_string(d + 1);
            continue;
        }
        auto proj = eigenvector_projectors(g, spec.values);
        double spread = 0.0;
        for (auto& e : proj) {
            spread = std::max(spread, class_spread(rel, e));
            e = class_average(rel, e);
        }
        if (spread > 100.0 * tol) {
            last_problem = "projector is not in the Bose-Mesner algebra (spread " + std::to_string(spread) + ")";
            continue;
        }

        // E_0 carries the all-ones eigenvector: its entry sum is n, others 0.
        std::size_t trivial = 0;
        double best = -1.0;
        for (std::size_t i = 0; i < proj.size(); ++i) {
            double s = 0.0;
            for (double v : proj[i].data())
                s += v;
            if (s > best) {
                best = s;
                trivial = i;
            }
        }
        std::vector<std::vector<double>> ev;
        std::vector<double> rank;
        for (const auto& e : proj) {
            ev.push_back(relation_eigenvalues(rel, e));
            rank.push_back(e.trace());
        }
        std::vector<std::size_t> order;
        for (std::size_t i = 0; i < proj.size(); ++i)
            if (i != trivial)
                order.push_back(i);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return canonical_less(ev[a], rank[a], ev[b], rank[b], tol);
        });
        order.insert(order.begin(), trivial);
        std::vector<SymMatrix> out;
        for (std::size_t i : order)
            out.push_back(std::move(proj[i]));
        return out;
    }
    throw Error("generic element degenerate - reseed (" + last_problem + ")");
}

double SchemeParameters::pq_deviation() const
{
    const int s = d + 1;
    double worst = 0.0;
    for (int j = 0; j < s; ++j)
        for (int l = 0; l < s; ++l) {
            double acc = 0.0;
            for (int i = 0; i < s; ++i)
                acc += P[static_cast<std::size_t>(j * s + i)] * Q[static_cast<std::size_t>(i * s + l)];
            worst = std::max(worst, std::abs(acc - (j == l ? static_cast<double>(n) : 0.0)));
        }
    return worst;
}

std::vector<double> krein_parameters(const std::vector<SymMatrix>& idem)
{
    const std::size_t s = idem.size();
    if (s == 0)
        return {};
    const double n = static_cast<double>(idem.front().size());
    std::vector<double> q(s * s * s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i; j < s; ++j) {
            const SymMatrix h = hadamard_product(idem[i], idem[j]);
            for (std::size_t k = 0; k < s; ++k) {
                const double v = n * frobenius_inner(h, idem[k]) / idem[k].trace();
                q[(i * s + j) * s + k] = v;
                q[(j * s + i) * s + k] = v;
            }
        }
    return q;
}

std::vector<double> krein_from_eigenmatrices(const SchemeParameters& params)
{
    const int s = params.d + 1;
    std::vector<double> q(static_cast<std::size_t>(s * s * s));
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            for (int k = 0; k < s; ++k) {
                double acc = 0.0;
                for (int l = 0; l < s; ++l)
                    acc += params.q_val(i, l) * params.q_val(j, l) * params.p_val(l, k);
                q[static_cast<std::size_t>((i * s + j) * s + k)] = acc / static_cast<double>(params.n);
            }
    return q;
}

SchemeParameters eigenmatrices(const RelationPartition& rel, const IntersectionNumbers& p,
                               const std::vector<SymMatrix>& idem, double tol)
{
    const int d = rel.classes();
    const int s = d + 1;
    if (idem.size() != static_cast<std::size_t>(s))
        throw Error("expected " + std::to_string(s) + " idempotents");
    SchemeParameters out;
    out.n = rel.order();
    out.d = d;
    out.p = p;
    out.P.resize(static_cast<std::size_t>(s * s));
    out.Q.resize(static_cast<std::size_t>(s * s));
    for (int j = 0; j < s; ++j) {
        const auto ev = relation_eigenvalues(rel, idem[static_cast<std::size_t>(j)]);
        for (int i = 0; i < s; ++i)
            out.P[static_cast<std::size_t>(j * s + i)] = snap(ev[static_cast<std::size_t>(i)], tol);
    }
    for (int j = 0; j < s; ++j) {
        const auto [x, y] = rel.representative(j);
        for (int i = 0; i < s; ++i)
            out.Q[static_cast<std::size_t>(j * s + i)] =
                snap(static_cast<double>(out.n) * idem[static_cast<std::size_t>(i)](static_cast<std::size_t>(x), static_cast<std::size_t>(y)), tol);
    }
    for (int i = 0; i < s; ++i) {
        out.degrees.push_back(p.valency(i));
        out.multiplicities.push_back(out.q_val(i, 0));
    }
    out.krein = krein_parameters(idem);
    const double dev = out.pq_deviation();
    if (dev > 100.0 * tol) {
        std::ostringstream msg;
        msg << "PQ != nI: max deviation " << dev;
        throw Error(msg.str());
    }
    return out;
}

namespace {

void check_tensor(const IntersectionNumbers& p, std::int64_t n)
{
    const int d = p.classes();
    auto bad = [](const std::string& what) { throw Error("inconsistent intersection numbers: " + what); };
    std::int64_t total = 0;
    for (int i = 0; i <= d; ++i) {
        const auto ki = p.valency(i);
        if (ki <= 0)
            bad("k_" + std::to_string(i) + " = p_ii^0 must be positive");
        total += ki;
    }
    if (total != n)
        bad("valencies sum to " + std::to_string(total) + ", not n = " + std::to_string(n));
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j)
            for (int k = 0; k <= d; ++k) {
                if (p(0, j, k) != (j == k ? 1 : 0))
                    bad("p_0" + std::to_string(j) + "^" + std::to_string(k) + " must be delta_jk");
                if (p(i, j, k) != p(j, i, k))
                    bad("p_ij^k is not symmetric in i, j");
                if (p.valency(k) * p(i, j, k) != p.valency(j) * p(i, k, j))
                    bad("k_k p_ij^k != k_j p_ik^j");
            }
    for (int i = 0; i <= d; ++i)
        for (int k = 0; k <= d; ++k) {
            std::int64_t row = 0;
            for (int j = 0; j <= d; ++j)
                row += p(i, j, k);
            if (row != p.valency(i))
                bad("sum_j p_ij^k != k_i");
        }
}

// (L_i)_{jk} = p_ij^k; products compared exactly.
void check_commuting(const IntersectionNumbers& p)
{
    const int s = p.classes() + 1;
    for (int a = 1; a < s; ++a)
        for (int b = a + 1; b < s; ++b)
            for (int j = 0; j < s; ++j)
                for (int k = 0; k < s; ++k) {
                    __int128 ab = 0, ba = 0;
                    for (int t = 0; t < s; ++t) {
                        ab += static_cast<__int128>(p(a, j, t)) * p(b, t, k);
                        ba += static_cast<__int128>(p(b, j, t)) * p(a, t, k);
                    }
                    if (ab != ba)
                        throw Error("intersection matrices do not commute (L_" + std::to_string(a) + ", L_"
                                    + std::to_string(b) + ")");
                }
}

} // namespace

SchemeParameters parametric_parameters(const IntersectionNumbers& p, std::int64_t n, double tol,
                                       const SeedSet& seeds)
{
    check_tensor(p, n);
    check_commuting(p);
    const int d = p.classes();
    const int s = d + 1;
    std::vector<double> sqrt_k(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i)
        sqrt_k[static_cast<std::size_t>(i)] = std::sqrt(static_cast<double>(p.valency(i)));

    std::string last_problem;
    for (std::uint64_t seed : seeds) {
        const auto c = generic_coefficients(seed, s);
        // D^{-1/2} L D^{1/2} is symmetric since k_k p_ij^k = k_j p_ik^j.
        SymMatrix gen(static_cast<std::size_t>(s));
        for (int j = 0; j < s; ++j)
            for (int k = j; k < s; ++k) {
                double v = 0.0;
                for (int i = 1; i < s; ++i)
                    v += c[static_cast<std::size_t>(i)] * static_cast<double>(p(i, j, k));
                gen.set(static_cast<std::size_t>(j), static_cast<std::size_t>(k),
                        v * sqrt_k[static_cast<std::size_t>(k)] / sqrt_k[static_cast<std::size_t>(j)]);
            }
        const auto eig = jacobi_eigen(gen, true);
        try {
            if (cluster_values(eig.values, tol * std::max(1.0, gen.max_abs())).count() != static_cast<std::size_t>(s)) {
                last_problem = "generic combination has a repeated eigenvalue";
                continue;
            }
        } catch (const ToleranceAmbiguity& e) {
            last_problem = e.what();
            continue;
        }
        double min_gap = std::numeric_limits<double>::infinity();
        for (int l = 1; l < s; ++l)
            min_gap = std::min(min_gap, eig.values[static_cast<std::size_t>(l)] - eig.values[static_cast<std::size_t>(l - 1)]);
        if (min_gap < 1e-6 * std::max(1.0, gen.max_abs())) {
            last_problem = "generic combination has nearly coincident eigenvalues";
            continue;
        }

        // rows[l][i] = P_i(l), the eigenvalue of L_i on eigenvector l, read
        // as a Rayleigh quotient of the symmetrized L_i.
        std::vector<SymMatrix> sym;
        for (int i = 0; i < s; ++i) {
            SymMatrix m(static_cast<std::size_t>(s));
            for (int j = 0; j < s; ++j)
                for (int k = j; k < s; ++k)
                    m.set(static_cast<std::size_t>(j), static_cast<std::size_t>(k),
                          static_cast<double>(p(i, j, k)) * sqrt_k[static_cast<std::size_t>(k)] / sqrt_k[static_cast<std::size_t>(j)]);
            sym.push_back(std::move(m));
        }
        std::vector<std::vector<double>> rows;
        for (int l = 0; l < s; ++l) {
            const double* w = &eig.vectors[static_cast<std::size_t>(l * s)];
            std::vector<double> u(static_cast<std::size_t>(s));
            for (int i = 0; i < s; ++i) {
                double num = 0.0, den = 0.0;
                for (int j = 0; j < s; ++j) {
                    den += w[j] * w[j];
                    for (int k = 0; k < s; ++k)
                        num += w[j] * sym[static_cast<std::size_t>(i)](static_cast<std::size_t>(j), static_cast<std::size_t>(k)) * w[k];
                }
                u[static_cast<std::size_t>(i)] = num / den;
            }
            rows.push_back(std::move(u));
        }
        // trivial character: P_i(0) = k_i, row sum n; every other row sums to 0
        std::size_t trivial = 0;
        for (std::size_t l = 1; l < rows.size(); ++l)
            if (std::accumulate(rows[l].begin(), rows[l].end(), 0.0)
                > std::accumulate(rows[trivial].begin(), rows[trivial].end(), 0.0))
                trivial = l;
        std::vector<double> mult(rows.size());
        for (std::size_t l = 0; l < rows.size(); ++l) {
            double acc = 0.0;
            for (int i = 0; i < s; ++i)
                acc += rows[l][static_cast<std::size_t>(i)] * rows[l][static_cast<std::size_t>(i)]
                       / static_cast<double>(p.valency(i));
            mult[l] = static_cast<double>(n) / acc;
        }
        std::vector<std::size_t> order;
        for (std::size_t l = 0; l < rows.size(); ++l)
            if (l != trivial)
                order.push_back(l);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return canonical_less(rows[a], mult[a], rows[b], mult[b], tol);
        });
        order.insert(order.begin(), trivial);

        SchemeParameters out;
        out.n = n;
        out.d = d;
        out.p = p;
        out.P.resize(static_cast<std::size_t>(s * s));
        for (int j = 0; j < s; ++j)
            for (int i = 0; i < s; ++i)
                out.P[static_cast<std::size_t>(j * s + i)] = rows[order[static_cast<std::size_t>(j)]][static_cast<std::size_t>(i)];
        std::vector<double> inv;
        try {
            inv = invert_small(out.P, static_cast<std::size_t>(s));
        } catch (const Error&) {
            throw Error("singular P");
        }
        out.Q.resize(inv.size());
        for (std::size_t t = 0; t < inv.size(); ++t)
            out.Q[t] = snap(static_cast<double>(n) * inv[t], tol);
        for (double& v : out.P)
            v = snap(v, tol);
        for (int i = 0; i < s; ++i) {
            out.degrees.push_back(p.valency(i));
            out.multiplicities.push_back(out.q_val(i, 0));
        }
        out.krein = krein_from_eigenmatrices(out);
        return out;
    }
    throw Error("generic element degenerate - reseed (" + last_problem + ")");
}

ExplicitScheme analyze_explicit(RelationPartition rel, double tol, const SeedSet& seeds)
{
    const auto p = validate_scheme(rel);
    auto idem = idempotents(rel, tol, seeds);
    auto params = eigenmatrices(rel, p, idem, tol);
    return ExplicitScheme{std::move(rel), std::move(idem), std::move(params)};
}

SchemeParameters permute_idempotents(const SchemeParameters& params, const std::vector<int>& perm)
{
    const int s = params.d + 1;
    SchemeParameters out = params;
    auto at = [s](int a, int b) { return static_cast<std::size_t>(a * s + b); };
    for (int l = 0; l < s; ++l) {
        const int t = perm[static_cast<std::size_t>(l)];
        for (int i = 0; i < s; ++i) {
            out.P[at(t, i)] = params.P[at(l, i)];
            out.Q[at(i, t)] = params.Q[at(i, l)];
        }
        out.multiplicities[static_cast<std::size_t>(t)] = params.multiplicities[static_cast<std::size_t>(l)];
    }
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            for (int k = 0; k < s; ++k)
                out.krein[static_cast<std::size_t>((perm[static_cast<std::size_t>(i)] * s + perm[static_cast<std::size_t>(j)]) * s
                                                   + perm[static_cast<std::size_t>(k)])] =
                    params.krein[static_cast<std::size_t>((i * s + j) * s + k)];
    return out;
}

std::vector<int> match_idempotents(const SchemeParameters& a, const SchemeParameters& b, double tol)
{
    if (a.d != b.d || a.n != b.n)
        return {};
    const int s = a.d + 1;
    std::vector<int> perm(static_cast<std::size_t>(s), -1);
    std::vector<bool> used(static_cast<std::size_t>(s), false);
    for (int l = 0; l < s; ++l) {
        for (int t = 0; t < s; ++t) {
            if (used[static_cast<std::size_t>(t)])
                continue;
            bool same = true;
            for (int i = 0; i < s && same; ++i)
                same = std::abs(b.p_val(i, l) - a.p_val(i, t)) <= tol * std::max(1.0, std::abs(a.p_val(i, t)));
            if (same) {
                perm[static_cast<std::size_t>(l)] = t;
                used[static_cast<std::size_t>(t)] = true;
                break;
            }
        }
        if (perm[static_cast<std::size_t>(l)] < 0)
            return {};
    }
    return perm;
}

} // namespace ascheme
