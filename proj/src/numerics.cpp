#include "ascheme/numerics.hpp"

#include "ascheme/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace ascheme {

namespace {

void require_same_size(const SymMatrix& a, const SymMatrix& b)
{
    if (a.size() != b.size())
        throw Error("matrix dimension mismatch: " + std::to_string(a.size()) + " vs "
                    + std::to_string(b.size()));
}

} // namespace

SymMatrix::SymMatrix(std::size_t n, double fill) : n_(n), data_(n * n, fill) {}

SymMatrix SymMatrix::identity(std::size_t n)
{
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        m.data_[i * n + i] = 1.0;
    return m;
}

SymMatrix SymMatrix::ones(std::size_t n) { return SymMatrix(n, 1.0); }

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows)
{
    const std::size_t n = rows.size();
    std::vector<double> data;
    data.reserve(n * n);
    for (const auto& r : rows) {
        if (r.size() != n)
            throw Error("matrix is not square");
        data.insert(data.end(), r.begin(), r.end());
    }
    return from_dense(n, std::move(data));
}

SymMatrix SymMatrix::from_dense(std::size_t n, std::vector<double> data)
{
    if (data.size() != n * n)
        throw Error("dense data has wrong length");
    for (double v : data)
        if (!std::isfinite(v))
            throw Error("matrix has non-finite entry");
    SymMatrix m;
    m.n_ = n;
    m.data_ = std::move(data);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double avg = 0.5 * (m.data_[i * n + j] + m.data_[j * n + i]);
            m.data_[i * n + j] = avg;
            m.data_[j * n + i] = avg;
        }
    return m;
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& o)
{
    require_same_size(*this, o);
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += o.data_[i];
    return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& o)
{
    require_same_size(*this, o);
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] -= o.data_[i];
    return *this;
}

SymMatrix& SymMatrix::operator*=(double s)
{
    for (double& v : data_)
        v *= s;
    return *this;
}

double SymMatrix::trace() const noexcept
{
    double t = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
        t += data_[i * n_ + i];
    return t;
}

double SymMatrix::max_abs() const noexcept
{
    double m = 0.0;
    for (double v : data_)
        m = std::max(m, std::abs(v));
    return m;
}

SymMatrix SymMatrix::permuted(std::span<const std::size_t> perm) const
{
    if (perm.size() != n_)
        throw Error("permutation has wrong length");
    SymMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            r.data_[perm[i] * n_ + perm[j]] = data_[i * n_ + j];
    return r;
}

SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
SymMatrix operator*(double s, SymMatrix a) { return a *= s; }

SymMatrix product(const SymMatrix& a, const SymMatrix& b)
{
    require_same_size(a, b);
    const std::size_t n = a.size();
    std::vector<double> c(n * n, 0.0);
    const auto ad = a.data();
    const auto bd = b.data();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = ad[i * n + k];
            if (aik == 0.0)
                continue;
            const double* brow = &bd[k * n];
            double* crow = &c[i * n];
            for (std::size_t j = 0; j < n; ++j)
                crow[j] += aik * brow[j];
        }
    return SymMatrix::from_dense(n, std::move(c));
}

SymMatrix hadamard_product(const SymMatrix& a, const SymMatrix& b)
{
    require_same_size(a, b);
    std::vector<double> c(a.data().begin(), a.data().end());
    const auto bd = b.data();
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] *= bd[i];
    return SymMatrix::from_dense(a.size(), std::move(c));
}

SymMatrix hadamard_power(const SymMatrix& m, unsigned t)
{
    std::vector<double> c(m.data().begin(), m.data().end());
    for (double& v : c) {
        double r = 1.0;
        for (unsigned k = 0; k < t; ++k)
            r *= v;
        v = r;
    }
    return SymMatrix::from_dense(m.size(), std::move(c));
}

double max_abs_diff(const SymMatrix& a, const SymMatrix& b)
{
    require_same_size(a, b);
    double m = 0.0;
    const auto ad = a.data();
    const auto bd = b.data();
    for (std::size_t i = 0; i < ad.size(); ++i)
        m = std::max(m, std::abs(ad[i] - bd[i]));
    return m;
}

double frobenius_inner(const SymMatrix& a, const SymMatrix& b)
{
    require_same_size(a, b);
    const auto ad = a.data();
    const auto bd = b.data();
    double s = 0.0;
    for (std::size_t i = 0; i < ad.size(); ++i)
        s += ad[i] * bd[i];
    return s;
}

SymMatrix eval_matrix_poly(std::span<const double> coeffs, const SymMatrix& m, PolyMode mode)
{
    if (coeffs.empty())
        throw Error("polynomial has no coefficients");
    const std::size_t n = m.size();
    const SymMatrix unit = mode == PolyMode::Ordinary ? SymMatrix::identity(n) : SymMatrix::ones(n);
    // Horner
    SymMatrix acc = coeffs.back() * unit;
    for (std::size_t t = coeffs.size() - 1; t-- > 0;) {
        acc = mode == PolyMode::Ordinary ? product(acc, m) : hadamard_product(acc, m);
        acc += coeffs[t] * unit;
    }
    return acc;
}

std::vector<double> poly_from_roots(std::span<const double> roots, double scale)
{
    std::vector<double> c{scale};
    for (double r : roots) {
        std::vector<double> next(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = std::move(next);
    }
    return c;
}

JacobiResult jacobi_eigen(const SymMatrix& m, bool want_vectors)
{
    const std::size_t n = m.size();
    std::vector<double> a(m.data().begin(), m.data().end());
    JacobiResult res;
    if (want_vectors) {
        res.vectors.assign(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            res.vectors[i * n + i] = 1.0;
    }
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

    constexpr int kMaxSweeps = 100;
    for (; res.sweeps < kMaxSweeps; ++res.sweeps) {
        double off = 0.0, diag = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            diag += at(i, i) * at(i, i);
            for (std::size_t j = i + 1; j < n; ++j)
                off += 2.0 * at(i, j) * at(i, j);
        }
        if (off == 0.0 || std::sqrt(off) < 1e-12 * std::sqrt(diag))
            break;

        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0)
                    continue;
                const double app = at(p, p), aqq = at(q, q);
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0)
                                 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                at(p, p) = app - t * apq;
                at(q, q) = aqq + t * apq;
                at(p, q) = at(q, p) = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q)
                        continue;
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = at(p, k) = c * akp - s * akq;
                    at(k, q) = at(q, k) = s * akp + c * akq;
                }
                if (want_vectors) {
                    for (std::size_t k = 0; k < n; ++k) {
                        double& vkp = res.vectors[p * n + k];
                        double& vkq = res.vectors[q * n + k];
                        const double xp = vkp, xq = vkq;
                        vkp = c * xp - s * xq;
                        vkq = s * xp + c * xq;
                    }
                }
            }
    }
    if (res.sweeps == kMaxSweeps)
        throw Error("Jacobi iteration did not converge");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return at(x, x) < at(y, y); });
    res.values.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        res.values[i] = at(order[i], order[i]);
    if (want_vectors) {
        std::vector<double> sorted(n * n);
        for (std::size_t i = 0; i < n; ++i)
            std::copy_n(&res.vectors[order[i] * n], n, &sorted[i * n]);
        res.vectors = std::move(sorted);
    }
    return res;
}

std::vector<double> eigenvalues(const SymMatrix& m) { return jacobi_eigen(m, false).values; }

std::size_t EigenClusters::total() const noexcept
{
    return std::accumulate(multiplicities.begin(), multiplicities.end(), std::size_t{0});
}

std::size_t EigenClusters::find(double x, double tol) const noexcept
{
    for (std::size_t i = 0; i < values.size(); ++i)
        if (std::abs(values[i] - x) <= tol)
            return i;
    return npos;
}

double snap(double x, double tol) noexcept
{
    const double r = std::round(x);
    return std::abs(x - r) <= tol ? r : x;
}

EigenClusters cluster_values(std::vector<double> raw, double tol)
{
    if (!(tol > 0.0))
        throw Error("clustering tolerance must be positive");
    std::sort(raw.begin(), raw.end(), std::greater<>());
    EigenClusters out;
    out.tolerance = tol;
    std::size_t start = 0;
    auto flush = [&](std::size_t end) {
        if (raw[start] - raw[end - 1] > tol) {
            std::ostringstream msg;
            msg << "tolerance ambiguity: cluster spread " << raw[start] - raw[end - 1]
                << " exceeds tol " << tol;
            throw ToleranceAmbiguity(msg.str(), raw[start] - raw[end - 1]);
        }
        const double mean = std::accumulate(raw.begin() + static_cast<std::ptrdiff_t>(start),
                                            raw.begin() + static_cast<std::ptrdiff_t>(end), 0.0)
                            / static_cast<double>(end - start);
        out.values.push_back(snap(mean, tol));
        out.multiplicities.push_back(end - start);
    };
    for (std::size_t i = 1; i <= raw.size(); ++i) {
        if (i == raw.size()) {
            flush(i);
            break;
        }
        const double gap = raw[i - 1] - raw[i];
        if (gap <= tol)
            continue;
        if (gap <= 2.0 * tol) {
            std::ostringstream msg;
            msg << "tolerance ambiguity: values " << raw[i - 1] << " and " << raw[i]
                << " are separated by " << gap << ", inside (tol, 2*tol] for tol " << tol;
            throw ToleranceAmbiguity(msg.str(), gap);
        }
        flush(i);
        start = i;
    }
    return out;
}

EigenClusters eigen_clusters(const SymMatrix& m, double tol)
{
    return cluster_values(eigenvalues(m), tol);
}

std::size_t rank_tol(const SymMatrix& m, double tol)
{
    const auto ev = eigenvalues(m);
    return static_cast<std::size_t>(
        std::count_if(ev.begin(), ev.end(), [tol](double v) { return std::abs(v) > tol; }));
}

std::vector<double> invert_small(std::vector<double> a, std::size_t n, double tol)
{
    std::vector<double> inv(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        inv[i * n + i] = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col]))
                piv = r;
        if (std::abs(a[piv * n + col]) < tol)
            throw Error("singular matrix");
        if (piv != col)
            for (std::size_t k = 0; k < n; ++k) {
                std::swap(a[piv * n + k], a[col * n + k]);
                std::swap(inv[piv * n + k], inv[col * n + k]);
            }
        const double d = a[col * n + col];
        for (std::size_t k = 0; k < n; ++k) {
            a[col * n + k] /= d;
            inv[col * n + k] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col)
                continue;
            const double f = a[r * n + col];
            if (f == 0.0)
                continue;
            for (std::size_t k = 0; k < n; ++k) {
                a[r * n + k] -= f * a[col * n + k];
                inv[r * n + k] -= f * inv[col * n + k];
            }
        }
    }
    return inv;
}

std::uint64_t binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::int64_t t = 1; t <= k; ++t) {
        r = r * static_cast<unsigned __int128>(n - k + t) / static_cast<unsigned __int128>(t);
        if (r > UINT64_MAX)
            throw OverflowError("binomial overflow");
    }
    return static_cast<std::uint64_t>(r);
}

} // namespace ascheme
