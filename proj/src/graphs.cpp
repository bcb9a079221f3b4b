#include "ascheme/graphs.hpp"

#include "ascheme/errors.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <string>

namespace ascheme {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges)
{
    if (n < 1)
        throw GraphError(GraphError::Kind::Invalid, "graph needs at least one vertex");
    adj_.resize(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError(GraphError::Kind::Invalid,
                             "edge (" + std::to_string(u) + ", " + std::to_string(v)
                                 + ") out of range");
        if (u == v)
            throw GraphError(GraphError::Kind::Invalid, "self-loop at " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (std::size_t v = 0; v < adj_.size(); ++v) {
        auto& nb = adj_[v];
        std::sort(nb.begin(), nb.end());
        if (auto it = std::adjacent_find(nb.begin(), nb.end()); it != nb.end())
            throw GraphError(GraphError::Kind::Invalid, "duplicate edge (" + std::to_string(v)
                                                            + ", " + std::to_string(*it) + ")");
    }
}

std::size_t Graph::edge_count() const noexcept
{
    std::size_t twice = 0;
    for (const auto& nb : adj_)
        twice += nb.size();
    return twice / 2;
}

bool Graph::has_edge(int u, int v) const
{
    const auto& nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<int> Graph::regular_degree() const
{
    if (adj_.empty())
        return std::nullopt;
    const auto k = adj_.front().size();
    for (const auto& nb : adj_)
        if (nb.size() != k)
            return std::nullopt;
    return static_cast<int>(k);
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order(); ++u)
        for (int v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

SymMatrix Graph::adjacency_matrix() const
{
    SymMatrix a(adj_.size());
    for (int u = 0; u < order(); ++u)
        for (int v : neighbors(u))
            a.set(static_cast<std::size_t>(u), static_cast<std::size_t>(v), 1.0);
    return a;
}

DistanceData::DistanceData(const Graph& g)
    : n_(g.order()), dist_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), kUnreachable)
{
    std::vector<int> queue(static_cast<std::size_t>(n_));
    for (int s = 0; s < n_; ++s) {
        int* row = &dist_[static_cast<std::size_t>(s * n_)];
        row[s] = 0;
        std::size_t head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            const int u = queue[head++];
            for (int w : g.neighbors(u))
                if (row[w] == kUnreachable) {
                    row[w] = row[u] + 1;
                    queue[tail++] = w;
                }
        }
        if (tail != static_cast<std::size_t>(n_))
            connected_ = false;
        for (int v = 0; v < n_; ++v)
            diameter_ = std::max(diameter_, row[v]);
    }
}

std::vector<std::pair<int, int>> DistanceData::pairs_at(int t) const
{
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < n_; ++x)
        for (int y = x + 1; y < n_; ++y)
            if ((*this)(x, y) == t)
                out.emplace_back(x, y);
    return out;
}

int DistanceData::sphere_size(int x, int t) const
{
    int c = 0;
    for (int y = 0; y < n_; ++y)
        c += (*this)(x, y) == t ? 1 : 0;
    return c;
}

std::optional<int> girth(const Graph& g)
{
    const int n = g.order();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(static_cast<std::size_t>(n)), parent(static_cast<std::size_t>(n));
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<std::size_t>(s)] = 0;
        parent[static_cast<std::size_t>(s)] = -1;
        queue.assign(1, s);
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            const auto du = static_cast<std::size_t>(u);
            // No shorter cycle through s can appear past this depth.
            if (2 * dist[du] + 1 >= best)
                break;
            for (int w : g.neighbors(u)) {
                const auto dw = static_cast<std::size_t>(w);
                if (dist[dw] == -1) {
                    dist[dw] = dist[du] + 1;
                    parent[dw] = u;
                    queue.push_back(w);
                } else if (parent[du] != w) {
                    best = std::min(best, dist[du] + dist[dw] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max())
        return std::nullopt;
    return best;
}

bool is_connected(const Graph& g) { return DistanceData(g).connected(); }

std::uint64_t moore_bound(std::uint64_t k, unsigned d)
{
    std::uint64_t sum = 0;   // sum_{j<d} (k-1)^j
    std::uint64_t term = 1;  // (k-1)^j
    for (unsigned j = 0; j < d; ++j) {
        if (__builtin_add_overflow(sum, term, &sum))
            throw OverflowError("Moore bound overflow");
        if (j + 1 < d && k > 1 && __builtin_mul_overflow(term, k - 1, &term))
            throw OverflowError("Moore bound overflow");
        if (k <= 1)
            term = 0;
    }
    std::uint64_t prod = 0;
    if (__builtin_mul_overflow(k, sum, &prod) || __builtin_add_overflow(prod, 1, &prod))
        throw OverflowError("Moore bound overflow");
    return prod;
}

namespace {

struct RegularConnected {
    int k = 0;
    std::string problem;
};

RegularConnected check_regular_connected(const Graph& g)
{
    RegularConnected rc;
    const auto k = g.regular_degree();
    if (!k) {
        rc.problem = "not regular";
        return rc;
    }
    rc.k = *k;
    if (!is_connected(g))
        rc.problem = "not connected";
    return rc;
}

std::string describe(const Graph& g)
{
    return "graph on " + std::to_string(g.order()) + " vertices";
}

} // namespace

ProjectorFamily spectral_projectors(const Graph& g, double tol)
{
    const auto rc = check_regular_connected(g);
    if (!rc.problem.empty())
        throw GraphError(rc.problem == "not regular" ? GraphError::Kind::NotRegular
                                                     : GraphError::Kind::NotConnected,
                         rc.problem);
    const SymMatrix a = g.adjacency_matrix();
    ProjectorFamily fam;
    fam.spectrum = eigen_clusters(a, tol);
    const auto& theta = fam.spectrum.values;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < theta.size(); ++i) {
        SymMatrix e = SymMatrix::identity(n);
        for (std::size_t j = 0; j < theta.size(); ++j) {
            if (j == i)
                continue;
            SymMatrix factor = a - theta[j] * SymMatrix::identity(n);
            factor *= 1.0 / (theta[i] - theta[j]);
            e = product(e, factor);
        }
        fam.projectors.push_back(std::move(e));
    }
    return fam;
}

double k_factor(const EigenClusters& spectrum, std::size_t i)
{
    const auto& theta = spectrum.values;
    if (i < 1 || i >= theta.size())
        throw Error("k_factor index out of range");
    double k = 1.0;
    for (std::size_t j = 1; j < theta.size(); ++j)
        if (j != i)
            k *= (theta[0] - theta[j]) / (theta[i] - theta[j]);
    return k;
}

namespace {

// Checks E_i(x,y) = -K_i/n on every pair at distance d. Fills evidence and
// deviation on `r`; returns false on a mismatch.
bool check_entries_at_max_distance(const ProjectorFamily& fam, const DistanceData& dd, int d,
                                   double tol, TheoremReport& r)
{
    const double n = static_cast<double>(dd.order());
    const auto pairs = dd.pairs_at(d);
    nlohmann::json asserted = nlohmann::json::array();
    bool ok = true;
    std::pair<int, int> worst{-1, -1};
    int worst_i = 0;
    for (int i = 1; i <= d; ++i) {
        const double ki = k_factor(fam.spectrum, static_cast<std::size_t>(i));
        const double expected = -ki / n;
        asserted.push_back({{"i", i},
                            {"K_i", ki},
                            {"expected", expected},
                            {"expected_text", format_value(expected, tol)}});
        const auto& e = fam.projectors[static_cast<std::size_t>(i)];
        for (auto [x, y] : pairs) {
            const double dev = std::abs(e(static_cast<std::size_t>(x), static_cast<std::size_t>(y)) - expected);
            if (dev >= r.max_deviation) {
                r.max_deviation = dev;
                worst = {x, y};
                worst_i = i;
            }
        }
    }
    r.evidence["asserted"] = asserted;
    r.evidence["pairs_checked"] = pairs.size();
    r.evidence["worst_pair"] = {worst.first, worst.second};
    r.evidence["worst_index"] = worst_i;
    if (r.max_deviation > tol) {
        r.fail("projector entry deviates from -K_i/|V|",
               {{"i", worst_i}, {"x", worst.first}, {"y", worst.second}});
        ok = false;
    }
    return ok;
}

} // namespace

TheoremReport verify_projector_entries(const Graph& g, double tol)
{
    TheoremReport r;
    r.subject = describe(g);
    r.theorem = "projector-entries";
    r.tolerance = tol;
    const auto rc = check_regular_connected(g);
    if (!rc.problem.empty()) {
        r.status = Status::HypothesisNotMet;
        r.reason = rc.problem;
        return r;
    }
    const DistanceData dd(g);
    const auto fam = spectral_projectors(g, tol);
    const int d = dd.diameter();
    const int s = static_cast<int>(fam.spectrum.count()) - 1;
    r.evidence["diameter"] = d;
    r.evidence["distinct_eigenvalues"] = s + 1;
    r.evidence["degree"] = rc.k;
    if (s != d || d == 0) {
        r.status = Status::HypothesisNotMet;
        r.reason = "number of distinct eigenvalues (" + std::to_string(s + 1)
                   + ") is not diameter + 1 (" + std::to_string(d + 1) + ")";
        return r;
    }
    r.status = Status::Pass;
    check_entries_at_max_distance(fam, dd, d, tol, r);
    return r;
}

TheoremReport large_graph_report(const Graph& g, double tol)
{
    TheoremReport r;
    r.subject = describe(g);
    r.theorem = "large-graph";
    r.tolerance = tol;
    const auto rc = check_regular_connected(g);
    if (!rc.problem.empty()) {
        r.status = Status::HypothesisNotMet;
        r.reason = rc.problem;
        return r;
    }
    const auto fam = spectral_projectors(g, tol);
    const int d = static_cast<int>(fam.spectrum.count()) - 1;
    const auto n = static_cast<std::uint64_t>(g.order());
    r.evidence["degree"] = rc.k;
    r.evidence["d"] = d;
    if (d == 0) {
        r.status = Status::HypothesisNotMet;
        r.reason = "graph has a single distinct eigenvalue";
        return r;
    }
    const std::uint64_t bound = moore_bound(static_cast<std::uint64_t>(rc.k), static_cast<unsigned>(d - 1));
    r.evidence["moore_bound_d_minus_1"] = bound;
    r.evidence["order"] = n;
    if (n <= bound) {
        r.status = Status::Inconclusive;
        r.reason = "size hypothesis not met";
        return r;
    }
    r.status = Status::Pass;

    // (1) diameter equals d
    const DistanceData dd(g);
    r.evidence["diameter"] = dd.diameter();
    if (dd.diameter() != d) {
        r.fail("diameter differs from d", {{"diameter", dd.diameter()}, {"d", d}});
        return r;
    }
    // (2) holds by construction once d is read off the spectrum
    r.evidence["distinct_eigenvalues"] = d + 1;

    // (3)
    if (!check_entries_at_max_distance(fam, dd, d, tol, r))
        return r;

    // (4) per-row count of entries equal to -K_i/n
    const std::uint64_t need = n - bound;
    std::size_t min_count = std::numeric_limits<std::size_t>::max();
    nlohmann::json per_index = nlohmann::json::array();
    for (int i = 1; i <= d; ++i) {
        const double expected = -k_factor(fam.spectrum, static_cast<std::size_t>(i)) / static_cast<double>(n);
        const auto& e = fam.projectors[static_cast<std::size_t>(i)];
        std::size_t row_min = std::numeric_limits<std::size_t>::max();
        for (std::size_t x = 0; x < n; ++x) {
            std::size_t c = 0;
            for (std::size_t y = 0; y < n; ++y)
                c += std::abs(e(x, y) - expected) <= tol ? 1 : 0;
            row_min = std::min(row_min, c);
            if (c < need) {
                r.fail("row has too few entries equal to -K_i/|V|",
                       {{"i", i}, {"row", x}, {"count", c}, {"required", need}});
                return r;
            }
        }
        per_index.push_back({{"i", i}, {"min_row_count", row_min}});
        min_count = std::min(min_count, row_min);
    }
    r.evidence["row_count_required"] = need;
    r.evidence["row_counts"] = per_index;
    r.evidence["min_row_count"] = min_count;
    return r;
}

} // namespace ascheme
