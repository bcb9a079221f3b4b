#include "ascheme/generators.hpp"

#include "ascheme/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace ascheme {

namespace {

struct FamilyEntry {
    Family family;
    std::string_view name;
    std::size_t arity;
};

constexpr FamilyEntry kFamilies[] = {
    {Family::Cycle, "cycle", 1},          {Family::Complete, "complete", 1},
    {Family::Petersen, "petersen", 0},    {Family::HoffmanSingleton, "hoffman_singleton", 0},
    {Family::Paley, "paley", 1},          {Family::Johnson, "johnson", 2},
    {Family::Hamming, "hamming", 2},
};

const FamilyEntry& entry(Family f)
{
    for (const auto& e : kFamilies)
        if (e.family == f)
            return e;
    throw DomainError("unknown family");
}

bool is_prime(int q)
{
    if (q < 2)
        return false;
    for (int t = 2; t * t <= q; ++t)
        if (q % t == 0)
            return false;
    return true;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow");
    return r;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t e)
{
    std::uint64_t r = 1;
    for (std::uint64_t t = 0; t < e; ++t)
        r = checked_mul(r, base);
    return r;
}

void check_dense(const FamilySpec& spec, std::size_t max_dense)
{
    const auto n = spec.point_count();
    if (n > max_dense)
        throw GraphError(GraphError::Kind::TooLarge,
                         spec.name() + " has " + std::to_string(n) + " points, above the dense limit "
                             + std::to_string(max_dense));
}

int arg(const FamilySpec& spec, std::size_t i) { return spec.params.at(i); }

// Johnson: k-subsets of {0..n-1} as bitmasks, in lexicographic mask order.
std::vector<std::uint64_t> subsets(int n, int k)
{
    if (n > 63)
        throw DomainError("explicit Johnson construction supports n <= 63");
    std::vector<std::uint64_t> out;
    if (k == 0)
        return {0};
    std::uint64_t m = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (m < limit) {
        out.push_back(m);
        // Gosper's hack
        const std::uint64_t c = m & (~m + 1);
        const std::uint64_t r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    return out;
}

int hamming_distance(int a, int b, int d, int q)
{
    int dist = 0;
    for (int t = 0; t < d; ++t) {
        dist += (a % q) != (b % q) ? 1 : 0;
        a /= q;
        b /= q;
    }
    return dist;
}

} // namespace

std::string_view family_name(Family f) noexcept
{
    for (const auto& e : kFamilies)
        if (e.family == f)
            return e.name;
    return "unknown";
}

Family family_from_name(std::string_view name)
{
    for (const auto& e : kFamilies)
        if (e.name == name)
            return e.family;
    throw DomainError("unknown family '" + std::string(name) + "'");
}

FamilySpec parse_family(std::string_view name, const std::vector<int>& params)
{
    FamilySpec spec{family_from_name(name), params};
    spec.validate();
    return spec;
}

void FamilySpec::validate() const
{
    const auto& e = entry(family);
    if (params.size() != e.arity)
        throw DomainError(std::string(e.name) + " takes " + std::to_string(e.arity) + " parameter(s)");
    switch (family) {
    case Family::Cycle:
        if (params[0] < 3)
            throw DomainError("cycle needs n >= 3");
        break;
    case Family::Complete:
        if (params[0] < 2)
            throw DomainError("complete graph needs n >= 2");
        break;
    case Family::Paley:
        if (!is_prime(params[0]) || params[0] % 4 != 1 || params[0] > 10000)
            throw DomainError("paley needs a prime q = 1 mod 4 with q <= 10000");
        break;
    case Family::Johnson:
        if (!(params[0] > params[1] && params[1] >= 1))
            throw DomainError("johnson needs n > k >= 1");
        break;
    case Family::Hamming:
        if (params[0] < 1 || params[1] < 2)
            throw DomainError("hamming needs d >= 1 and q >= 2");
        break;
    case Family::Petersen:
    case Family::HoffmanSingleton: break;
    }
}

std::string FamilySpec::name() const
{
    std::string s(family_name(family));
    for (std::size_t i = 0; i < params.size(); ++i)
        s += (i == 0 ? "(" : ",") + std::to_string(params[i]);
    if (!params.empty())
        s += ")";
    return s;
}

std::uint64_t FamilySpec::point_count() const
{
    validate();
    switch (family) {
    case Family::Cycle:
    case Family::Complete:
    case Family::Paley: return static_cast<std::uint64_t>(params[0]);
    case Family::Petersen: return 10;
    case Family::HoffmanSingleton: return 50;
    case Family::Johnson: return binomial(params[0], params[1]);
    case Family::Hamming: return checked_pow(static_cast<std::uint64_t>(params[1]), static_cast<std::uint64_t>(params[0]));
    }
    return 0;
}

Graph build_graph(const FamilySpec& spec, std::size_t max_dense)
{
    spec.validate();
    check_dense(spec, max_dense);
    std::vector<std::pair<int, int>> edges;
    switch (spec.family) {
    case Family::Cycle: {
        const int n = arg(spec, 0);
        for (int v = 0; v < n; ++v)
            edges.emplace_back(v, (v + 1) % n);
        return Graph(n, edges);
    }
    case Family::Complete: {
        const int n = arg(spec, 0);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                edges.emplace_back(u, v);
        return Graph(n, edges);
    }
    case Family::Petersen: {
        // Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint.
        const auto sets = subsets(5, 2);
        for (std::size_t a = 0; a < sets.size(); ++a)
            for (std::size_t b = a + 1; b < sets.size(); ++b)
                if ((sets[a] & sets[b]) == 0)
                    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        return Graph(10, edges);
    }
    case Family::HoffmanSingleton: {
        // Pentagons P_h (vertex 5h+j) and pentagrams Q_i (vertex 25+5i+j);
        // vertex j of P_h is joined to vertex h*i+j (mod 5) of Q_i.
        auto pv = [](int h, int j) { return 5 * h + (j % 5); };
        auto qv = [](int i, int j) { return 25 + 5 * i + (j % 5); };
        for (int h = 0; h < 5; ++h)
            for (int j = 0; j < 5; ++j) {
                edges.emplace_back(pv(h, j), pv(h, j + 1));
                edges.emplace_back(qv(h, j), qv(h, j + 2));
                for (int i = 0; i < 5; ++i)
                    edges.emplace_back(pv(h, j), qv(i, h * i + j));
            }
        return Graph(50, edges);
    }
    case Family::Paley: {
        const int q = arg(spec, 0);
        std::vector<bool> square(static_cast<std::size_t>(q), false);
        for (long x = 1; x < q; ++x)
            square[static_cast<std::size_t>((x * x) % q)] = true;
        for (int u = 0; u < q; ++u)
            for (int v = u + 1; v < q; ++v)
                if (square[static_cast<std::size_t>(v - u)])
                    edges.emplace_back(u, v);
        return Graph(q, edges);
    }
    case Family::Johnson: {
        const int k = arg(spec, 1);
        const auto sets = subsets(arg(spec, 0), k);
        for (std::size_t a = 0; a < sets.size(); ++a)
            for (std::size_t b = a + 1; b < sets.size(); ++b)
                if (std::popcount(sets[a] & sets[b]) == k - 1)
                    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        return Graph(static_cast<int>(sets.size()), edges);
    }
    case Family::Hamming: {
        const int d = arg(spec, 0), q = arg(spec, 1);
        const int n = static_cast<int>(spec.point_count());
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (hamming_distance(a, b, d, q) == 1)
                    edges.emplace_back(a, b);
        return Graph(n, edges);
    }
    }
    throw DomainError("unsupported family");
}

RelationPartition distance_partition(const Graph& g)
{
    const DistanceData dd(g);
    if (!dd.connected())
        throw GraphError(GraphError::Kind::NotConnected, "distance partition needs a connected graph");
    const int n = g.order();
    std::vector<int> labels(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            labels[static_cast<std::size_t>(x * n + y)] = dd(x, y);
    return RelationPartition(n, dd.diameter(), std::move(labels));
}

RelationPartition build_scheme(const FamilySpec& spec, std::size_t max_dense)
{
    spec.validate();
    check_dense(spec, max_dense);
    if (spec.family == Family::Johnson) {
        const int k = arg(spec, 1);
        const auto sets = subsets(arg(spec, 0), k);
        const int n = static_cast<int>(sets.size());
        std::vector<int> labels(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                labels[static_cast<std::size_t>(a * n + b)] = k - std::popcount(sets[static_cast<std::size_t>(a)] & sets[static_cast<std::size_t>(b)]);
        return RelationPartition(n, std::min(k, arg(spec, 0) - k), std::move(labels));
    }
    if (spec.family == Family::Hamming) {
        const int d = arg(spec, 0), q = arg(spec, 1);
        const int n = static_cast<int>(spec.point_count());
        std::vector<int> labels(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                labels[static_cast<std::size_t>(a * n + b)] = hamming_distance(a, b, d, q);
        return RelationPartition(n, d, std::move(labels));
    }
    auto rel = distance_partition(build_graph(spec, max_dense));
    try {
        validate_scheme(rel);
    } catch (const SchemeAxiomError& e) {
        throw SchemeAxiomError(e.axiom(), "distance partition is not a scheme: " + std::string(e.what()), e.witnesses());
    }
    return rel;
}

IntersectionNumbers family_intersection_numbers(const FamilySpec& spec)
{
    spec.validate();
    if (spec.family == Family::Johnson) {
        const std::int64_t n = arg(spec, 0);
        const std::int64_t k = std::min<std::int64_t>(arg(spec, 1), n - arg(spec, 1));
        const int d = static_cast<int>(k);
        IntersectionNumbers p(d);
        for (int l = 0; l <= d; ++l) {
            const std::int64_t common = k - l, rest = n - k - l;
            for (int i = 0; i <= d; ++i)
                for (int j = 0; j <= d; ++j) {
                    std::uint64_t total = 0;
                    // a from x&y, b from x\y, c from y\x, e from the rest
                    for (std::int64_t a = 0; a <= common; ++a) {
                        const std::int64_t b = k - i - a, c = k - j - a, e = k - a - b - c;
                        if (b < 0 || c < 0 || e < 0 || b > l || c > l || e > rest)
                            continue;
                        std::uint64_t term = checked_mul(binomial(common, a), binomial(l, b));
                        term = checked_mul(term, binomial(l, c));
                        term = checked_mul(term, binomial(rest, e));
                        if (__builtin_add_overflow(total, term, &total))
                            throw OverflowError("intersection number overflow");
                    }
                    p.at(i, j, l) = static_cast<std::int64_t>(total);
                }
        }
        return p;
    }
    if (spec.family == Family::Hamming) {
        const int d = arg(spec, 0);
        const std::uint64_t q = static_cast<std::uint64_t>(arg(spec, 1));
        IntersectionNumbers p(d);
        for (int l = 0; l <= d; ++l)
            for (int i = 0; i <= d; ++i)
                for (int j = 0; j <= d; ++j) {
                    std::uint64_t total = 0;
                    // a agreeing coordinates changed, b differing coordinates
                    // set to y's value, c set to a third value
                    for (int a = 0; a <= d - l; ++a)
                        for (int b = 0; b <= l; ++b) {
                            const int c = i - a - b;
                            if (c < 0 || b + c > l || a + l - b != j)
                                continue;
                            std::uint64_t term = checked_mul(binomial(d - l, a), checked_pow(q - 1, static_cast<std::uint64_t>(a)));
                            term = checked_mul(term, binomial(l, b));
                            term = checked_mul(term, binomial(l - b, c));
                            term = checked_mul(term, checked_pow(q - 2, static_cast<std::uint64_t>(c)));
                            if (__builtin_add_overflow(total, term, &total))
                                throw OverflowError("intersection number overflow");
                        }
                    p.at(i, j, l) = static_cast<std::int64_t>(total);
                }
        return p;
    }
    throw DomainError("closed-form parameters exist only for johnson and hamming");
}

ClosedForm closed_form(const FamilySpec& spec)
{
    spec.validate();
    ClosedForm cf;
    cf.points = spec.point_count();
    if (spec.family == Family::Johnson) {
        const std::int64_t n = arg(spec, 0);
        const std::int64_t k = std::min<std::int64_t>(arg(spec, 1), n - arg(spec, 1));
        for (std::int64_t i = 0; i <= k; ++i) {
            cf.degrees.push_back(static_cast<std::int64_t>(checked_mul(binomial(k, i), binomial(n - k, i))));
            cf.first_eigenvalues.push_back((k - i) * (n - k - i) - i);
            cf.multiplicities.push_back(static_cast<std::int64_t>(binomial(n, i)) - static_cast<std::int64_t>(binomial(n, i - 1)));
        }
        return cf;
    }
    if (spec.family == Family::Hamming) {
        const std::int64_t d = arg(spec, 0), q = arg(spec, 1);
        for (std::int64_t i = 0; i <= d; ++i) {
            const auto v = static_cast<std::int64_t>(checked_mul(binomial(d, i), checked_pow(static_cast<std::uint64_t>(q - 1), static_cast<std::uint64_t>(i))));
            cf.degrees.push_back(v);
            cf.first_eigenvalues.push_back(d * (q - 1) - q * i);
            cf.multiplicities.push_back(v);
        }
        return cf;
    }
    throw DomainError("closed-form parameters exist only for johnson and hamming");
}

SchemeParameters family_parameters(const FamilySpec& spec, double tol)
{
    const auto cf = closed_form(spec);
    const auto p = family_intersection_numbers(spec);
    auto params = parametric_parameters(p, static_cast<std::int64_t>(cf.points), tol);
    for (int j = 0; j <= params.d; ++j) {
        const auto uj = static_cast<std::size_t>(j);
        const double scale = std::max(1.0, static_cast<double>(cf.points));
        if (params.degrees[uj] != cf.degrees[uj]
            || std::abs(params.p_val(1, j) - static_cast<double>(cf.first_eigenvalues[uj])) > tol * scale
            || std::abs(params.multiplicities[uj] - static_cast<double>(cf.multiplicities[uj])) > tol * scale)
            throw Error(spec.name() + ": parametric path disagrees with the closed form at index " + std::to_string(j));
        // closed forms are exact integers
        params.P[static_cast<std::size_t>(j * (params.d + 1) + 1)] = static_cast<double>(cf.first_eigenvalues[uj]);
        params.multiplicities[uj] = static_cast<double>(cf.multiplicities[uj]);
    }
    return params;
}

std::vector<FamilySpec> catalog_graphs()
{
    return {
        {Family::Cycle, {5}},       {Family::Cycle, {6}},          {Family::Cycle, {7}},
        {Family::Complete, {4}},    {Family::Complete, {7}},       {Family::Petersen, {}},
        {Family::HoffmanSingleton, {}}, {Family::Paley, {13}},     {Family::Paley, {17}},
        {Family::Johnson, {5, 2}},  {Family::Johnson, {7, 3}},     {Family::Hamming, {3, 2}},
        {Family::Hamming, {3, 3}},  {Family::Hamming, {2, 4}},
    };
}

std::vector<FamilySpec> catalog_schemes()
{
    return {
        {Family::Complete, {5}},  {Family::Cycle, {5}},       {Family::Cycle, {6}},
        {Family::Cycle, {7}},     {Family::Petersen, {}},     {Family::HoffmanSingleton, {}},
        {Family::Paley, {13}},    {Family::Johnson, {6, 2}},  {Family::Johnson, {7, 3}},
        {Family::Johnson, {8, 3}}, {Family::Hamming, {3, 2}}, {Family::Hamming, {3, 3}},
        {Family::Hamming, {4, 2}},
    };
}

} // namespace ascheme
