#include "ascheme/io.hpp"

#include "ascheme/errors.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace ascheme {

namespace {

// Yields non-empty, comment-stripped lines with their 1-based line numbers.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::istringstream& fields)
    {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++line_;
            if (auto hash = raw.find('#'); hash != std::string::npos)
                raw.erase(hash);
            if (raw.find_first_not_of(" \t\r") == std::string::npos)
                continue;
            fields.clear();
            fields.str(raw);
            return true;
        }
        return false;
    }

    int line() const noexcept { return line_; }

    template <typename T>
    T take(std::istringstream& fields, const char* what)
    {
        T v{};
        if (!(fields >> v))
            throw ParseError(line_, std::string("expected ") + what);
        return v;
    }

    void finish(std::istringstream& fields)
    {
        std::string extra;
        if (fields >> extra)
            throw ParseError(line_, "unexpected trailing token '" + extra + "'");
    }

private:
    std::istream& in_;
    int line_ = 0;
};

void check_size(std::int64_t n, std::size_t max_dense, int line)
{
    if (n < 1)
        throw ParseError(line, "size must be positive");
    if (static_cast<std::uint64_t>(n) > max_dense)
        throw ParseError(line, "size " + std::to_string(n) + " exceeds the dense limit " + std::to_string(max_dense));
}

} // namespace

Graph read_edge_list(std::istream& in, std::size_t max_dense)
{
    LineReader lr(in);
    std::istringstream f;
    if (!lr.next(f))
        throw ParseError(lr.line(), "missing header 'n m'");
    const auto n = lr.take<std::int64_t>(f, "vertex count n");
    const auto m = lr.take<std::int64_t>(f, "edge count m");
    lr.finish(f);
    check_size(n, max_dense, lr.line());
    if (m < 0)
        throw ParseError(lr.line(), "edge count must be nonnegative");
    std::vector<std::pair<int, int>> edges;
    for (std::int64_t e = 0; e < m; ++e) {
        if (!lr.next(f))
            throw ParseError(lr.line(), "expected " + std::to_string(m) + " edges, found " + std::to_string(e));
        const auto u = lr.take<int>(f, "vertex u");
        const auto v = lr.take<int>(f, "vertex v");
        lr.finish(f);
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(lr.line(), "vertex index out of range");
        edges.emplace_back(u, v);
    }
    if (lr.next(f))
        throw ParseError(lr.line(), "unexpected content after the edge list");
    try {
        return Graph(static_cast<int>(n), edges);
    } catch (const GraphError& e) {
        throw ParseError(lr.line(), e.what());
    }
}

void write_edge_list(std::ostream& out, const Graph& g)
{
    const auto edges = g.edges();
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges)
        out << u << ' ' << v << '\n';
}

RelationPartition read_relation_matrix(std::istream& in, std::size_t max_dense)
{
    LineReader lr(in);
    std::istringstream f;
    if (!lr.next(f))
        throw ParseError(lr.line(), "missing header 'n d'");
    const auto n = lr.take<std::int64_t>(f, "point count n");
    const auto d = lr.take<int>(f, "class count d");
    lr.finish(f);
    check_size(n, max_dense, lr.line());
    std::vector<int> labels;
    labels.reserve(static_cast<std::size_t>(n * n));
    for (std::int64_t r = 0; r < n; ++r) {
        if (!lr.next(f))
            throw ParseError(lr.line(), "expected " + std::to_string(n) + " rows");
        for (std::int64_t c = 0; c < n; ++c)
            labels.push_back(lr.take<int>(f, "relation label"));
        lr.finish(f);
    }
    return RelationPartition(static_cast<int>(n), d, std::move(labels));
}

void write_relation_matrix(std::ostream& out, const RelationPartition& rel)
{
    out << rel.order() << ' ' << rel.classes() << '\n';
    for (int x = 0; x < rel.order(); ++x) {
        for (int y = 0; y < rel.order(); ++y)
            out << (y ? " " : "") << rel(x, y);
        out << '\n';
    }
}

TensorFile read_tensor(std::istream& in)
{
    LineReader lr(in);
    std::istringstream f;
    if (!lr.next(f))
        throw ParseError(lr.line(), "missing header 'n d'");
    TensorFile t;
    t.n = lr.take<std::int64_t>(f, "point count n");
    const auto d = lr.take<int>(f, "class count d");
    lr.finish(f);
    if (d < 1 || t.n < 2)
        throw ParseError(lr.line(), "need n >= 2 and d >= 1");
    t.p = IntersectionNumbers(d);
    while (lr.next(f)) {
        const auto i = lr.take<int>(f, "index i");
        const auto j = lr.take<int>(f, "index j");
        const auto k = lr.take<int>(f, "index k");
        const auto p = lr.take<std::int64_t>(f, "value p");
        lr.finish(f);
        if (i < 0 || j < 0 || k < 0 || i > d || j > d || k > d)
            throw ParseError(lr.line(), "index outside 0.." + std::to_string(d));
        t.p.at(i, j, k) = p;
    }
    return t;
}

void write_tensor(std::ostream& out, std::int64_t n, const IntersectionNumbers& p)
{
    const int d = p.classes();
    out << n << ' ' << d << '\n';
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j)
            for (int k = 0; k <= d; ++k)
                if (p(i, j, k) != 0)
                    out << i << ' ' << j << ' ' << k << ' ' << p(i, j, k) << '\n';
}

SymMatrix read_gram(std::istream& in, std::size_t max_dense)
{
    LineReader lr(in);
    std::istringstream f;
    if (!lr.next(f))
        throw ParseError(lr.line(), "missing header 'n'");
    const auto n = lr.take<std::int64_t>(f, "point count n");
    lr.finish(f);
    check_size(n, max_dense, lr.line());
    std::vector<double> data;
    data.reserve(static_cast<std::size_t>(n * n));
    for (std::int64_t r = 0; r < n; ++r) {
        if (!lr.next(f))
            throw ParseError(lr.line(), "expected " + std::to_string(n) + " rows");
        for (std::int64_t c = 0; c < n; ++c)
            data.push_back(lr.take<double>(f, "real entry"));
        lr.finish(f);
    }
    return SymMatrix::from_dense(static_cast<std::size_t>(n), std::move(data));
}

void write_gram(std::ostream& out, const SymMatrix& m)
{
    out << m.size() << '\n' << std::setprecision(17);
    for (std::size_t x = 0; x < m.size(); ++x) {
        for (std::size_t y = 0; y < m.size(); ++y)
            out << (y ? " " : "") << m(x, y);
        out << '\n';
    }
}

std::ifstream open_input(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open '" + path + "'");
    return in;
}

} // namespace ascheme
