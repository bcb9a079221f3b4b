#pragma once

#include "ascheme/numerics.hpp"
#include "ascheme/report.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ascheme {

/// Simple undirected graph. Neighbor lists are sorted; loops and repeated
/// edges are rejected at construction.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const noexcept;
    const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(int u, int v) const;
    /// Common degree, or nullopt when the graph is not regular.
    std::optional<int> regular_degree() const;
    std::vector<std::pair<int, int>> edges() const;
    SymMatrix adjacency_matrix() const;

private:
    std::vector<std::vector<int>> adj_;
};

/// All-pairs hop distances by BFS from every vertex.
class DistanceData {
public:
    static constexpr int kUnreachable = -1;

    explicit DistanceData(const Graph& g);

    int order() const noexcept { return n_; }
    int operator()(int x, int y) const noexcept { return dist_[static_cast<std::size_t>(x * n_ + y)]; }
    bool connected() const noexcept { return connected_; }
    /// Largest finite distance.
    int diameter() const noexcept { return diameter_; }
    /// Pairs (x, y), x < y, at distance t.
    std::vector<std::pair<int, int>> pairs_at(int t) const;
    /// |R_t(x)|
    int sphere_size(int x, int t) const;

private:
    int n_ = 0;
    std::vector<int> dist_;
    int diameter_ = 0;
    bool connected_ = true;
};

inline DistanceData distance_data(const Graph& g) { return DistanceData(g); }

/// Length of a shortest cycle, nullopt for forests.
std::optional<int> girth(const Graph& g);

bool is_connected(const Graph& g);

/// Checked 1 + k * sum_{j<d} (k-1)^j. Throws OverflowError.
std::uint64_t moore_bound(std::uint64_t k, unsigned d);

struct ProjectorFamily {
    EigenClusters spectrum;
    std::vector<SymMatrix> projectors;
};

/// Orthogonal eigenprojectors E_0..E_s, each built as the Lagrange product
/// prod_{j != i} (A - theta_j I) / (theta_i - theta_j). Requires a connected
/// regular graph.
ProjectorFamily spectral_projectors(const Graph& g, double tol = kDefaultTol);

/// prod_{j in 1..s, j != i} (theta_0 - theta_j) / (theta_i - theta_j)
double k_factor(const EigenClusters& spectrum, std::size_t i);

/// Entries of E_i at distance-d pairs equal -K_i/|V| when the graph has
/// exactly diameter+1 distinct eigenvalues.
TheoremReport verify_projector_entries(const Graph& g, double tol = kDefaultTol);

/// The four conclusions drawn for a connected regular graph with more than
/// M(k, d-1) vertices, d+1 being the number of distinct eigenvalues.
TheoremReport large_graph_report(const Graph& g, double tol = kDefaultTol);

} // namespace ascheme
