#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alphawidth/vertex_set.hpp"

namespace alphawidth {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1, n <= 64, with one bitset row
/// per vertex.
class Graph {
public:
    Graph() = default;
    /// Throws PreconditionError on self-loops or out-of-range endpoints, SizeCapError for n > 64.
    /// Duplicate edges are collapsed.
    Graph(int n, const std::vector<Edge>& edges);

    static Graph from_adjacency(std::vector<VertexSet> rows);

    int order() const { return n_; }
    VertexSet vertices() const { return VertexSet::range(n_); }
    VertexSet neighbors(int v) const { return adj_[v]; }
    const std::vector<VertexSet>& rows() const { return adj_; }
    bool adjacent(int u, int v) const { return adj_[u].contains(v); }
    int degree(int v) const { return adj_[v].size(); }
    int edge_count() const;
    std::vector<Edge> edges() const;

    /// G[X] relabelled to 0..|X|-1 in ascending vertex order.
    Graph induced(VertexSet x) const;
    Graph complement() const;

    const std::vector<std::string>& labels() const { return labels_; }
    Graph with_labels(std::vector<std::string> labels) const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;
};

/// Adjacency-list graph without a size cap, used by the constructive elimination-forest
/// routines on instances beyond the bitset tier.
class SparseGraph {
public:
    SparseGraph() = default;
    SparseGraph(int n, const std::vector<Edge>& edges);
    explicit SparseGraph(const Graph& g);

    int order() const { return static_cast<int>(adj_.size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const;
    std::vector<Edge> edges() const;

    /// G[vertices] as a bitset graph, relabelled in the order given. Requires <= 64 vertices.
    Graph induced(const std::vector<int>& vertices) const;

private:
    std::vector<std::vector<int>> adj_;
};

namespace graphs {
Graph empty(int n);
Graph complete(int n);
/// 0-1-...-(n-1)
Graph path(int n);
/// 0-1-...-(n-1)-0, n >= 3
Graph cycle(int n);
/// Sides {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(int a, int b);
/// K_{1,leaves} with centre 0.
Graph star(int leaves);
SparseGraph sparse_path(int n);
/// Disjoint union, vertices of `b` shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);
}  // namespace graphs

}  // namespace alphawidth
