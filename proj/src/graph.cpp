#include "alphawidth/graph.hpp"

#include <algorithm>

#include "alphawidth/errors.hpp"

namespace alphawidth {

namespace {

void check_edge(int n, int u, int v) {
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw PreconditionError("edge endpoint out of range: " + std::to_string(u) + "-" +
                                std::to_string(v));
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
}

}  // namespace

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0) throw PreconditionError("negative vertex count");
    if (n > kMaxBitsetVertices)
        throw SizeCapError("bitset graphs hold at most 64 vertices, got " + std::to_string(n));
    for (auto [u, v] : edges) {
        check_edge(n, u, v);
        adj_[u].insert(v);
        adj_[v].insert(u);
    }
}

Graph Graph::from_adjacency(std::vector<VertexSet> rows) {
    const int n = static_cast<int>(rows.size());
    if (n > kMaxBitsetVertices)
        throw SizeCapError("bitset graphs hold at most 64 vertices, got " + std::to_string(n));
    for (int v = 0; v < n; ++v) {
        if (!rows[v].is_subset_of(VertexSet::range(n)) || rows[v].contains(v))
            throw PreconditionError("adjacency row " + std::to_string(v) + " is invalid");
        for (int u : rows[v])
            if (!rows[u].contains(v)) throw PreconditionError("adjacency is not symmetric");
    }
    Graph g;
    g.n_ = n;
    g.adj_ = std::move(rows);
    return g;
}

int Graph::edge_count() const {
    int twice = 0;
    for (auto row : adj_) twice += row.size();
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u] - VertexSet::range(u + 1)) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(VertexSet x) const {
    std::vector<int> pos(n_, -1);
    int k = 0;
    for (int v : x) pos[v] = k++;
    std::vector<VertexSet> rows(k);
    for (int v : x)
        for (int u : adj_[v] & x) rows[pos[v]].insert(pos[u]);
    Graph g = from_adjacency(std::move(rows));
    if (!labels_.empty()) {
        for (int v : x) g.labels_.push_back(labels_[v]);
    }
    return g;
}

Graph Graph::complement() const {
    std::vector<VertexSet> rows(n_);
    for (int v = 0; v < n_; ++v) rows[v] = vertices() - adj_[v] - VertexSet::single(v);
    return from_adjacency(std::move(rows));
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
    if (static_cast<int>(labels.size()) != n_) throw PreconditionError("label count mismatch");
    Graph g = *this;
    g.labels_ = std::move(labels);
    return g;
}

SparseGraph::SparseGraph(int n, const std::vector<Edge>& edges) : adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0) throw PreconditionError("negative vertex count");
    for (auto [u, v] : edges) {
        check_edge(n, u, v);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& row : adj_) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
}

SparseGraph::SparseGraph(const Graph& g) : SparseGraph(g.order(), g.edges()) {}

bool SparseGraph::adjacent(int u, int v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> SparseGraph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph SparseGraph::induced(const std::vector<int>& vertices) const {
    const int k = static_cast<int>(vertices.size());
    if (k > kMaxBitsetVertices)
        throw SizeCapError("induced subgraph exceeds the bitset tier");
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (adjacent(vertices[i], vertices[j])) edges.emplace_back(i, j);
    return Graph(k, edges);
}

namespace graphs {

Graph empty(int n) { return Graph(n, {}); }

Graph complete(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

Graph path(int n) {
    std::vector<Edge> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph(n, e);
}

Graph cycle(int n) {
    if (n < 3) throw PreconditionError("a cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return Graph(n, e);
}

Graph complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
    return Graph(a + b, e);
}

Graph star(int leaves) { return complete_bipartite(1, leaves); }

SparseGraph sparse_path(int n) {
    std::vector<Edge> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return SparseGraph(n, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> e = a.edges();
    for (auto [u, v] : b.edges()) e.emplace_back(u + a.order(), v + a.order());
    return Graph(a.order() + b.order(), e);
}

}  // namespace graphs

}  // namespace alphawidth
