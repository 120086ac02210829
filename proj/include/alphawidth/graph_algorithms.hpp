#pragma once

#include <optional>
#include <vector>

#include "alphawidth/graph.hpp"

namespace alphawidth {

/// N(X) when closed is false, N[X] otherwise.
VertexSet neighborhood(const Graph& g, VertexSet x, bool closed = false);
inline VertexSet open_neighborhood(const Graph& g, VertexSet x) { return neighborhood(g, x, false); }
inline VertexSet closed_neighborhood(const Graph& g, VertexSet x) { return neighborhood(g, x, true); }

/// Vertices of X reachable from `start` inside G[X].
VertexSet component_of(const Graph& g, VertexSet x, int start);

/// Components of G[X], ordered by their smallest vertex.
std::vector<VertexSet> components(const Graph& g, VertexSet x);

bool is_connected(const Graph& g, VertexSet x);
inline bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

/// A maximum clique of G[X]. Among maximum cliques the search returns the first one
/// found by a branch-and-bound that branches on vertices in descending colour order.
VertexSet maximum_clique(const Graph& g, VertexSet x);
/// A maximum independent set of G[X].
VertexSet maximum_independent_set(const Graph& g, VertexSet x);

/// alpha(G[X]), with alpha(empty) = 0.
int independence_number(const Graph& g, VertexSet x);
inline int independence_number(const Graph& g) { return independence_number(g, g.vertices()); }
/// omega(G[X]).
int clique_number(const Graph& g, VertexSet x);
inline int clique_number(const Graph& g) { return clique_number(g, g.vertices()); }

bool is_clique(const Graph& g, VertexSet x);
bool is_independent(const Graph& g, VertexSet x);

/// An induced K_{1,d}: the centre and d pairwise non-adjacent neighbours.
struct ClawWitness {
    int center = -1;
    VertexSet leaves;
};

struct K1dFreeResult {
    bool free = true;
    std::optional<ClawWitness> witness;
};

/// G is K_{1,d}-free iff alpha(N(v)) <= d-1 for every v. d >= 1.
K1dFreeResult is_k1d_free(const Graph& g, int d);

/// Lexicographic breadth-first search order (ties broken toward smaller vertices).
std::vector<int> lex_bfs(const Graph& g);

/// True iff each vertex, when eliminated in this order, has a clique of later neighbours.
bool is_perfect_elimination_order(const Graph& g, const std::vector<int>& elimination_order);

bool is_chordal(const Graph& g);

/// An injection phi with uv in E(H) <=> phi(u)phi(v) in E(G), first in lexicographic order
/// of (phi(0), phi(1), ...), or nullopt. Intended for small patterns.
std::optional<std::vector<int>> contains_induced(const Graph& g, const Graph& h);

/// {P4, C4}-free.
bool is_quasi_threshold(const Graph& g);

/// True iff `seq` is an induced path of G in the given order (single vertex allowed).
bool is_induced_path(const Graph& g, const std::vector<int>& seq);
/// True iff `seq` (length >= 3) is an induced cycle of G in the given cyclic order.
bool is_induced_cycle(const Graph& g, const std::vector<int>& seq);

/// Shortest path from `from` to any vertex of `targets` whose inner vertices and endpoint
/// lie in `allowed`; breadth-first with smaller vertices discovered first. Includes `from`.
std::optional<std::vector<int>> shortest_path_into(const Graph& g, int from, VertexSet targets,
                                                   VertexSet allowed);

}  // namespace alphawidth
