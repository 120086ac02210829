#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "alphawidth/graph.hpp"

namespace alphawidth {

/// Isomorphism-invariant fingerprint from iterated colour refinement.
std::string refinement_fingerprint(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

/// One representative per isomorphism class on exactly n vertices, built by adding a
/// vertex to every class on n-1 vertices. Deterministic order.
std::vector<Graph> enumerate_graphs(int n);

/// All classes on 1..max_n vertices, smaller orders first.
std::vector<Graph> enumerate_graphs_up_to(int max_n);

/// G(n, p) sample from a seeded 64-bit Mersenne twister.
Graph random_graph(int n, double p, std::uint64_t seed);

}  // namespace alphawidth
