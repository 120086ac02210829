#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alphawidth/graph.hpp"

namespace alphawidth {

/// A tree over decomposition nodes 0..m-1 with one bag per node.
struct TreeDecomposition {
    std::vector<VertexSet> bags;
    std::vector<std::pair<int, int>> edges;
    std::optional<int> root;

    int node_count() const { return static_cast<int>(bags.size()); }
    int add_node(VertexSet bag) {
        bags.push_back(bag);
        return node_count() - 1;
    }
    void add_edge(int a, int b) { edges.emplace_back(a, b); }
    std::vector<std::vector<int>> adjacency() const;
    /// Bag size minus one, maximised over nodes.
    int width() const;
};

/// Outcome of validating a decomposition. `axiom` is one of "tree", "bags", "cover",
/// "edge", "subtree" when invalid.
struct DecompositionCheck {
    bool valid = true;
    std::string axiom;
    std::string detail;
    explicit operator bool() const { return valid; }
};

/// Checks that the node graph is a tree and the three decomposition axioms hold.
DecompositionCheck check_tree_decomposition(const Graph& g, const TreeDecomposition& td);

/// Maximum independence number of a bag. Throws PreconditionError for an invalid decomposition.
int alpha_width(const Graph& g, const TreeDecomposition& td);

/// Repeatedly contracts a node into a neighbour whose bag contains its bag.
TreeDecomposition compress(const TreeDecomposition& td);

std::string to_dot(const TreeDecomposition& td, std::string_view name = "T");

}  // namespace alphawidth
