#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alphawidth/graph.hpp"

namespace alphawidth {

/// Largest graph accepted by alpha_td_exact.
inline constexpr int kTreedepthCap = 24;

/// Rooted forest on the graph's vertices; parent[v] == -1 marks a root.
struct EliminationForest {
    std::vector<int> parent;

    int order() const { return static_cast<int>(parent.size()); }
    std::vector<int> roots() const;
    std::vector<std::vector<int>> children() const;
    /// Root-to-leaf vertex sequences, leaves in ascending order.
    std::vector<std::vector<int>> root_to_leaf_paths() const;
    /// Ancestors of v including v, from v up to its root.
    std::vector<int> ancestors(int v) const;
};

struct ForestCheck {
    bool valid = true;
    std::string detail;
    explicit operator bool() const { return valid; }
};

/// Parent map acyclic and in range, and every edge joins an ancestor and a descendant.
ForestCheck check_elimination_forest(const SparseGraph& g, const EliminationForest& f);
ForestCheck check_elimination_forest(const Graph& g, const EliminationForest& f);
inline bool is_elimination_forest(const Graph& g, const EliminationForest& f) {
    return check_elimination_forest(g, f).valid;
}

/// Largest alpha over root-to-leaf vertex sets. Throws PreconditionError for invalid forests.
int alpha_depth(const Graph& g, const EliminationForest& f);
int alpha_depth(const SparseGraph& g, const EliminationForest& f);

struct DepthResult {
    int value = 0;
    EliminationForest forest;
};

/// Exact alpha-treedepth by recursion over (remaining component, ancestor set).
DepthResult alpha_td_exact(const Graph& g);

/// ceil(log2(k/3 + 1)) for k >= 1.
int path_alpha_td_formula(int k);

/// Median construction on P_k (vertex i is the i-th path vertex), restricted from the
/// smallest complete size 3(2^l - 1) >= k.
EliminationForest path_elimination_tree(int k);

struct GyarfasResult {
    std::optional<EliminationForest> forest;
    /// Induced path on k vertices starting at the root vertex.
    std::optional<std::vector<int>> path;
};

/// Either an elimination tree of alpha-depth at most max{1,(d-1)(k-2)} rooted at `root`,
/// or an induced path on k vertices starting at `root`. G must be connected and K_{1,d}-free.
GyarfasResult gyarfas_elimination(const Graph& g, int d, int k, int root = 0);

/// Chain through one side of K_{d,d} (vertices 0..d-1) with the other side as leaves.
EliminationForest kdd_elimination(int d);

std::string to_dot(const EliminationForest& f, std::string_view name = "F");

}  // namespace alphawidth
