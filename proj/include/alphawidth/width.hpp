#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "alphawidth/graph.hpp"
#include "alphawidth/tree_decomposition.hpp"

namespace alphawidth {

/// Largest graph accepted by the exact elimination-ordering search.
inline constexpr int kExactWidthCap = 16;
/// Largest graph accepted by the separator and linked-set subset searches.
inline constexpr int kSeparatorSearchCap = 16;
inline constexpr int kLinkedSearchCap = 11;

/// Optimum of an elimination-ordering search together with its witness.
struct WidthResult {
    int value = 0;
    TreeDecomposition decomposition;
    /// Vertices in elimination order.
    std::vector<int> order;
};

/// Bags of the elimination game: node i holds order[i] and its higher neighbours in the
/// fill-in graph; each node hangs below its earliest-eliminated higher neighbour.
TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<int>& order);

/// Exact tree-independence number: the minimum over elimination orderings of the largest
/// independence number of a fill-in bag. Throws SizeCapError above kExactWidthCap.
WidthResult alpha_tw_exact(const Graph& g);

/// Exact treewidth by the same ordering search.
WidthResult treewidth_exact(const Graph& g);

/// True iff every component C of G - S satisfies 2 * alpha(C ∩ X) <= alpha(X).
bool is_balanced_separator(const Graph& g, VertexSet x, VertexSet s);

/// First S (by size, then lexicographically) with alpha(S) <= k that is an
/// alpha-balanced separator for X; nullopt when X is k-alpha-linked. k >= 0.
std::optional<VertexSet> balanced_separator(const Graph& g, VertexSet x, int k);

/// First k-alpha-linked X in order of decreasing alpha(X), then lexicographic.
std::optional<VertexSet> find_k_alpha_linked(const Graph& g, int k);

/// Every component C of G - S with 2 * alpha(C ∩ X) > alpha(X).
std::vector<VertexSet> heavy_components(const Graph& g, VertexSet x, VertexSet s);

/// The heavy component when there is exactly one. Throws InvariantViolation naming both
/// components when two qualify.
std::optional<VertexSet> heavy_component(const Graph& g, VertexSet x, VertexSet s);

struct RefineStats {
    int iterations = 0;
    int grafts = 0;
    int splits = 0;
    /// Splits whose separator had vertices strictly inside the refined leaf bag.
    int interior_separator_splits = 0;
    /// Treated-vertex count after initialisation and after every iteration.
    std::vector<int> treated_history;
};

/// Either a decomposition of alpha-width at most 2k+1 or a k-alpha-linked set.
struct RefineResult {
    std::optional<TreeDecomposition> decomposition;
    std::optional<VertexSet> linked_set;
    RefineStats stats;
};

/// Refines a rooted decomposition leaf by leaf, keeping every non-leaf bag at
/// alpha <= 2k+1 and growing the set of treated vertices each round.
RefineResult refine_decomposition(const Graph& g, int k);

/// Symbolic bound functions for graphs excluding a wheel. `f_korhonen(max_degree, grid)` stands in
/// for the induced-grid treewidth bound and is never evaluated by the algorithms.
struct Bounds {
    using KorhonenFn = std::function<std::uint64_t(std::uint64_t, std::uint64_t)>;

    int d = 1;
    int l = 3;
    int k = 1;
    KorhonenFn f_korhonen;

    std::uint64_t max_degree() const;
    /// d (l-1) f_korhonen(max{l-1, d+2}, l)
    std::uint64_t f_vicinity() const;
    /// 4 f_vicinity + 1
    std::uint64_t f_wheel() const;
};

}  // namespace alphawidth
