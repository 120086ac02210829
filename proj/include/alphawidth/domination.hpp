#pragma once

#include <optional>
#include <vector>

#include "alphawidth/brambles.hpp"
#include "alphawidth/graph.hpp"

namespace alphawidth {

/// Canonical order with duplicates and strict supersets of other elements removed.
std::vector<VertexSet> normalize_bramble(const StrongBramble& b);

/// True iff N[seq] meets every element.
bool dominates(const Graph& g, const std::vector<int>& seq, const StrongBramble& b);

struct PathStats {
    /// Path length after the initial vertex and after each extension.
    std::vector<int> lengths;
};

/// Induced path whose closed neighbourhood meets every element, grown by shortest
/// detours through the previously missed element.
std::vector<int> dominating_path(const Graph& g, const StrongBramble& b, PathStats* stats = nullptr);

struct CycleOrVertex {
    std::optional<int> vertex;
    std::vector<int> cycle;
};

/// A vertex whose closed neighbourhood meets every element, or an induced cycle doing so.
CycleOrVertex dominating_cycle_or_vertex(const Graph& g, const StrongBramble& b);

/// Induced dominating cycle of length at least k. Requires G to be K_{1,d}-free, k >= 2 and
/// the bramble to have alpha-order at least d*k.
std::vector<int> long_dominating_cycle(const Graph& g, const StrongBramble& b, int d, int k);

}  // namespace alphawidth
