#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alphawidth/graph.hpp"
#include "alphawidth/tree_decomposition.hpp"

namespace alphawidth {

/// Largest host graph accepted by the exhaustive model search.
inline constexpr int kModelSearchCap = 16;

/// branch[p] is the host vertex set standing for pattern vertex p.
struct InducedMinorModel {
    std::vector<VertexSet> branch;
};

struct ModelCheck {
    bool valid = true;
    std::string detail;
    explicit operator bool() const { return valid; }
};

/// Branch sets non-empty, disjoint, connected, and adjacent exactly along E(H).
ModelCheck check_model(const Graph& g, const Graph& h, const InducedMinorModel& m);
inline bool is_model(const Graph& g, const Graph& h, const InducedMinorModel& m) {
    return check_model(g, h, m).valid;
}

VertexSet model_union(const InducedMinorModel& m);
/// omega(G[union]) <= |V(H)|^2.
bool is_small_model(const Graph& g, const Graph& h, const InducedMinorModel& m);

/// Rim 0..l-1 in cycle order, hub l.
Graph wheel_graph(int l);

/// First model in search order (pattern vertices by degree descending, branch sets grown
/// from their smallest vertex), or nullopt. With small_only, only models whose union has
/// clique number at most |V(H)|^2 are accepted.
std::optional<InducedMinorModel> find_induced_minor(const Graph& g, const Graph& h, bool small_only = false);

/// Shrinks a model by deleting unprotected BFS-tree leaves from a branch set with a large
/// clique until the model is small. `steps` receives the number of deletions.
InducedMinorModel minimize_model(const Graph& g, const Graph& h, const InducedMinorModel& m, int* steps = nullptr);

/// W_{|N(K)|} model: hub K, rim branches the arcs of C starting at each vertex of N(K),
/// beginning at the smallest one and following the given cycle direction.
InducedMinorModel wheel_from_cycle(const Graph& g, const std::vector<int>& cycle, VertexSet k);

/// Merges the last rim branches of a W_m model into one, giving a W_l model (3 <= l <= m).
InducedMinorModel contract_wheel_model(const InducedMinorModel& m, int l);

/// Longest induced cycle with at least min_length vertices (ties: first found), if any.
std::optional<std::vector<int>> longest_induced_cycle(const Graph& g, int min_length = 3);

struct VicinityDecomposition {
    TreeDecomposition decomposition;
    /// Nodes inherited from the contracted graph's decomposition.
    std::vector<int> f1;
    /// One leaf per component of G - N[C].
    std::vector<int> f2;
    /// Components of G - N[C]; far_components[i] sits at node f2[i].
    std::vector<VertexSet> far_components;
    /// Treewidth of the contracted graph.
    int contracted_treewidth = 0;
    /// d (l-1) (tw + 1): the bag bound for F1 nodes and all adhesions.
    std::uint64_t bag_bound = 0;
};

struct VicinityResult {
    std::optional<VicinityDecomposition> vicinity;
    std::optional<InducedMinorModel> model;
};

/// Either a W_l model from a component of G - C with at least l attachments, or the
/// decomposition around C built from an exact tree decomposition of the contracted graph.
VicinityResult cycle_vicinity_decomposition(const Graph& g, const std::vector<int>& cycle, int d, int l);

/// Checks the decomposition axioms and the five structural properties of the vicinity.
ModelCheck check_vicinity(const Graph& g, const std::vector<int>& cycle, const VicinityDecomposition& v);

struct WheelDetection {
    std::optional<InducedMinorModel> model;
    /// Certificate when no model exists.
    std::optional<int> alpha_tw;
    std::optional<TreeDecomposition> decomposition;
    std::optional<std::vector<int>> cycle;
    std::optional<VicinityDecomposition> vicinity;
};

/// Exhaustive W_l search on a K_{1,d}-free graph; without a model, returns the exact
/// alpha-tw decomposition and, when an induced cycle of length >= l exists, its vicinity.
WheelDetection detect_wheel(const Graph& g, int d, int l);

}  // namespace alphawidth
