#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alphawidth/graph.hpp"

namespace alphawidth {

/// A family of connected vertex sets that pairwise intersect.
struct StrongBramble {
    std::vector<VertexSet> elements;
};

/// Sorted by lowest vertex then mask, duplicates removed.
StrongBramble canonical_bramble(std::vector<VertexSet> elements);

struct BrambleCheck {
    bool valid = true;
    std::string detail;
    /// Offending element, and the second element of a disjoint pair.
    int first = -1;
    int second = -1;
    explicit operator bool() const { return valid; }
};

BrambleCheck check_strong_bramble(const Graph& g, const StrongBramble& b);
inline bool is_strong_bramble(const Graph& g, const StrongBramble& b) { return check_strong_bramble(g, b).valid; }

/// True iff X meets every element.
bool is_cover(const StrongBramble& b, VertexSet x);

struct AlphaOrder {
    int value = 0;
    VertexSet cover;
};

/// Minimum alpha(X) over covers X, with the first optimal cover found by the
/// hitting-set search (branching on the first unhit element, smaller vertices first).
AlphaOrder alpha_order_exact(const Graph& g, const StrongBramble& b);

/// { C_S : alpha(S) <= k-1 } for the heavy component C_S of G - S with respect to X.
/// Throws PreconditionError when some S has no heavy component or more than one.
StrongBramble bramble_from_linked_set(const Graph& g, VertexSet x, int k);

/// The linked set used for the construction, if any.
struct BrambleWitness {
    StrongBramble bramble;
    VertexSet linked_set;
};

/// A strong bramble of alpha-order at least k built from a (2k-2)-alpha-linked set,
/// or nullopt when no such set exists.
std::optional<BrambleWitness> strong_bramble_of_order(const Graph& g, int k);

}  // namespace alphawidth
