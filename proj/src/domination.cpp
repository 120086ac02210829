#include "alphawidth/domination.hpp"

#include <algorithm>

#include "alphawidth/errors.hpp"
#include "alphawidth/graph_algorithms.hpp"

namespace alphawidth {

std::vector<VertexSet> normalize_bramble(const StrongBramble& b) {
    const auto sorted = canonical_bramble(b.elements).elements;
    std::vector<VertexSet> out;
    for (VertexSet e : sorted) {
        bool superset = false;
        for (VertexSet f : sorted)
            if (f != e && f.is_subset_of(e)) {
                superset = true;
                break;
            }
        if (!superset) out.push_back(e);
    }
    return out;
}

bool dominates(const Graph& g, const std::vector<int>& seq, const StrongBramble& b) {
    const VertexSet reach = closed_neighborhood(g, VertexSet::from_vector(seq));
    return std::all_of(b.elements.begin(), b.elements.end(), [&](VertexSet e) { return e.intersects(reach); });
}

namespace {

std::vector<VertexSet> checked_elements(const Graph& g, const StrongBramble& b) {
    auto check = check_strong_bramble(g, b);
    if (!check) throw PreconditionError("not a strong bramble: " + check.detail);
    if (b.elements.empty()) throw PreconditionError("bramble has no elements");
    return normalize_bramble(b);
}

std::vector<int> build_path(const Graph& g, const std::vector<VertexSet>& elements, PathStats* stats) {
    if (elements.size() == 1) {
        if (stats) stats->lengths = {1};
        return {elements.front().lowest()};
    }
    VertexSet current = elements.front();
    const VertexSet start = open_neighborhood(g, current);
    if (start.empty()) throw InvariantViolation("first element has no neighbour");
    std::vector<int> path{start.lowest()};
    if (stats) stats->lengths = {1};
    while (true) {
        const VertexSet reach = closed_neighborhood(g, VertexSet::from_vector(path));
        auto next = std::find_if(elements.begin(), elements.end(), [&](VertexSet e) { return !e.intersects(reach); });
        if (next == elements.end()) break;
        const VertexSet targets = open_neighborhood(g, *next) & current;
        auto detour = shortest_path_into(g, path.back(), targets, current);
        if (!detour || detour->size() < 2)
            throw InvariantViolation("no detour from " + std::to_string(path.back()) + " through " +
                                     current.to_string() + " towards " + next->to_string());
        const std::size_t before = path.size();
        path.insert(path.end(), detour->begin() + 1, detour->end());
        if (path.size() <= before) throw InvariantViolation("path did not grow");
        if (!is_induced_path(g, path)) throw InvariantViolation("extended path is not induced");
        if (stats) stats->lengths.push_back(static_cast<int>(path.size()));
        current = *next;
    }
    return path;
}

}  // namespace

std::vector<int> dominating_path(const Graph& g, const StrongBramble& b, PathStats* stats) {
    return build_path(g, checked_elements(g, b), stats);
}

CycleOrVertex dominating_cycle_or_vertex(const Graph& g, const StrongBramble& b) {
    const auto elements = checked_elements(g, b);
    StrongBramble normal{elements};
    std::vector<int> path = build_path(g, elements, nullptr);
    // Trim endpoints while the shorter path still dominates.
    bool trimmed = true;
    while (trimmed && path.size() > 1) {
        trimmed = false;
        std::vector<int> tail(path.begin() + 1, path.end());
        if (dominates(g, tail, normal)) {
            path = std::move(tail);
            trimmed = true;
            continue;
        }
        std::vector<int> head(path.begin(), path.end() - 1);
        if (dominates(g, head, normal)) {
            path = std::move(head);
            trimmed = true;
        }
    }
    CycleOrVertex out;
    if (path.size() == 1) {
        out.vertex = path.front();
        return out;
    }
    const int s = path.front();
    const int t = path.back();
    auto private_element = [&](std::vector<int> rest) {
        const VertexSet reach = closed_neighborhood(g, VertexSet::from_vector(rest));
        for (VertexSet e : elements)
            if (!e.intersects(reach)) return e;
        throw InvariantViolation("endpoint has no private element");
    };
    const VertexSet bs = private_element({path.begin() + 1, path.end()});
    const VertexSet bt = private_element({path.begin(), path.end() - 1});
    if (bs == bt) throw InvariantViolation("both endpoints share the private element " + bs.to_string());
    // Shortest s-t path with inner vertices in B_s ∪ B_t, never the edge st itself.
    const VertexSet inner = bs | bt;
    std::optional<std::vector<int>> best;
    for (int first : g.neighbors(s) & inner) {
        auto rest = shortest_path_into(g, first, VertexSet::single(t), inner | VertexSet::single(t));
        if (!rest) continue;
        if (!best || rest->size() + 1 < best->size()) {
            rest->insert(rest->begin(), s);
            best = std::move(rest);
        }
    }
    if (!best || best->size() < 3) throw InvariantViolation("no closing path through the private elements");
    std::vector<int> cycle = path;
    for (auto it = best->rbegin() + 1; it + 1 != best->rend(); ++it) cycle.push_back(*it);
    if (!is_induced_cycle(g, cycle)) throw InvariantViolation("closed cycle is not induced");
    if (!dominates(g, cycle, normal)) throw InvariantViolation("cycle does not dominate the bramble");
    out.cycle = std::move(cycle);
    return out;
}

std::vector<int> long_dominating_cycle(const Graph& g, const StrongBramble& b, int d, int k) {
    if (k < 2) throw PreconditionError("long_dominating_cycle needs k >= 2, got " + std::to_string(k));
    if (d < 1) throw PreconditionError("long_dominating_cycle needs d >= 1");
    auto claw = is_k1d_free(g, d);
    if (!claw.free)
        throw PreconditionError("graph is not K_{1," + std::to_string(d) + "}-free: vertex " +
                                std::to_string(claw.witness->center) + " with leaves " +
                                claw.witness->leaves.to_string());
    const int order = alpha_order_exact(g, b).value;
    if (order < d * k)
        throw PreconditionError("bramble alpha-order " + std::to_string(order) + " is below d*k = " +
                                std::to_string(d * k));
    auto result = dominating_cycle_or_vertex(g, b);
    if (result.vertex)
        throw InvariantViolation("dominating vertex " + std::to_string(*result.vertex) +
                                 " despite alpha-order " + std::to_string(order));
    if (static_cast<int>(result.cycle.size()) < k)
        throw InvariantViolation("cycle of length " + std::to_string(result.cycle.size()) + " below k = " +
                                 std::to_string(k));
    return result.cycle;
}

}  // namespace alphawidth
