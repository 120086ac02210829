#include "alphawidth/brambles.hpp"

#include <algorithm>

#include "alpha_table.hpp"
#include "alphawidth/errors.hpp"
#include "alphawidth/graph_algorithms.hpp"
#include "alphawidth/width.hpp"

namespace alphawidth {

StrongBramble canonical_bramble(std::vector<VertexSet> elements) {
    std::sort(elements.begin(), elements.end(), canonical_less);
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    return {std::move(elements)};
}

BrambleCheck check_strong_bramble(const Graph& g, const StrongBramble& b) {
    BrambleCheck out;
    const auto& e = b.elements;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i].empty() || !e[i].is_subset_of(g.vertices()) || !is_connected(g, e[i])) {
            out.valid = false;
            out.first = static_cast<int>(i);
            out.detail = "element " + std::to_string(i) + " " + e[i].to_string() +
                         (e[i].empty() ? " is empty" : " is not a connected vertex set");
            return out;
        }
    }
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            if (!e[i].intersects(e[j])) {
                out.valid = false;
                out.first = static_cast<int>(i);
                out.second = static_cast<int>(j);
                out.detail = "elements " + std::to_string(i) + " " + e[i].to_string() + " and " +
                             std::to_string(j) + " " + e[j].to_string() + " are disjoint";
                return out;
            }
    return out;
}

bool is_cover(const StrongBramble& b, VertexSet x) {
    return std::all_of(b.elements.begin(), b.elements.end(), [&](VertexSet e) { return e.intersects(x); });
}

namespace {

struct CoverSearch {
    const Graph& g;
    const std::vector<VertexSet>& elements;
    int best;
    VertexSet best_cover;

    void run(VertexSet chosen, VertexSet banned, int alpha_chosen) {
        if (alpha_chosen >= best) return;
        const VertexSet* unhit = nullptr;
        for (const auto& e : elements)
            if (!e.intersects(chosen)) {
                unhit = &e;
                break;
            }
        if (!unhit) {
            best = alpha_chosen;
            best_cover = chosen;
            return;
        }
        // Vertices tried earlier at this level are excluded below it.
        VertexSet local_ban = banned;
        for (int v : *unhit - banned) {
            VertexSet next = chosen | VertexSet::single(v);
            run(next, local_ban, independence_number(g, next));
            local_ban.insert(v);
        }
    }
};

}  // namespace

AlphaOrder alpha_order_exact(const Graph& g, const StrongBramble& b) {
    for (VertexSet e : b.elements)
        if (!e.is_subset_of(g.vertices())) throw PreconditionError("bramble element outside the graph");
    if (b.elements.empty()) return {0, {}};
    for (VertexSet e : b.elements)
        if (e.empty()) throw PreconditionError("empty bramble element has no cover");
    StrongBramble sorted = canonical_bramble(b.elements);
    // Supersets are hit whenever their subsets are.
    std::vector<VertexSet> minimal;
    for (VertexSet e : sorted.elements) {
        bool dominated = false;
        for (VertexSet f : sorted.elements)
            if (f != e && f.is_subset_of(e)) {
                dominated = true;
                break;
            }
        if (!dominated) minimal.push_back(e);
    }
    std::stable_sort(minimal.begin(), minimal.end(), [](VertexSet a, VertexSet b) { return a.size() < b.size(); });
    CoverSearch search{g, minimal, g.order() + 1, {}};
    search.run({}, {}, 0);
    return {search.best, search.best_cover};
}

StrongBramble bramble_from_linked_set(const Graph& g, VertexSet x, int k) {
    if (k < 1) throw PreconditionError("bramble_from_linked_set needs k >= 1");
    if (!x.is_subset_of(g.vertices())) throw PreconditionError("X is not a vertex subset of G");
    detail::AlphaTable alpha(g);
    const int total = alpha(x);
    std::vector<VertexSet> elements;
    for_each_subset(g.vertices(), [&](VertexSet s) {
        if (alpha(s) > k - 1) return;
        std::optional<VertexSet> heavy;
        for (VertexSet c : components(g, g.vertices() - s)) {
            if (2 * alpha(c & x) <= total) continue;
            if (heavy)
                throw PreconditionError("S=" + s.to_string() + " has two heavy components " + heavy->to_string() +
                                        " and " + c.to_string() + "; X is not linked");
            heavy = c;
        }
        if (!heavy)
            throw PreconditionError("S=" + s.to_string() + " is a balanced separator for X=" + x.to_string() +
                                    "; X is not " + std::to_string(2 * k - 2) + "-alpha-linked");
        elements.push_back(*heavy);
    });
    return canonical_bramble(std::move(elements));
}

std::optional<BrambleWitness> strong_bramble_of_order(const Graph& g, int k) {
    if (k < 1) throw PreconditionError("strong_bramble_of_order needs k >= 1");
    auto x = find_k_alpha_linked(g, 2 * k - 2);
    if (!x) return std::nullopt;
    return BrambleWitness{bramble_from_linked_set(g, *x, k), *x};
}

}  // namespace alphawidth
