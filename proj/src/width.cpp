#include "alphawidth/width.hpp"

#include <algorithm>
#include <limits>

#include "alpha_table.hpp"
#include "alphawidth/errors.hpp"
#include "alphawidth/graph_algorithms.hpp"

namespace alphawidth {

namespace {

// Neighbours of v in the fill-in graph once `eliminated` has been removed.
VertexSet fill_neighbors(const Graph& g, VertexSet eliminated, int v) {
    VertexSet reach = component_of(g, eliminated | VertexSet::single(v), v);
    return neighborhood(g, reach) - eliminated;
}

template <typename Weight>
WidthResult min_max_elimination(const Graph& g, Weight weight) {
    const int n = g.order();
    if (n > kExactWidthCap)
        throw SizeCapError("exact width search is limited to " + std::to_string(kExactWidthCap) +
                           " vertices, got " + std::to_string(n));
    WidthResult result;
    if (n == 0) {
        result.decomposition.add_node({});
        result.decomposition.root = 0;
        return result;
    }
    const std::size_t states = std::size_t{1} << n;
    std::vector<int> cost(states, std::numeric_limits<int>::max());
    std::vector<std::int8_t> last(states, -1);
    cost[0] = std::numeric_limits<int>::min();
    for (std::uint64_t mask = 1; mask < states; ++mask) {
        VertexSet s(mask);
        for (int v : s) {
            VertexSet before = s - VertexSet::single(v);
            const int prior = cost[before.bits()];
            if (prior >= cost[mask]) continue;
            const int w = weight(VertexSet::single(v) | fill_neighbors(g, before, v));
            const int value = std::max(prior, w);
            if (value < cost[mask]) {
                cost[mask] = value;
                last[mask] = static_cast<std::int8_t>(v);
            }
        }
    }
    std::vector<int> order;
    for (VertexSet s = g.vertices(); !s.empty();) {
        int v = last[s.bits()];
        order.push_back(v);
        s.erase(v);
    }
    std::reverse(order.begin(), order.end());
    result.value = cost[states - 1];
    result.order = order;
    result.decomposition = compress(decomposition_from_order(g, order));
    return result;
}

}  // namespace

TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<int>& order) {
    const int n = g.order();
    if (static_cast<int>(order.size()) != n) throw PreconditionError("ordering does not cover the graph");
    std::vector<int> position(n, -1);
    for (int i = 0; i < n; ++i) {
        if (order[i] < 0 || order[i] >= n || position[order[i]] >= 0)
            throw PreconditionError("ordering is not a permutation");
        position[order[i]] = i;
    }
    TreeDecomposition td;
    if (n == 0) {
        td.add_node({});
        td.root = 0;
        return td;
    }
    VertexSet eliminated;
    std::vector<VertexSet> higher(n);
    for (int i = 0; i < n; ++i) {
        const int v = order[i];
        higher[i] = fill_neighbors(g, eliminated, v);
        td.add_node(higher[i] | VertexSet::single(v));
        eliminated.insert(v);
    }
    int previous_root = -1;
    for (int i = 0; i < n; ++i) {
        if (higher[i].empty()) {
            if (previous_root >= 0) td.add_edge(previous_root, i);
            previous_root = i;
            continue;
        }
        int parent = n;
        for (int u : higher[i]) parent = std::min(parent, position[u]);
        td.add_edge(i, parent);
    }
    td.root = previous_root;
    return td;
}

WidthResult alpha_tw_exact(const Graph& g) {
    return min_max_elimination(g, [&](VertexSet bag) { return independence_number(g, bag); });
}

WidthResult treewidth_exact(const Graph& g) {
    WidthResult r = min_max_elimination(g, [](VertexSet bag) { return bag.size() - 1; });
    if (g.order() == 0) r.value = -1;
    return r;
}

bool is_balanced_separator(const Graph& g, VertexSet x, VertexSet s) {
    const int total = independence_number(g, x);
    for (VertexSet c : components(g, g.vertices() - s))
        if (2 * independence_number(g, c & x) > total) return false;
    return true;
}

namespace {

struct Candidate {
    VertexSet separator;
    std::vector<VertexSet> components;
};

// Every S with alpha(S) <= k in (size, lex) order, with the components of G - S.
std::vector<Candidate> separator_candidates(const Graph& g, const detail::AlphaTable& alpha, int k) {
    std::vector<Candidate> out;
    for_each_subset_by_size(g.vertices(), [&](VertexSet s) {
        if (alpha(s) <= k) out.push_back({s, components(g, g.vertices() - s)});
        return false;
    });
    return out;
}

bool balanced(const Candidate& c, VertexSet x, const detail::AlphaTable& alpha) {
    const int total = alpha(x);
    for (VertexSet comp : c.components)
        if (2 * alpha(comp & x) > total) return false;
    return true;
}

void check_cap(const Graph& g, int cap, const char* what) {
    if (g.order() > cap)
        throw SizeCapError(std::string(what) + " is limited to " + std::to_string(cap) + " vertices, got " +
                           std::to_string(g.order()));
}

}  // namespace

std::optional<VertexSet> balanced_separator(const Graph& g, VertexSet x, int k) {
    check_cap(g, kSeparatorSearchCap, "balanced separator search");
    if (k < 0) throw PreconditionError("balanced_separator needs k >= 0");
    if (!x.is_subset_of(g.vertices())) throw PreconditionError("X is not a vertex subset of G");
    detail::AlphaTable alpha(g);
    std::optional<VertexSet> found;
    for_each_subset_by_size(g.vertices(), [&](VertexSet s) {
        if (alpha(s) > k) return false;
        const int total = alpha(x);
        for (VertexSet comp : components(g, g.vertices() - s))
            if (2 * alpha(comp & x) > total) return false;
        found = s;
        return true;
    });
    return found;
}

std::optional<VertexSet> find_k_alpha_linked(const Graph& g, int k) {
    check_cap(g, kLinkedSearchCap, "linked-set search");
    if (k < 0) throw PreconditionError("find_k_alpha_linked needs k >= 0");
    detail::AlphaTable alpha(g);
    auto candidates = separator_candidates(g, alpha, k);
    std::vector<VertexSet> sets;
    for_each_subset(g.vertices(), [&](VertexSet x) {
        if (alpha(x) > k) sets.push_back(x);
    });
    std::sort(sets.begin(), sets.end(), [&](VertexSet a, VertexSet b) {
        if (alpha(a) != alpha(b)) return alpha(a) > alpha(b);
        return lex_less(a, b);
    });
    for (VertexSet x : sets) {
        bool has_separator = false;
        for (const auto& c : candidates)
            if (balanced(c, x, alpha)) {
                has_separator = true;
                break;
            }
        if (!has_separator) return x;
    }
    return std::nullopt;
}

std::vector<VertexSet> heavy_components(const Graph& g, VertexSet x, VertexSet s) {
    const int total = independence_number(g, x);
    std::vector<VertexSet> out;
    for (VertexSet c : components(g, g.vertices() - s))
        if (2 * independence_number(g, c & x) > total) out.push_back(c);
    return out;
}

std::optional<VertexSet> heavy_component(const Graph& g, VertexSet x, VertexSet s) {
    auto all = heavy_components(g, x, s);
    if (all.empty()) return std::nullopt;
    if (all.size() > 1)
        throw InvariantViolation("two heavy components " + all[0].to_string() + " and " + all[1].to_string() +
                                 " for X=" + x.to_string() + ", S=" + s.to_string());
    return all.front();
}

namespace {

class Refiner {
public:
    Refiner(const Graph& g, int k) : g_(g), k_(k), limit_(2 * k + 1), alpha_(g) {}

    RefineResult run() {
        RefineResult result;
        const int n = g_.order();
        if (n == 0) {
            TreeDecomposition td;
            td.add_node({});
            td.root = 0;
            result.decomposition = td;
            return result;
        }
        // Seed: closed neighbourhood of vertex 0, greedily truncated to alpha <= 2k+1.
        VertexSet seed = VertexSet::single(0);
        for (int v : closed_neighborhood(g_, VertexSet::single(0)))
            if (alpha_(seed | VertexSet::single(v)) <= limit_) seed.insert(v);
        add(seed, -1);
        add(g_.vertices(), 0);
        result.stats.treated_history.push_back(treated().size());

        candidates_ = separator_candidates(g_, alpha_, k_);
        while (true) {
            const int leaf = heavy_leaf();
            if (leaf < 0) break;
            ++result.stats.iterations;
            if (result.stats.iterations > 4 * n + 4)
                throw InvariantViolation("refinement did not terminate");
            const int t = parent_[leaf];
            const VertexSet adhesion = bags_[t] & bags_[leaf];
            const int before = treated().size();
            if (alpha_(adhesion) < limit_) {
                graft(leaf, t, adhesion);
                ++result.stats.grafts;
            } else {
                auto sep = choose_separator(adhesion, bags_[leaf] - adhesion);
                if (!sep) {
                    result.linked_set = adhesion;
                    return result;
                }
                if (split(leaf, t, adhesion, *sep)) ++result.stats.interior_separator_splits;
                ++result.stats.splits;
            }
            const int after = treated().size();
            result.stats.treated_history.push_back(after);
            if (after <= before) throw InvariantViolation("treated vertex count did not increase");
        }
        result.decomposition = export_decomposition();
        return result;
    }

private:
    int add(VertexSet bag, int parent) {
        bags_.push_back(bag);
        parent_.push_back(parent);
        alive_.push_back(1);
        return static_cast<int>(bags_.size()) - 1;
    }

    VertexSet treated() const {
        VertexSet out;
        for (std::size_t t = 0; t < bags_.size(); ++t)
            if (alive_[t] && alpha_(bags_[t]) <= limit_) out |= bags_[t];
        return out;
    }

    int heavy_leaf() const {
        std::vector<char> has_child(bags_.size(), 0);
        for (std::size_t t = 0; t < bags_.size(); ++t)
            if (alive_[t] && parent_[t] >= 0) has_child[parent_[t]] = 1;
        for (std::size_t t = 1; t < bags_.size(); ++t)
            if (alive_[t] && !has_child[t] && alpha_(bags_[t]) > limit_) return static_cast<int>(t);
        return -1;
    }

    void graft(int leaf, int t, VertexSet adhesion) {
        const VertexSet untreated = (bags_[leaf] - bags_[t]) - treated();
        if (untreated.empty()) throw InvariantViolation("no untreated vertex to graft");
        const int v = untreated.lowest();
        const VertexSet big = bags_[leaf];
        bags_[leaf] = adhesion | VertexSet::single(v);
        add(big, leaf);
    }

    // First balanced separator avoiding the leaf interior, else the first one overall.
    std::optional<VertexSet> choose_separator(VertexSet x, VertexSet interior) const {
        std::optional<VertexSet> first;
        for (const auto& c : candidates_) {
            if (!balanced(c, x, alpha_)) continue;
            if (!c.separator.intersects(interior)) return c.separator;
            if (!first) first = c.separator;
        }
        return first;
    }

    // Returns true when the separator met the leaf interior and a hub node was needed.
    bool split(int leaf, int t, VertexSet x, VertexSet s) {
        const VertexSet leaf_bag = bags_[leaf];
        const VertexSet inner = s & (leaf_bag - x);
        const VertexSet shared = s & x;
        alive_[leaf] = 0;
        int anchor = t;
        if (!inner.empty()) anchor = add(x | inner, t);
        for (VertexSet comp : components(g_, g_.vertices() - s)) {
            const VertexSet part = comp & leaf_bag;
            if (part.empty()) continue;
            const VertexSet xi = comp & x;
            const VertexSet boundary = xi | shared | (inner & neighborhood(g_, part));
            const VertexSet free = part - xi;
            if (free.empty()) {
                add(boundary, anchor);
            } else {
                const int ti = add(boundary | VertexSet::single(free.lowest()), anchor);
                add(part | boundary, ti);
            }
        }
        return !inner.empty();
    }

    TreeDecomposition export_decomposition() const {
        TreeDecomposition td;
        std::vector<int> remap(bags_.size(), -1);
        for (std::size_t t = 0; t < bags_.size(); ++t)
            if (alive_[t]) remap[t] = td.add_node(bags_[t]);
        for (std::size_t t = 0; t < bags_.size(); ++t)
            if (alive_[t] && parent_[t] >= 0) td.add_edge(remap[parent_[t]], remap[t]);
        td.root = remap[0];
        return td;
    }

    const Graph& g_;
    int k_;
    int limit_;
    detail::AlphaTable alpha_;
    std::vector<Candidate> candidates_;
    std::vector<VertexSet> bags_;
    std::vector<int> parent_;
    std::vector<char> alive_;
};

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw Error("bound overflows 64 bits");
    return out;
}

}  // namespace

RefineResult refine_decomposition(const Graph& g, int k) {
    check_cap(g, kSeparatorSearchCap, "refine_decomposition");
    if (k < 0) throw PreconditionError("refine_decomposition needs k >= 0");
    return Refiner(g, k).run();
}

std::uint64_t Bounds::max_degree() const {
    return static_cast<std::uint64_t>(std::max(l - 1, d + 2));
}

std::uint64_t Bounds::f_vicinity() const {
    if (d < 1 || l < 3) throw PreconditionError("bounds need d >= 1 and l >= 3");
    if (!f_korhonen) throw PreconditionError("no induced-grid bound function supplied");
    const std::uint64_t f = f_korhonen(max_degree(), static_cast<std::uint64_t>(l));
    if (f == 0) throw PreconditionError("induced-grid bound must be positive");
    return checked_mul(checked_mul(static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(l - 1)), f);
}

std::uint64_t Bounds::f_wheel() const {
    const std::uint64_t f = f_vicinity();
    std::uint64_t out = checked_mul(4, f);
    if (out == std::numeric_limits<std::uint64_t>::max()) throw Error("bound overflows 64 bits");
    return out + 1;
}

}  // namespace alphawidth
