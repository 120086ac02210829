#include "alphawidth/induced_minor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "alphawidth/errors.hpp"
#include "alphawidth/graph_algorithms.hpp"
#include "alphawidth/width.hpp"

namespace alphawidth {

ModelCheck check_model(const Graph& g, const Graph& h, const InducedMinorModel& m) {
    ModelCheck out;
    auto fail = [&](std::string why) {
        out.valid = false;
        out.detail = std::move(why);
        return out;
    };
    if (static_cast<int>(m.branch.size()) != h.order())
        return fail("model has " + std::to_string(m.branch.size()) + " branch sets for a pattern on " +
                    std::to_string(h.order()) + " vertices");
    VertexSet used;
    for (int p = 0; p < h.order(); ++p) {
        const VertexSet x = m.branch[p];
        if (x.empty()) return fail("branch " + std::to_string(p) + " is empty");
        if (!x.is_subset_of(g.vertices())) return fail("branch " + std::to_string(p) + " leaves the host graph");
        if (x.intersects(used)) return fail("branch " + std::to_string(p) + " overlaps an earlier branch");
        if (!is_connected(g, x)) return fail("branch " + std::to_string(p) + " " + x.to_string() + " is disconnected");
        used |= x;
    }
    for (int p = 0; p < h.order(); ++p) {
        const VertexSet reach = open_neighborhood(g, m.branch[p]);
        for (int q = p + 1; q < h.order(); ++q) {
            const bool touching = reach.intersects(m.branch[q]);
            if (touching != h.adjacent(p, q))
                return fail("branches " + std::to_string(p) + " and " + std::to_string(q) +
                            (touching ? " touch but the pattern has no edge" : " do not touch but the pattern has an edge"));
        }
    }
    return out;
}

VertexSet model_union(const InducedMinorModel& m) {
    VertexSet out;
    for (VertexSet x : m.branch) out |= x;
    return out;
}

bool is_small_model(const Graph& g, const Graph& h, const InducedMinorModel& m) {
    return clique_number(g, model_union(m)) <= h.order() * h.order();
}

Graph wheel_graph(int l) {
    if (l < 3) throw PreconditionError("wheel needs at least 3 rim vertices, got " + std::to_string(l));
    std::vector<Edge> edges;
    for (int i = 0; i < l; ++i) {
        edges.emplace_back(i, (i + 1) % l);
        edges.emplace_back(i, l);
    }
    return Graph(l + 1, edges);
}

namespace {

class ModelSearch {
public:
    ModelSearch(const Graph& g, const Graph& h, bool small_only)
        : g_(g), h_(h), small_only_(small_only), branch_(h.order()), order_(h.order()) {
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return h.degree(a) > h.degree(b); });
    }

    std::optional<InducedMinorModel> run() {
        if (place(0, {})) return InducedMinorModel{branch_};
        return std::nullopt;
    }

private:
    bool place(int index, VertexSet used) {
        if (index == h_.order()) return true;
        const int p = order_[index];
        VertexSet blocked = used;
        std::vector<VertexSet> must_touch;
        for (int i = 0; i < index; ++i) {
            const int q = order_[i];
            const VertexSet reach = open_neighborhood(g_, branch_[q]);
            if (h_.adjacent(p, q)) {
                must_touch.push_back(reach);
            } else {
                blocked |= reach;
            }
        }
        auto accept = [&](VertexSet x) {
            for (VertexSet reach : must_touch)
                if (!reach.intersects(x)) return false;
            if (small_only_ && clique_number(g_, used | x) > h_.order() * h_.order()) return false;
            branch_[p] = x;
            return place(index + 1, used | x);
        };
        for (int seed : g_.vertices() - blocked) {
            const VertexSet excluded = blocked | VertexSet::range(seed + 1);
            if (grow(VertexSet::single(seed), g_.neighbors(seed) - excluded, excluded, accept)) return true;
        }
        return false;
    }

    // Every connected set containing `x`, extended only through `ext`, avoiding `excl`.
    template <typename Fn>
    bool grow(VertexSet x, VertexSet ext, VertexSet excl, Fn& fn) {
        if (fn(x)) return true;
        VertexSet rest = ext;
        while (!rest.empty()) {
            const int v = rest.lowest();
            rest.erase(v);
            const VertexSet next_x = x | VertexSet::single(v);
            const VertexSet next_ext = rest | (g_.neighbors(v) - next_x - excl);
            if (grow(next_x, next_ext - excl, excl, fn)) return true;
            excl.insert(v);
        }
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    bool small_only_;
    std::vector<VertexSet> branch_;
    std::vector<int> order_;
};

}  // namespace

std::optional<InducedMinorModel> find_induced_minor(const Graph& g, const Graph& h, bool small_only) {
    if (g.order() > kModelSearchCap)
        throw SizeCapError("model search is limited to " + std::to_string(kModelSearchCap) + " host vertices, got " +
                           std::to_string(g.order()));
    if (h.order() == 0) return InducedMinorModel{};
    if (h.order() > g.order()) return std::nullopt;
    return ModelSearch(g, h, small_only).run();
}

InducedMinorModel minimize_model(const Graph& g, const Graph& h, const InducedMinorModel& m, int* steps) {
    auto check = check_model(g, h, m);
    if (!check) throw PreconditionError("invalid model: " + check.detail);
    InducedMinorModel cur = m;
    const int hn = h.order();
    int count = 0;
    while (clique_number(g, model_union(cur)) > hn * hn) {
        int v = -1;
        for (int p = 0; p < hn; ++p)
            if (clique_number(g, cur.branch[p]) > hn) {
                v = p;
                break;
            }
        if (v < 0) throw InvariantViolation("large clique spread thinly across branch sets");
        const VertexSet xv = cur.branch[v];
        const int root = maximum_clique(g, xv).lowest();
        // Breadth-first tree in G[X_v], smaller vertices discovered first.
        std::vector<int> parent(g.order(), -1);
        std::vector<int> bfs{root};
        VertexSet seen = VertexSet::single(root);
        for (std::size_t i = 0; i < bfs.size(); ++i)
            for (int w : (g.neighbors(bfs[i]) & xv) - seen) {
                seen.insert(w);
                parent[w] = bfs[i];
                bfs.push_back(w);
            }
        VertexSet leaves = xv;
        for (int w : xv)
            if (parent[w] >= 0) leaves.erase(parent[w]);
        leaves.erase(root);
        VertexSet protected_leaves;
        for (int u : h.neighbors(v)) {
            const VertexSet reach = open_neighborhood(g, cur.branch[u]);
            for (int t : leaves) {
                bool touches = false;
                for (int w = t; w >= 0; w = parent[w])
                    if (reach.contains(w)) {
                        touches = true;
                        break;
                    }
                if (touches) {
                    protected_leaves.insert(t);
                    break;
                }
            }
        }
        const VertexSet removable = leaves - protected_leaves;
        if (removable.empty()) throw InvariantViolation("every leaf of the BFS tree is protected");
        cur.branch[v].erase(removable.lowest());
        ++count;
        auto step = check_model(g, h, cur);
        if (!step) throw InvariantViolation("leaf deletion broke the model: " + step.detail);
    }
    if (steps) *steps = count;
    return cur;
}

namespace {

void require_induced_cycle(const Graph& g, const std::vector<int>& cycle) {
    for (int v : cycle)
        if (v < 0 || v >= g.order()) throw PreconditionError("cycle vertex outside the graph");
    if (!is_induced_cycle(g, cycle)) throw PreconditionError("C is not an induced cycle");
}

}  // namespace

InducedMinorModel wheel_from_cycle(const Graph& g, const std::vector<int>& cycle, VertexSet k) {
    require_induced_cycle(g, cycle);
    const VertexSet c = VertexSet::from_vector(cycle);
    if (k.empty() || k.intersects(c)) throw PreconditionError("K must be non-empty and disjoint from C");
    if (component_of(g, g.vertices() - c, k.lowest()) != k) throw PreconditionError("K is not a component of G - C");
    const VertexSet attach = open_neighborhood(g, k);
    if (attach.size() < 3)
        throw PreconditionError("K has " + std::to_string(attach.size()) + " attachments on C, need at least 3");
    const int len = static_cast<int>(cycle.size());
    const int start = static_cast<int>(std::find(cycle.begin(), cycle.end(), attach.lowest()) - cycle.begin());
    InducedMinorModel m;
    for (int i = 0; i < len; ++i) {
        const int v = cycle[(start + i) % len];
        if (attach.contains(v)) m.branch.emplace_back();
        m.branch.back().insert(v);
    }
    m.branch.push_back(k);
    auto check = check_model(g, wheel_graph(attach.size()), m);
    if (!check) throw InvariantViolation("wheel model from cycle is invalid: " + check.detail);
    return m;
}

InducedMinorModel contract_wheel_model(const InducedMinorModel& m, int l) {
    const int rim = static_cast<int>(m.branch.size()) - 1;
    if (l < 3 || l > rim) throw PreconditionError("cannot contract W_" + std::to_string(rim) + " to W_" + std::to_string(l));
    InducedMinorModel out;
    out.branch.assign(m.branch.begin(), m.branch.begin() + l);
    for (int i = l; i < rim; ++i) out.branch[l - 1] |= m.branch[i];
    out.branch.push_back(m.branch.back());
    return out;
}

std::optional<std::vector<int>> longest_induced_cycle(const Graph& g, int min_length) {
    std::optional<std::vector<int>> best;
    std::vector<int> path;
    std::function<void(int)> extend = [&](int s) {
        const int last = path.back();
        VertexSet inner;
        for (std::size_t i = 1; i + 1 < path.size(); ++i) inner.insert(path[i]);
        const VertexSet on_path = VertexSet::from_vector(path);
        for (int v : g.neighbors(last) - on_path) {
            if (v < s || g.neighbors(v).intersects(inner)) continue;
            if (path.size() >= 2 && g.adjacent(v, s)) {
                if (path[1] < v) {
                    const int len = static_cast<int>(path.size()) + 1;
                    if (len >= std::max(3, min_length) && (!best || len > static_cast<int>(best->size()))) {
                        best = path;
                        best->push_back(v);
                    }
                }
                continue;
            }
            path.push_back(v);
            extend(s);
            path.pop_back();
        }
    };
    for (int s = 0; s < g.order(); ++s) {
        path = {s};
        extend(s);
    }
    return best;
}

VicinityResult cycle_vicinity_decomposition(const Graph& g, const std::vector<int>& cycle, int d, int l) {
    if (l < 3) throw PreconditionError("l must be at least 3");
    if (d < 1) throw PreconditionError("d must be at least 1");
    require_induced_cycle(g, cycle);
    if (static_cast<int>(cycle.size()) < l)
        throw PreconditionError("cycle has length " + std::to_string(cycle.size()) + " < l = " + std::to_string(l));
    auto claw = is_k1d_free(g, d);
    if (!claw.free)
        throw PreconditionError("graph is not K_{1," + std::to_string(d) + "}-free: vertex " +
                                std::to_string(claw.witness->center));
    const VertexSet c = VertexSet::from_vector(cycle);
    const auto pieces = components(g, g.vertices() - c);
    VicinityResult result;
    for (VertexSet k : pieces)
        if (open_neighborhood(g, k).size() >= l) {
            result.model = contract_wheel_model(wheel_from_cycle(g, cycle, k), l);
            return result;
        }

    // Contracted graph: cycle vertices keep their labels' positions, then one vertex per piece.
    const int len = static_cast<int>(cycle.size());
    std::vector<int> position(g.order(), -1);
    for (int i = 0; i < len; ++i) position[cycle[i]] = i;
    std::vector<Edge> edges;
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j)
            if (g.adjacent(cycle[i], cycle[j])) edges.emplace_back(i, j);
    for (std::size_t p = 0; p < pieces.size(); ++p)
        for (int v : open_neighborhood(g, pieces[p])) edges.emplace_back(position[v], len + static_cast<int>(p));
    const Graph g1(len + static_cast<int>(pieces.size()), edges);
    const WidthResult tw = treewidth_exact(g1);

    const VertexSet near = open_neighborhood(g, c);
    VicinityDecomposition out;
    out.contracted_treewidth = tw.value;
    out.bag_bound = static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(l - 1) *
                    static_cast<std::uint64_t>(tw.value + 1);
    TreeDecomposition& td = out.decomposition;
    td.edges = tw.decomposition.edges;
    td.root = tw.decomposition.root;
    for (VertexSet bag1 : tw.decomposition.bags) {
        VertexSet bag;
        for (int x : bag1) {
            if (x < len) {
                bag.insert(cycle[x]);
            } else {
                bag |= near & pieces[x - len];
            }
        }
        out.f1.push_back(td.add_node(bag));
    }
    for (VertexSet j : components(g, g.vertices() - closed_neighborhood(g, c))) {
        int piece = 0;
        while (!pieces[piece].intersects(j)) ++piece;
        int host = 0;
        while (!tw.decomposition.bags[host].contains(len + piece)) ++host;
        const int node = td.add_node(closed_neighborhood(g, j));
        td.add_edge(host, node);
        out.f2.push_back(node);
        out.far_components.push_back(j);
    }
    auto check = check_vicinity(g, cycle, out);
    if (!check) throw InvariantViolation("vicinity decomposition failed: " + check.detail);
    result.vicinity = std::move(out);
    return result;
}

ModelCheck check_vicinity(const Graph& g, const std::vector<int>& cycle, const VicinityDecomposition& v) {
    ModelCheck out;
    auto fail = [&](std::string why) {
        out.valid = false;
        out.detail = std::move(why);
        return out;
    };
    const TreeDecomposition& td = v.decomposition;
    auto axioms = check_tree_decomposition(g, td);
    if (!axioms) return fail("decomposition axiom " + axioms.axiom + ": " + axioms.detail);
    std::vector<char> side(td.node_count(), 0);
    for (int t : v.f1) side[t] |= 1;
    for (int t : v.f2) side[t] |= 2;
    for (int t = 0; t < td.node_count(); ++t)
        if (side[t] != 1 && side[t] != 2) return fail("F1 and F2 do not partition the nodes at " + std::to_string(t));
    const auto bound = static_cast<long long>(v.bag_bound);
    for (int t : v.f1)
        if (independence_number(g, td.bags[t]) > bound) return fail("F1 bag " + std::to_string(t) + " exceeds the bound");
    for (auto [a, b] : td.edges)
        if (independence_number(g, td.bags[a] & td.bags[b]) > bound)
            return fail("adhesion " + std::to_string(a) + "-" + std::to_string(b) + " exceeds the bound");
    const auto far = components(g, g.vertices() - closed_neighborhood(g, VertexSet::from_vector(cycle)));
    if (far.size() != v.f2.size() || far != v.far_components) return fail("F2 does not match the far components");
    const auto adj = td.adjacency();
    for (std::size_t i = 0; i < v.f2.size(); ++i) {
        const int t = v.f2[i];
        if (adj[t].size() > 1) return fail("F2 node " + std::to_string(t) + " is not a leaf");
        if (td.bags[t] != closed_neighborhood(g, far[i])) return fail("F2 bag differs from N[J] at node " + std::to_string(t));
        for (int u : adj[t])
            if ((td.bags[t] & td.bags[u]) != open_neighborhood(g, far[i]))
                return fail("adhesion at F2 node " + std::to_string(t) + " differs from N(J)");
    }
    return out;
}

WheelDetection detect_wheel(const Graph& g, int d, int l) {
    if (l < 3) throw PreconditionError("l must be at least 3");
    if (d < 1) throw PreconditionError("d must be at least 1");
    auto claw = is_k1d_free(g, d);
    if (!claw.free)
        throw PreconditionError("graph is not K_{1," + std::to_string(d) + "}-free: vertex " +
                                std::to_string(claw.witness->center) + " with leaves " +
                                claw.witness->leaves.to_string());
    WheelDetection out;
    const Graph wheel = wheel_graph(l);
    if (auto model = find_induced_minor(g, wheel)) {
        auto check = check_model(g, wheel, *model);
        if (!check) throw InvariantViolation("search returned an invalid model: " + check.detail);
        out.model = std::move(model);
        return out;
    }
    const WidthResult tw = alpha_tw_exact(g);
    out.alpha_tw = tw.value;
    out.decomposition = tw.decomposition;
    if (auto cycle = longest_induced_cycle(g, l)) {
        auto vicinity = cycle_vicinity_decomposition(g, *cycle, d, l);
        if (vicinity.model) throw InvariantViolation("vicinity route found a wheel the exhaustive search missed");
        out.cycle = std::move(cycle);
        out.vicinity = std::move(vicinity.vicinity);
    }
    return out;
}

}  // namespace alphawidth
