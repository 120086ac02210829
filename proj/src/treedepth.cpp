#include "alphawidth/treedepth.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "alphawidth/errors.hpp"
#include "alphawidth/graph_algorithms.hpp"

namespace alphawidth {

std::vector<int> EliminationForest::roots() const {
    std::vector<int> out;
    for (int v = 0; v < order(); ++v)
        if (parent[v] < 0) out.push_back(v);
    return out;
}

std::vector<std::vector<int>> EliminationForest::children() const {
    std::vector<std::vector<int>> out(order());
    for (int v = 0; v < order(); ++v)
        if (parent[v] >= 0) out[parent[v]].push_back(v);
    return out;
}

std::vector<int> EliminationForest::ancestors(int v) const {
    std::vector<int> out;
    for (int u = v; u >= 0; u = parent[u]) {
        out.push_back(u);
        if (static_cast<int>(out.size()) > order()) throw PreconditionError("parent map has a cycle");
    }
    return out;
}

std::vector<std::vector<int>> EliminationForest::root_to_leaf_paths() const {
    auto kids = children();
    std::vector<std::vector<int>> out;
    for (int v = 0; v < order(); ++v) {
        if (!kids[v].empty()) continue;
        auto up = ancestors(v);
        std::reverse(up.begin(), up.end());
        out.push_back(std::move(up));
    }
    return out;
}

ForestCheck check_elimination_forest(const SparseGraph& g, const EliminationForest& f) {
    ForestCheck out;
    const int n = g.order();
    if (f.order() != n) {
        out.valid = false;
        out.detail = "forest has " + std::to_string(f.order()) + " vertices, graph has " + std::to_string(n);
        return out;
    }
    std::vector<int> depth(n, -1);
    for (int v = 0; v < n; ++v) {
        if (f.parent[v] < -1 || f.parent[v] >= n || f.parent[v] == v) {
            out.valid = false;
            out.detail = "vertex " + std::to_string(v) + " has invalid parent " + std::to_string(f.parent[v]);
            return out;
        }
    }
    for (int v = 0; v < n; ++v) {
        int steps = 0;
        for (int u = v; u >= 0; u = f.parent[u])
            if (++steps > n) {
                out.valid = false;
                out.detail = "parent map has a cycle through vertex " + std::to_string(v);
                return out;
            }
        depth[v] = steps;
    }
    auto is_ancestor = [&](int a, int b) {
        for (int u = b; u >= 0; u = f.parent[u])
            if (u == a) return true;
        return false;
    };
    for (auto [u, v] : g.edges()) {
        const bool ok = depth[u] < depth[v] ? is_ancestor(u, v) : is_ancestor(v, u);
        if (!ok) {
            out.valid = false;
            out.detail = "edge " + std::to_string(u) + "-" + std::to_string(v) + " joins incomparable vertices";
            return out;
        }
    }
    return out;
}

ForestCheck check_elimination_forest(const Graph& g, const EliminationForest& f) {
    return check_elimination_forest(SparseGraph(g), f);
}

int alpha_depth(const SparseGraph& g, const EliminationForest& f) {
    auto check = check_elimination_forest(g, f);
    if (!check) throw PreconditionError("invalid elimination forest: " + check.detail);
    int best = 0;
    for (const auto& path : f.root_to_leaf_paths()) {
        if (static_cast<int>(path.size()) > kMaxBitsetVertices)
            throw SizeCapError("root-to-leaf path longer than " + std::to_string(kMaxBitsetVertices));
        best = std::max(best, independence_number(g.induced(path)));
    }
    return best;
}

int alpha_depth(const Graph& g, const EliminationForest& f) {
    auto check = check_elimination_forest(g, f);
    if (!check) throw PreconditionError("invalid elimination forest: " + check.detail);
    int best = 0;
    for (const auto& path : f.root_to_leaf_paths())
        best = std::max(best, independence_number(g, VertexSet::from_vector(path)));
    return best;
}

namespace {

// f(S, A): least achievable max alpha(A ∪ P) over root-to-leaf paths P of a forest on S.
// The value depends on A only through A' = A ∩ N(S) and Y -> alpha(A - Y) for Y ⊆ A'.
class DepthSearch {
public:
    explicit DepthSearch(const Graph& g) : g_(g) {}

    int solve(VertexSet s, VertexSet a) {
        std::string key = make_key(s, a);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second.value;
        const int floor = independence_number(g_, a);
        int best = std::numeric_limits<int>::max();
        int best_root = -1;
        for (int r : s) {
            const VertexSet above = a | VertexSet::single(r);
            int value = independence_number(g_, above);
            if (value >= best) continue;
            for (VertexSet c : components(g_, s - VertexSet::single(r))) {
                value = std::max(value, solve(c, above));
                if (value >= best) break;
            }
            if (value < best) {
                best = value;
                best_root = r;
                if (best <= floor) break;
            }
        }
        memo_.emplace(std::move(key), Entry{best, best_root});
        return best;
    }

    void build(VertexSet s, VertexSet a, int parent, std::vector<int>& out) {
        const int r = memo_.at(make_key(s, a)).root;
        out[r] = parent;
        for (VertexSet c : components(g_, s - VertexSet::single(r))) build(c, a | VertexSet::single(r), r, out);
    }

private:
    struct Entry {
        int value;
        int root;
    };

    std::string make_key(VertexSet s, VertexSet a) const {
        const VertexSet boundary = a & neighborhood(g_, s);
        if (boundary.size() > 16) throw SizeCapError("ancestor boundary too large for alpha_td_exact");
        std::string key(16, '\0');
        const std::uint64_t sb = s.bits(), bb = boundary.bits();
        std::memcpy(key.data(), &sb, 8);
        std::memcpy(key.data() + 8, &bb, 8);
        const auto pool = boundary.to_vector();
        const std::uint32_t count = std::uint32_t{1} << pool.size();
        for (std::uint32_t mask = 0; mask < count; ++mask) {
            VertexSet y;
            for (std::size_t i = 0; i < pool.size(); ++i)
                if (mask >> i & 1U) y.insert(pool[i]);
            key.push_back(static_cast<char>(independence_number(g_, a - y)));
        }
        return key;
    }

    const Graph& g_;
    std::unordered_map<std::string, Entry> memo_;
};

}  // namespace

DepthResult alpha_td_exact(const Graph& g) {
    if (g.order() > kTreedepthCap)
        throw SizeCapError("alpha_td_exact is limited to " + std::to_string(kTreedepthCap) + " vertices, got " +
                           std::to_string(g.order()));
    DepthResult result;
    result.forest.parent.assign(g.order(), -1);
    DepthSearch search(g);
    for (VertexSet c : components(g, g.vertices())) {
        result.value = std::max(result.value, search.solve(c, {}));
        search.build(c, {}, -1, result.forest.parent);
    }
    return result;
}

int path_alpha_td_formula(int k) {
    if (k < 1) throw PreconditionError("path length must be positive");
    int l = 0;
    while (3LL * (1LL << l) < k + 3LL) ++l;
    return l;
}

EliminationForest path_elimination_tree(int k) {
    const int levels = std::max(1, path_alpha_td_formula(k));
    // parent over 1..K for the complete tree T_levels, 0 for the root.
    std::vector<int> parent{0, 2, 0, 2};
    int size = 3;
    for (int l = 2; l <= levels; ++l) {
        const int next = 2 * size + 3;
        const int root = size + 2;
        const int shift = size + 3;
        std::vector<int> p(next + 1, 0);
        for (int v = 1; v <= size; ++v) {
            p[v] = parent[v] == 0 ? root - 1 : parent[v];
            p[v + shift] = parent[v] == 0 ? root + 1 : parent[v] + shift;
        }
        p[root - 1] = root;
        p[root + 1] = root;
        p[root] = 0;
        parent = std::move(p);
        size = next;
    }
    EliminationForest f;
    f.parent.assign(k, -1);
    for (int v = 1; v <= k; ++v) {
        int u = parent[v];
        while (u > k) u = parent[u];
        f.parent[v - 1] = u - 1;
    }
    return f;
}

namespace {

class Gyarfas {
public:
    Gyarfas(const Graph& g, std::vector<int>& parent) : g_(g), parent_(parent) {}

    // Fills parent_ for u - {r}; returns an induced path from r on k vertices instead when found.
    std::optional<std::vector<int>> solve(VertexSet u, int r, int k) {
        const VertexSet near = g_.neighbors(r) & u;
        const VertexSet far = u - near - VertexSet::single(r);
        if (k == 3) {
            for (int x : near) {
                const VertexSet reach = g_.neighbors(x) & far;
                if (!reach.empty()) return std::vector<int>{r, x, reach.lowest()};
            }
            chain(r, near);
            return std::nullopt;
        }
        chain(r, near);
        for (VertexSet j : components(g_, far)) {
            const int ri = (neighborhood(g_, j) & near).highest();
            auto path = solve(j | VertexSet::single(ri), ri, k - 1);
            if (path) {
                path->insert(path->begin(), r);
                return path;
            }
        }
        return std::nullopt;
    }

private:
    int chain(int r, VertexSet rest) {
        int prev = r;
        for (int v : rest) {
            parent_[v] = prev;
            prev = v;
        }
        return prev;
    }

    const Graph& g_;
    std::vector<int>& parent_;
};

}  // namespace

GyarfasResult gyarfas_elimination(const Graph& g, int d, int k, int root) {
    const int n = g.order();
    if (n == 0) return {EliminationForest{}, std::nullopt};
    if (root < 0 || root >= n) throw PreconditionError("root outside the graph");
    if (!is_connected(g)) throw PreconditionError("graph is disconnected; split it into components first");
    if (d < 1) throw PreconditionError("gyarfas_elimination needs d >= 1");
    auto claw = is_k1d_free(g, d);
    if (!claw.free)
        throw PreconditionError("graph is not K_{1," + std::to_string(d) + "}-free: vertex " +
                                std::to_string(claw.witness->center) + " with leaves " +
                                claw.witness->leaves.to_string());
    GyarfasResult out;
    if (k <= 1) {
        out.path = std::vector<int>{root};
        return out;
    }
    if (k == 2) {
        if (n == 1) {
            out.forest = EliminationForest{{-1}};
        } else {
            out.path = std::vector<int>{root, g.neighbors(root).lowest()};
        }
        return out;
    }
    std::vector<int> parent(n, -1);
    Gyarfas search(g, parent);
    auto path = search.solve(g.vertices(), root, k);
    if (path) {
        out.path = std::move(path);
    } else {
        EliminationForest f;
        f.parent = std::move(parent);
        out.forest = std::move(f);
    }
    return out;
}

EliminationForest kdd_elimination(int d) {
    if (d < 1) throw PreconditionError("kdd_elimination needs d >= 1");
    EliminationForest f;
    f.parent.assign(2 * d, d - 1);
    f.parent[0] = -1;
    for (int v = 1; v < d; ++v) f.parent[v] = v - 1;
    return f;
}

std::string to_dot(const EliminationForest& f, std::string_view name) {
    std::ostringstream out;
    out << "digraph " << name << " {\n  rankdir=TB;\n";
    for (int v = 0; v < f.order(); ++v) out << "  " << v << ";\n";
    for (int v = 0; v < f.order(); ++v)
        if (f.parent[v] >= 0) out << "  " << f.parent[v] << " -> " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace alphawidth
