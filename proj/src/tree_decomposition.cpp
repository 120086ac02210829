#include "alphawidth/tree_decomposition.hpp"

#include <algorithm>
#include <set>

#include "alphawidth/errors.hpp"
#include "alphawidth/graph_algorithms.hpp"

namespace alphawidth {

std::vector<std::vector<int>> TreeDecomposition::adjacency() const {
    std::vector<std::vector<int>> adj(bags.size());
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

int TreeDecomposition::width() const {
    int w = -1;
    for (auto bag : bags) w = std::max(w, bag.size() - 1);
    return w;
}

namespace {

DecompositionCheck fail(std::string axiom, std::string detail) {
    return {false, std::move(axiom), std::move(detail)};
}

// Number of connected pieces of the node set `nodes` in the tree.
int pieces(const std::vector<std::vector<int>>& adj, const std::vector<char>& in) {
    const int m = static_cast<int>(adj.size());
    std::vector<char> seen(m, 0);
    int count = 0;
    for (int s = 0; s < m; ++s) {
        if (!in[s] || seen[s]) continue;
        ++count;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adj[x])
                if (in[y] && !seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
        }
    }
    return count;
}

}  // namespace

DecompositionCheck check_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
    const int m = td.node_count();
    if (m == 0) return fail("tree", "decomposition has no nodes");
    if (static_cast<int>(td.edges.size()) != m - 1)
        return fail("tree", "expected " + std::to_string(m - 1) + " tree edges, found " +
                                std::to_string(td.edges.size()));
    std::set<std::pair<int, int>> seen_edges;
    for (auto [a, b] : td.edges) {
        if (a < 0 || b < 0 || a >= m || b >= m) return fail("tree", "edge references a missing node");
        if (a == b) return fail("tree", "self-loop at node " + std::to_string(a));
        if (!seen_edges.insert({std::min(a, b), std::max(a, b)}).second)
            return fail("tree", "duplicate tree edge");
    }
    auto adj = td.adjacency();
    if (pieces(adj, std::vector<char>(m, 1)) != 1) return fail("tree", "node graph is not connected");
    if (td.root && (*td.root < 0 || *td.root >= m)) return fail("tree", "root is not a node");

    VertexSet covered;
    for (int t = 0; t < m; ++t) {
        if (!td.bags[t].is_subset_of(g.vertices()))
            return fail("bags", "bag of node " + std::to_string(t) + " names a vertex outside the graph");
        covered |= td.bags[t];
    }
    if (covered != g.vertices())
        return fail("cover", "vertex " + std::to_string((g.vertices() - covered).lowest()) + " is in no bag");
    for (auto [u, v] : g.edges()) {
        bool found = false;
        for (auto bag : td.bags)
            if (bag.contains(u) && bag.contains(v)) {
                found = true;
                break;
            }
        if (!found)
            return fail("edge", "edge " + std::to_string(u) + "-" + std::to_string(v) + " lies in no bag");
    }
    for (int v = 0; v < g.order(); ++v) {
        std::vector<char> in(m, 0);
        for (int t = 0; t < m; ++t) in[t] = td.bags[t].contains(v) ? 1 : 0;
        if (pieces(adj, in) != 1)
            return fail("subtree", "nodes containing vertex " + std::to_string(v) + " are not connected");
    }
    return {};
}

int alpha_width(const Graph& g, const TreeDecomposition& td) {
    auto check = check_tree_decomposition(g, td);
    if (!check) throw PreconditionError("invalid tree decomposition (" + check.axiom + "): " + check.detail);
    int best = 0;
    for (auto bag : td.bags) best = std::max(best, independence_number(g, bag));
    return best;
}

TreeDecomposition compress(const TreeDecomposition& input) {
    std::vector<VertexSet> bags = input.bags;
    std::vector<std::set<int>> adj(bags.size());
    for (auto [a, b] : input.edges) {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    std::vector<char> alive(bags.size(), 1);
    std::optional<int> root = input.root;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int t = 0; t < static_cast<int>(bags.size()) && !changed; ++t) {
            if (!alive[t]) continue;
            for (int u : adj[t]) {
                if (!bags[t].is_subset_of(bags[u])) continue;
                for (int w : adj[t])
                    if (w != u) {
                        adj[w].erase(t);
                        adj[w].insert(u);
                        adj[u].insert(w);
                    }
                adj[u].erase(t);
                adj[t].clear();
                alive[t] = 0;
                if (root == t) root = u;
                changed = true;
                break;
            }
        }
    }
    TreeDecomposition out;
    std::vector<int> remap(bags.size(), -1);
    for (int t = 0; t < static_cast<int>(bags.size()); ++t)
        if (alive[t]) remap[t] = out.add_node(bags[t]);
    for (int t = 0; t < static_cast<int>(bags.size()); ++t)
        for (int u : adj[t])
            if (alive[t] && t < u) out.add_edge(remap[t], remap[u]);
    if (root) out.root = remap[*root];
    return out;
}

std::string to_dot(const TreeDecomposition& td, std::string_view name) {
    std::string out = "graph " + std::string(name) + " {\n  node [shape=box];\n";
    for (int t = 0; t < td.node_count(); ++t)
        out += "  t" + std::to_string(t) + " [label=\"" + std::to_string(t) + ": " + td.bags[t].to_string() + "\"];\n";
    for (auto [a, b] : td.edges) out += "  t" + std::to_string(a) + " -- t" + std::to_string(b) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace alphawidth
