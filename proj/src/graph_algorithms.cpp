#include "alphawidth/graph_algorithms.hpp"

#include <algorithm>

#include "alphawidth/errors.hpp"

namespace alphawidth {

VertexSet neighborhood(const Graph& g, VertexSet x, bool closed) {
    VertexSet out;
    for (int v : x) out |= g.neighbors(v);
    return closed ? (out | x) : (out - x);
}

VertexSet component_of(const Graph& g, VertexSet x, int start) {
    VertexSet seen = VertexSet::single(start);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next |= g.neighbors(v);
        next = (next & x) - seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

std::vector<VertexSet> components(const Graph& g, VertexSet x) {
    std::vector<VertexSet> out;
    VertexSet rest = x;
    while (!rest.empty()) {
        VertexSet c = component_of(g, rest, rest.lowest());
        out.push_back(c);
        rest -= c;
    }
    return out;
}

bool is_connected(const Graph& g, VertexSet x) {
    if (x.empty()) return true;
    return component_of(g, x, x.lowest()) == x;
}

namespace {

// Branch and bound for maximum clique with greedy colouring bounds over bitset rows.
class CliqueSearch {
public:
    explicit CliqueSearch(const std::vector<VertexSet>& rows) : rows_(rows) {}

    VertexSet run(VertexSet candidates) {
        best_ = candidates.empty() ? VertexSet{} : VertexSet::single(candidates.lowest());
        expand(VertexSet{}, candidates);
        return best_;
    }

private:
    void expand(VertexSet current, VertexSet candidates) {
        std::vector<int> order;
        std::vector<int> colour;
        order.reserve(candidates.size());
        colour.reserve(candidates.size());
        VertexSet uncoloured = candidates;
        int k = 0;
        while (!uncoloured.empty()) {
            ++k;
            VertexSet q = uncoloured;
            while (!q.empty()) {
                int v = q.lowest();
                q -= rows_[v];
                q.erase(v);
                uncoloured.erase(v);
                order.push_back(v);
                colour.push_back(k);
            }
        }
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (current.size() + colour[i] <= best_.size()) return;
            const int v = order[i];
            VertexSet next = current | VertexSet::single(v);
            VertexSet sub = candidates & rows_[v];
            if (sub.empty()) {
                if (next.size() > best_.size()) best_ = next;
            } else {
                expand(next, sub);
            }
            candidates.erase(v);
        }
    }

    const std::vector<VertexSet>& rows_;
    VertexSet best_;
};

std::vector<VertexSet> complement_rows(const Graph& g, VertexSet x) {
    std::vector<VertexSet> rows(g.order());
    for (int v : x) rows[v] = x - g.neighbors(v) - VertexSet::single(v);
    return rows;
}

}  // namespace

VertexSet maximum_clique(const Graph& g, VertexSet x) {
    if (x.empty()) return {};
    return CliqueSearch(g.rows()).run(x);
}

VertexSet maximum_independent_set(const Graph& g, VertexSet x) {
    if (x.empty()) return {};
    auto rows = complement_rows(g, x);
    return CliqueSearch(rows).run(x);
}

bool is_clique(const Graph& g, VertexSet x) {
    for (int v : x)
        if (!(x - VertexSet::single(v)).is_subset_of(g.neighbors(v))) return false;
    return true;
}

bool is_independent(const Graph& g, VertexSet x) {
    for (int v : x)
        if (g.neighbors(v).intersects(x)) return false;
    return true;
}

int independence_number(const Graph& g, VertexSet x) {
    if (x.size() <= 1) return x.size();
    if (is_clique(g, x)) return 1;
    return maximum_independent_set(g, x).size();
}

int clique_number(const Graph& g, VertexSet x) {
    if (x.size() <= 1) return x.size();
    if (is_independent(g, x)) return 1;
    return maximum_clique(g, x).size();
}

K1dFreeResult is_k1d_free(const Graph& g, int d) {
    if (d < 1) throw PreconditionError("is_k1d_free needs d >= 1");
    for (int v = 0; v < g.order(); ++v) {
        VertexSet nb = g.neighbors(v);
        if (nb.size() < d) continue;
        VertexSet independent = maximum_independent_set(g, nb);
        if (independent.size() >= d) {
            VertexSet leaves;
            for (int u : independent) {
                if (leaves.size() == d) break;
                leaves.insert(u);
            }
            return {false, ClawWitness{v, leaves}};
        }
    }
    return {true, std::nullopt};
}

std::vector<int> lex_bfs(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> label(n);
    std::vector<int> order;
    VertexSet unvisited = g.vertices();
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v : unvisited)
            if (pick < 0 || label[v] > label[pick]) pick = v;
        order.push_back(pick);
        unvisited.erase(pick);
        for (int u : g.neighbors(pick) & unvisited) label[u].push_back(n - step);
    }
    return order;
}

bool is_perfect_elimination_order(const Graph& g, const std::vector<int>& elimination_order) {
    VertexSet later = g.vertices();
    for (int v : elimination_order) {
        later.erase(v);
        if (!is_clique(g, g.neighbors(v) & later)) return false;
    }
    return true;
}

bool is_chordal(const Graph& g) {
    std::vector<int> order = lex_bfs(g);
    std::reverse(order.begin(), order.end());
    return is_perfect_elimination_order(g, order);
}

namespace {

bool extend_injection(const Graph& g, const Graph& h, std::vector<int>& phi, VertexSet used) {
    const int i = static_cast<int>(phi.size());
    if (i == h.order()) return true;
    for (int cand : g.vertices() - used) {
        if (g.degree(cand) < h.degree(i)) continue;
        bool ok = true;
        for (int j = 0; j < i && ok; ++j)
            ok = h.adjacent(i, j) == g.adjacent(cand, phi[j]);
        if (!ok) continue;
        phi.push_back(cand);
        if (extend_injection(g, h, phi, used | VertexSet::single(cand))) return true;
        phi.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> contains_induced(const Graph& g, const Graph& h) {
    if (h.order() > g.order()) return std::nullopt;
    std::vector<int> phi;
    if (extend_injection(g, h, phi, VertexSet{})) return phi;
    return std::nullopt;
}

bool is_quasi_threshold(const Graph& g) {
    return !contains_induced(g, graphs::path(4)) && !contains_induced(g, graphs::cycle(4));
}

bool is_induced_path(const Graph& g, const std::vector<int>& seq) {
    const int k = static_cast<int>(seq.size());
    if (k == 0) return false;
    VertexSet seen;
    for (int v : seq) {
        if (v < 0 || v >= g.order() || seen.contains(v)) return false;
        seen.insert(v);
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(seq[i], seq[j]) != (j == i + 1)) return false;
    return true;
}

bool is_induced_cycle(const Graph& g, const std::vector<int>& seq) {
    const int k = static_cast<int>(seq.size());
    if (k < 3) return false;
    VertexSet seen;
    for (int v : seq) {
        if (v < 0 || v >= g.order() || seen.contains(v)) return false;
        seen.insert(v);
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if (g.adjacent(seq[i], seq[j]) != consecutive) return false;
        }
    return true;
}

std::optional<std::vector<int>> shortest_path_into(const Graph& g, int from, VertexSet targets,
                                                   VertexSet allowed) {
    if (targets.contains(from)) return std::vector<int>{from};
    std::vector<int> parent(g.order(), -1);
    VertexSet seen = VertexSet::single(from);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next |= g.neighbors(v);
        next = (next & allowed) - seen;
        for (int u : next) parent[u] = (g.neighbors(u) & frontier).lowest();
        VertexSet hit = next & targets;
        if (!hit.empty()) {
            std::vector<int> path;
            for (int v = hit.lowest(); v != from; v = parent[v]) path.push_back(v);
            path.push_back(from);
            std::reverse(path.begin(), path.end());
            return path;
        }
        seen |= next;
        frontier = next;
    }
    return std::nullopt;
}

}  // namespace alphawidth
