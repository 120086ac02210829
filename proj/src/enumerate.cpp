#include "alphawidth/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <unordered_map>

#include "alphawidth/errors.hpp"

namespace alphawidth {

namespace {

// Stable colouring; colour ids are ranks of signatures, so equal fingerprints give
// comparable colours across graphs.
struct Refinement {
    std::vector<int> colour;
    std::string fingerprint;
};

Refinement refine(const Graph& g) {
    const int n = g.order();
    Refinement r;
    r.colour.assign(n, 0);
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
        int triangles = 0;
        for (int u : g.neighbors(v)) triangles += (g.neighbors(u) & g.neighbors(v)).size();
        sig[v] = {g.degree(v), triangles / 2};
    }
    int classes = 0;
    for (int round = 0; round <= n; ++round) {
        std::vector<std::vector<int>> distinct = sig;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (const auto& s : distinct) {
            r.fingerprint += '[';
            for (int x : s) r.fingerprint += std::to_string(x) + ',';
            r.fingerprint += ']';
            r.fingerprint += std::to_string(std::count(sig.begin(), sig.end(), s));
        }
        r.fingerprint += '|';
        for (int v = 0; v < n; ++v)
            r.colour[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
        if (static_cast<int>(distinct.size()) == classes) break;
        classes = static_cast<int>(distinct.size());
        for (int v = 0; v < n; ++v) {
            std::vector<int> next{r.colour[v]};
            std::vector<int> around;
            for (int u : g.neighbors(v)) around.push_back(r.colour[u]);
            std::sort(around.begin(), around.end());
            next.insert(next.end(), around.begin(), around.end());
            sig[v] = std::move(next);
        }
    }
    return r;
}

bool match(const Graph& a, const Graph& b, const std::vector<int>& ca, const std::vector<int>& cb) {
    const int n = a.order();
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::vector<int> size(n + 1, 0);
    for (int c : ca) ++size[c];
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return size[ca[x]] < size[ca[y]]; });
    std::vector<int> image(n, -1);
    VertexSet used;
    std::function<bool(int)> extend = [&](int i) {
        if (i == n) return true;
        const int v = order[i];
        for (int w = 0; w < n; ++w) {
            if (used.contains(w) || cb[w] != ca[v]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                const int u = order[j];
                if (a.adjacent(u, v) != b.adjacent(image[u], w)) ok = false;
            }
            if (!ok) continue;
            image[v] = w;
            used.insert(w);
            if (extend(i + 1)) return true;
            used.erase(w);
            image[v] = -1;
        }
        return false;
    };
    return extend(0);
}

}  // namespace

std::string refinement_fingerprint(const Graph& g) { return refine(g).fingerprint; }

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    Refinement ra = refine(a), rb = refine(b);
    if (ra.fingerprint != rb.fingerprint) return false;
    return match(a, b, ra.colour, rb.colour);
}

namespace {

std::vector<Graph> next_level(const std::vector<Graph>& smaller, int n) {
    std::vector<Graph> out;
    std::unordered_map<std::string, std::vector<std::pair<std::size_t, std::vector<int>>>> buckets;
    for (const Graph& base : smaller) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
            std::vector<VertexSet> rows = base.rows();
            rows.emplace_back(mask);
            for (int v : VertexSet(mask)) rows[v].insert(n - 1);
            Graph g = Graph::from_adjacency(std::move(rows));
            Refinement r = refine(g);
            auto& bucket = buckets[std::to_string(g.edge_count()) + r.fingerprint];
            bool seen = false;
            for (const auto& [index, colour] : bucket)
                if (match(g, out[index], r.colour, colour)) {
                    seen = true;
                    break;
                }
            if (seen) continue;
            bucket.emplace_back(out.size(), r.colour);
            out.push_back(std::move(g));
        }
    }
    return out;
}

void check_order(int n) {
    if (n < 0) throw PreconditionError("negative order");
    if (n > 10) throw SizeCapError("graph enumeration is limited to 10 vertices");
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n) {
    check_order(n);
    if (n == 0) return {Graph(0, {})};
    std::vector<Graph> level{Graph(1, {})};
    for (int m = 2; m <= n; ++m) level = next_level(level, m);
    return level;
}

std::vector<Graph> enumerate_graphs_up_to(int max_n) {
    check_order(max_n);
    std::vector<Graph> out;
    std::vector<Graph> level{Graph(1, {})};
    for (int n = 1; n <= max_n; ++n) {
        if (n > 1) level = next_level(level, n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

}  // namespace alphawidth
