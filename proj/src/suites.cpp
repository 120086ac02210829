#include "alphawidth/suites.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <thread>

#include "alphawidth/brambles.hpp"
#include "alphawidth/domination.hpp"
#include "alphawidth/errors.hpp"
#include "alphawidth/graph_algorithms.hpp"
#include "alphawidth/graph_io.hpp"
#include "alphawidth/induced_minor.hpp"
#include "alphawidth/treedepth.hpp"
#include "alphawidth/width.hpp"

namespace alphawidth {

const char* status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skip: return "skip";
    }
    return "?";
}

std::size_t RunReport::count(Status s) const {
    std::size_t n = 0;
    for (const auto& o : outcomes)
        if (o.status == s) ++n;
    return n;
}

Json RunReport::summary(bool with_timing) const {
    Json out;
    out["suite"] = suite;
    out["graphs"] = outcomes.size();
    out["passed"] = count(Status::pass);
    out["failed"] = count(Status::fail);
    out["skipped"] = count(Status::skip);
    out["malformed"] = warnings.size();
    Json fails = Json::array();
    for (const auto& o : outcomes)
        if (o.status == Status::fail) fails.push_back({{"index", o.index}, {"graph6", o.graph6}, {"detail", o.detail}});
    out["failures"] = fails;
    if (with_timing) out["wall_seconds"] = wall_seconds;
    return out;
}

namespace {

using Check = std::function<void(const Graph&, const SuiteParams&, GraphOutcome&)>;

void fail(GraphOutcome& o, std::string why) {
    if (o.status != Status::fail) o.detail = std::move(why);
    o.status = Status::fail;
}

void skip(GraphOutcome& o, std::string why) {
    o.status = Status::skip;
    o.detail = std::move(why);
}

// Vertices in path order from the smaller endpoint, or empty when G is not a path.
std::vector<int> path_order(const Graph& g) {
    const int n = g.order();
    if (n == 0 || g.edge_count() != n - 1 || !is_connected(g)) return {};
    int start = -1;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) > 2) return {};
        if (start < 0 && g.degree(v) <= 1) start = v;
    }
    std::vector<int> seq{start};
    VertexSet seen{start};
    while (static_cast<int>(seq.size()) < n) {
        const VertexSet next = g.neighbors(seq.back()) - seen;
        seq.push_back(next.lowest());
        seen.insert(next.lowest());
    }
    return seq;
}

void duality(const Graph& g, const SuiteParams& p, GraphOutcome& o) {
    if (!is_connected(g)) return skip(o, "disconnected");
    const int tw = alpha_tw_exact(g).value;
    o.values["alpha_tw"] = tw;
    auto sb = strong_bramble_of_order(g, p.k);
    if (!sb) {
        o.values["bramble"] = nullptr;
        if (tw >= 4 * p.k - 2) fail(o, "alpha-tw >= 4k-2 but no strong bramble was built");
        return;
    }
    auto check = check_strong_bramble(g, sb->bramble);
    if (!check) return fail(o, "not a strong bramble: " + check.detail);
    const int order = alpha_order_exact(g, sb->bramble).value;
    o.values["alpha_order"] = order;
    if (order < p.k) fail(o, "alpha-order " + std::to_string(order) + " below k");
    if (tw < order) fail(o, "alpha-tw below the bramble's alpha-order");
}

void treedepth_formula(const Graph& g, const SuiteParams&, GraphOutcome& o) {
    const std::vector<int> seq = path_order(g);
    if (seq.empty()) return skip(o, "not a path");
    const int k = static_cast<int>(seq.size());
    const int expected = path_alpha_td_formula(k);
    const int exact = alpha_td_exact(g).value;
    const EliminationForest canonical = path_elimination_tree(k);
    EliminationForest relabelled{std::vector<int>(k, -1)};
    for (int i = 0; i < k; ++i)
        if (canonical.parent[i] >= 0) relabelled.parent[seq[i]] = seq[canonical.parent[i]];
    const int built = alpha_depth(g, relabelled);
    o.values["k"] = k;
    o.values["alpha_td"] = exact;
    o.values["construction"] = built;
    if (exact != expected || built != expected)
        fail(o, "expected " + std::to_string(expected) + ", exact " + std::to_string(exact) + ", construction " +
                    std::to_string(built));
}

void td_vs_tw(const Graph& g, const SuiteParams&, GraphOutcome& o) {
    const int tw = alpha_tw_exact(g).value;
    const int td = alpha_td_exact(g).value;
    o.values["alpha_tw"] = tw;
    o.values["alpha_td"] = td;
    if (tw > td) fail(o, "alpha-tw exceeds alpha-td");
}

void chordal_char(const Graph& g, const SuiteParams&, GraphOutcome& o) {
    const int tw = alpha_tw_exact(g).value;
    const bool chordal = is_chordal(g);
    o.values["alpha_tw"] = tw;
    o.values["chordal"] = chordal;
    if ((tw <= 1) != chordal) fail(o, "alpha-tw <= 1 disagrees with chordality");
}

void quasi_threshold_char(const Graph& g, const SuiteParams&, GraphOutcome& o) {
    const int td = alpha_td_exact(g).value;
    const bool qt = is_quasi_threshold(g);
    o.values["alpha_td"] = td;
    o.values["quasi_threshold"] = qt;
    if ((td <= 1) != qt) fail(o, "alpha-td <= 1 disagrees with {P4,C4}-freeness");
}

void refine(const Graph& g, const SuiteParams& p, GraphOutcome& o) {
    auto r = refine_decomposition(g, p.k);
    o.values["iterations"] = r.stats.iterations;
    o.values["interior_separator_splits"] = r.stats.interior_separator_splits;
    if (r.decomposition) {
        auto check = check_tree_decomposition(g, *r.decomposition);
        if (!check) return fail(o, "invalid decomposition: " + check.detail);
        const int width = alpha_width(g, *r.decomposition);
        o.values["alpha_width"] = width;
        if (width > 2 * p.k + 1) fail(o, "alpha-width " + std::to_string(width) + " above 2k+1");
    } else {
        o.values["linked_set"] = r.linked_set->to_vector();
        if (balanced_separator(g, *r.linked_set, p.k)) fail(o, "returned set has a balanced separator");
    }
}

void small_model(const Graph& g, const SuiteParams&, GraphOutcome& o) {
    const std::vector<std::pair<std::string, Graph>> patterns{
        {"K3", graphs::complete(3)}, {"P4", graphs::path(4)}, {"K4", graphs::complete(4)}, {"C4", graphs::cycle(4)}};
    for (const auto& [name, h] : patterns) {
        auto any = find_induced_minor(g, h, false);
        auto small = find_induced_minor(g, h, true);
        o.values[name] = any.has_value();
        if (any.has_value() != small.has_value()) fail(o, name + ": unrestricted and small-model searches disagree");
        if (any) {
            auto shrunk = minimize_model(g, h, *any);
            if (!is_model(g, h, shrunk) || !is_small_model(g, h, shrunk)) fail(o, name + ": minimised model invalid");
        }
    }
}

void wheel_dichotomy(const Graph& g, const SuiteParams& p, GraphOutcome& o) {
    if (!is_k1d_free(g, p.d).free) return skip(o, "contains K_{1,d}");
    const Graph wheel = wheel_graph(p.l);
    auto result = detect_wheel(g, p.d, p.l);
    const bool small = find_induced_minor(g, wheel, true).has_value();
    o.values["model"] = result.model.has_value();
    if (result.model.has_value() != small) fail(o, "detection disagrees with the small-model search");
    if (result.model) {
        if (!is_model(g, wheel, *result.model)) fail(o, "emitted model invalid");
        return;
    }
    o.values["alpha_tw"] = *result.alpha_tw;
    if (!check_tree_decomposition(g, *result.decomposition)) fail(o, "certificate decomposition invalid");
    if (result.vicinity) {
        auto check = check_vicinity(g, *result.cycle, *result.vicinity);
        if (!check) fail(o, "vicinity: " + check.detail);
        // Without a wheel, no component of G - C may attach to l cycle vertices.
        const VertexSet c = VertexSet::from_vector(*result.cycle);
        for (VertexSet k : components(g, g.vertices() - c))
            if (open_neighborhood(g, k).size() >= p.l) fail(o, "component with l attachments but no wheel");
    }
}

void domination(const Graph& g, const SuiteParams& p, GraphOutcome& o) {
    if (!is_connected(g)) return skip(o, "disconnected");
    auto sb = strong_bramble_of_order(g, p.k);
    if (!sb) return skip(o, "no strong bramble of this order");
    auto path = dominating_path(g, sb->bramble);
    o.values["path"] = path;
    if (!is_induced_path(g, path)) fail(o, "path not induced");
    if (!dominates(g, path, sb->bramble)) fail(o, "path does not dominate");
    auto cyc = dominating_cycle_or_vertex(g, sb->bramble);
    if (cyc.vertex) {
        o.values["vertex"] = *cyc.vertex;
        if (!dominates(g, {*cyc.vertex}, sb->bramble)) fail(o, "vertex does not dominate");
    } else {
        o.values["cycle"] = cyc.cycle;
        if (!is_induced_cycle(g, cyc.cycle)) fail(o, "cycle not induced");
        if (!dominates(g, cyc.cycle, sb->bramble)) fail(o, "cycle does not dominate");
    }
}

const std::map<std::string, Check>& registry() {
    static const std::map<std::string, Check> suites{
        {"duality", duality},
        {"treedepth-formula", treedepth_formula},
        {"td-vs-tw", td_vs_tw},
        {"chordal-char", chordal_char},
        {"quasi-threshold-char", quasi_threshold_char},
        {"refine", refine},
        {"small-model", small_model},
        {"wheel-dichotomy", wheel_dichotomy},
        {"domination", domination},
    };
    return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

int worker_count_from_env() {
    const char* raw = std::getenv("ALPHAWIDTH_WORKERS");
    if (!raw || !*raw) return 1;
    const int n = std::atoi(raw);
    return n < 1 ? 1 : n;
}

RunReport run_suite(const std::string& name, const std::vector<Graph>& graphs, const SuiteParams& params, int workers) {
    auto it = registry().find(name);
    if (it == registry().end()) throw PreconditionError("unknown suite '" + name + "'");
    const Check& check = it->second;
    RunReport report;
    report.suite = name;
    report.outcomes.resize(graphs.size());
    const auto start = std::chrono::steady_clock::now();
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < graphs.size(); i = next++) {
            GraphOutcome& o = report.outcomes[i];
            o.index = i;
            o.graph6 = emit_graph6(graphs[i]);
            try {
                check(graphs[i], params, o);
            } catch (const SizeCapError& e) {
                skip(o, e.what());
            } catch (const std::exception& e) {
                fail(o, std::string("exception: ") + e.what());
            }
        }
    };
    const int threads = std::max(1, workers);
    if (threads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace alphawidth
