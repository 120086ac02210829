#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "../support/oracles.hpp"
#include "alphawidth/enumerate.hpp"
#include "alphawidth/errors.hpp"
#include "alphawidth/graph_algorithms.hpp"
#include "alphawidth/induced_minor.hpp"
#include "alphawidth/width.hpp"

using namespace alphawidth;

namespace {

// Cycle 0..m-1 plus one extra vertex m adjacent to the listed cycle vertices.
Graph cycle_with_apex(int m, const std::vector<int>& attach) {
    std::vector<Edge> e;
    for (int i = 0; i < m; ++i) e.emplace_back(i, (i + 1) % m);
    for (int v : attach) e.emplace_back(v, m);
    return Graph(m + 1, e);
}

Graph w5_minus_spoke() {
    Graph w = wheel_graph(5);
    std::vector<Edge> e;
    for (auto [u, v] : w.edges())
        if (!(u == 0 && v == 5)) e.emplace_back(u, v);
    return Graph(6, e);
}

}  // namespace

TEST_CASE("wheel graphs") {
    CHECK(wheel_graph(3) == graphs::complete(4));
    Graph w4 = wheel_graph(4);
    CHECK(w4.order() == 5);
    CHECK(w4.edge_count() == 8);
    Graph w7 = wheel_graph(7);
    CHECK(w7.order() == 8);
    CHECK(w7.degree(7) == 7);
    for (int i = 0; i < 7; ++i) {
        CHECK(w7.degree(i) == 3);
        CHECK(w7.adjacent(i, (i + 1) % 7));
    }
    CHECK_THROWS_AS(wheel_graph(2), PreconditionError);
}

TEST_CASE("model validation") {
    Graph c5 = graphs::cycle(5);
    InducedMinorModel id{{VertexSet{0}, VertexSet{1}, VertexSet{2}, VertexSet{3}, VertexSet{4}}};
    CHECK(is_model(c5, c5, id));
    Graph p3 = graphs::path(3), k2 = graphs::complete(2);
    CHECK_FALSE(is_model(p3, k2, InducedMinorModel{{VertexSet{0}, VertexSet{2}}}));
    CHECK(is_model(p3, k2, InducedMinorModel{{VertexSet{0, 1}, VertexSet{2}}}));
    CHECK_FALSE(is_model(p3, k2, InducedMinorModel{{VertexSet{0, 2}, VertexSet{1}}}));
    CHECK_FALSE(is_model(p3, k2, InducedMinorModel{{VertexSet{0, 1}, VertexSet{1, 2}}}));
    CHECK_FALSE(is_model(p3, graphs::empty(2), InducedMinorModel{{VertexSet{0}, VertexSet{1}}}));
    CHECK_FALSE(is_model(p3, k2, InducedMinorModel{{VertexSet{0}}}));
}

TEST_CASE("model search examples") {
    auto k4 = find_induced_minor(wheel_graph(3), graphs::complete(4));
    REQUIRE(k4);
    CHECK(is_model(wheel_graph(3), graphs::complete(4), *k4));
    Graph g = w5_minus_spoke();
    CHECK_FALSE(find_induced_minor(g, wheel_graph(5)));
    CHECK_FALSE(oracle::has_induced_minor(g, wheel_graph(5)));
    // A long cycle with a piece attached at l places contains W_l.
    Graph h = cycle_with_apex(8, {0, 2, 4, 6});
    auto w4 = find_induced_minor(h, wheel_graph(4));
    REQUIRE(w4);
    CHECK(is_model(h, wheel_graph(4), *w4));
    CHECK_THROWS_AS(find_induced_minor(graphs::empty(kModelSearchCap + 1), graphs::complete(2)), SizeCapError);
}

TEST_CASE("model search agrees with the labelling oracle") {
    const std::vector<Graph> patterns{graphs::complete(3), graphs::path(4), graphs::cycle(4), graphs::complete(4),
                                      graphs::star(3), wheel_graph(4)};
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n))
            for (const Graph& h : patterns) {
                auto m = find_induced_minor(g, h);
                REQUIRE(m.has_value() == oracle::has_induced_minor(g, h));
                if (m) CHECK(is_model(g, h, *m));
                auto small = find_induced_minor(g, h, true);
                CHECK(small.has_value() == m.has_value());
                if (small) CHECK(is_small_model(g, h, *small));
            }
}

TEST_CASE("minimising a model with a large clique") {
    Graph k10 = graphs::complete(10);
    Graph k2 = graphs::complete(2);
    InducedMinorModel big{{VertexSet::range(9), VertexSet{9}}};
    REQUIRE(is_model(k10, k2, big));
    CHECK_FALSE(is_small_model(k10, k2, big));
    int steps = 0;
    auto shrunk = minimize_model(k10, k2, big, &steps);
    CHECK(is_model(k10, k2, shrunk));
    CHECK(is_small_model(k10, k2, shrunk));
    CHECK(clique_number(k10, model_union(shrunk)) <= 4);
    CHECK(steps > 0);
    InducedMinorModel already{{VertexSet{0}, VertexSet{1}}};
    int none = -1;
    auto same = minimize_model(k10, k2, already, &none);
    CHECK(same.branch == already.branch);
    CHECK(none == 0);
    CHECK_THROWS_AS(minimize_model(k10, k2, InducedMinorModel{{VertexSet{0}, VertexSet{0}}}), PreconditionError);
}

TEST_CASE("wheels from cycles") {
    Graph full = cycle_with_apex(6, {0, 1, 2, 3, 4, 5});
    auto w6 = wheel_from_cycle(full, {0, 1, 2, 3, 4, 5}, VertexSet{6});
    REQUIRE(w6.branch.size() == 7);
    CHECK(is_model(full, wheel_graph(6), w6));
    for (int i = 0; i < 6; ++i) CHECK(w6.branch[i].size() == 1);

    Graph alt = cycle_with_apex(8, {0, 2, 4, 6});
    auto w4 = wheel_from_cycle(alt, {0, 1, 2, 3, 4, 5, 6, 7}, VertexSet{8});
    CHECK(is_model(alt, wheel_graph(4), w4));
    for (int i = 0; i < 4; ++i) CHECK(w4.branch[i].size() == 2);
    CHECK(w4.branch[0] == VertexSet{0, 1});

    auto w3 = contract_wheel_model(w6, 3);
    CHECK(is_model(full, wheel_graph(3), w3));
    CHECK_THROWS_AS(wheel_from_cycle(alt, {0, 1, 2, 3, 4, 5, 6, 7}, VertexSet{0}), PreconditionError);
}

TEST_CASE("longest induced cycle") {
    CHECK(longest_induced_cycle(graphs::cycle(7))->size() == 7);
    CHECK_FALSE(longest_induced_cycle(graphs::path(6)));
    CHECK_FALSE(longest_induced_cycle(graphs::cycle(5), 6));
    auto c = longest_induced_cycle(wheel_graph(6));
    REQUIRE(c);
    CHECK(c->size() == 6);
    CHECK(oracle::induced_cycle(wheel_graph(6), *c));
}

TEST_CASE("vicinity decompositions") {
    Graph c6 = graphs::cycle(6);
    auto plain = cycle_vicinity_decomposition(c6, {0, 1, 2, 3, 4, 5}, 3, 4);
    REQUIRE(plain.vicinity);
    CHECK(plain.vicinity->f2.empty());
    CHECK(check_vicinity(c6, {0, 1, 2, 3, 4, 5}, *plain.vicinity));

    // C6 plus a path 6-7-8 whose end 6 sits on the edge 0-1 (claw-free).
    Graph pendant(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}, {1, 6}, {6, 7}, {7, 8}});
    auto r = cycle_vicinity_decomposition(pendant, {0, 1, 2, 3, 4, 5}, 3, 4);
    REQUIRE(r.vicinity);
    const auto& v = *r.vicinity;
    CHECK(check_tree_decomposition(pendant, v.decomposition));
    CHECK(check_vicinity(pendant, {0, 1, 2, 3, 4, 5}, v));
    REQUIRE(v.f2.size() == 1);
    REQUIRE(v.far_components.size() == 1);
    CHECK(v.far_components[0] == VertexSet{7, 8});
    CHECK(v.decomposition.bags[v.f2[0]] == VertexSet{6, 7, 8});

    Graph apex = cycle_with_apex(5, {0, 1, 2, 3, 4});
    auto m = cycle_vicinity_decomposition(apex, {0, 1, 2, 3, 4}, 3, 5);
    REQUIRE(m.model);
    CHECK(is_model(apex, wheel_graph(5), *m.model));
}

TEST_CASE("vicinity on random claw-free graphs") {
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 3000 && checked < 60; ++seed) {
        Graph g = random_graph(8 + static_cast<int>(seed % 4), 0.5, seed);
        if (!is_k1d_free(g, 3).free) continue;
        auto c = longest_induced_cycle(g, 4);
        if (!c) continue;
        auto r = cycle_vicinity_decomposition(g, *c, 3, 4);
        if (r.model) {
            CHECK(is_model(g, wheel_graph(4), *r.model));
        } else {
            ++checked;
            CHECK(check_vicinity(g, *c, *r.vicinity));
            for (std::size_t i = 0; i < r.vicinity->f2.size(); ++i) {
                const VertexSet j = r.vicinity->far_components[i];
                CHECK(r.vicinity->decomposition.bags[r.vicinity->f2[i]] == closed_neighborhood(g, j));
            }
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("wheel detection") {
    auto w = detect_wheel(wheel_graph(4), 3, 4);
    REQUIRE(w.model);
    CHECK(is_model(wheel_graph(4), wheel_graph(4), *w.model));
    auto k3 = detect_wheel(graphs::complete(3), 3, 3);
    CHECK_FALSE(k3.model);
    REQUIRE(k3.alpha_tw);
    CHECK(*k3.alpha_tw == 1);
    CHECK(check_tree_decomposition(graphs::complete(3), *k3.decomposition));
    CHECK_THROWS_AS(detect_wheel(graphs::star(3), 3, 4), PreconditionError);

    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            if (!is_connected(g) || !oracle::claw_free(g)) continue;
            for (int l = 3; l <= 4; ++l) {
                auto r = detect_wheel(g, 3, l);
                REQUIRE(r.model.has_value() == oracle::has_induced_minor(g, wheel_graph(l)));
                if (r.model) {
                    CHECK(is_model(g, wheel_graph(l), *r.model));
                } else {
                    CHECK(check_tree_decomposition(g, *r.decomposition));
                    CHECK(*r.alpha_tw == alpha_tw_exact(g).value);
                    if (r.cycle) CHECK(check_vicinity(g, *r.cycle, *r.vicinity));
                }
            }
        }
}
