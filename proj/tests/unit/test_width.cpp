#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "../support/oracles.hpp"
#include "alphawidth/enumerate.hpp"
#include "alphawidth/errors.hpp"
#include "alphawidth/graph_algorithms.hpp"
#include "alphawidth/tree_decomposition.hpp"
#include "alphawidth/width.hpp"

using namespace alphawidth;

namespace {

TreeDecomposition two_bags(VertexSet a, VertexSet b) {
    TreeDecomposition td;
    td.add_node(a);
    td.add_node(b);
    td.add_edge(0, 1);
    return td;
}

}  // namespace

TEST_CASE("tree decomposition axioms") {
    Graph p3 = graphs::path(3);
    TreeDecomposition single;
    single.add_node(p3.vertices());
    CHECK(check_tree_decomposition(p3, single));
    CHECK(check_tree_decomposition(p3, two_bags(VertexSet{0, 1}, VertexSet{1, 2})));
    auto bad = check_tree_decomposition(p3, two_bags(VertexSet{0, 1}, VertexSet{2}));
    CHECK_FALSE(bad);
    CHECK(bad.axiom == "edge");

    TreeDecomposition gap;
    gap.add_node(VertexSet{0, 1});
    gap.add_node(VertexSet{1, 2});
    gap.add_node(VertexSet{0, 2});
    gap.add_edge(0, 1);
    gap.add_edge(1, 2);
    CHECK(check_tree_decomposition(graphs::complete(3), gap).axiom == "subtree");

    TreeDecomposition cyc = gap;
    cyc.add_edge(2, 0);
    CHECK(check_tree_decomposition(graphs::complete(3), cyc).axiom == "tree");

    CHECK(check_tree_decomposition(p3, two_bags(VertexSet{0, 1}, VertexSet{1})).axiom == "cover");
}

TEST_CASE("alpha-width") {
    TreeDecomposition k5;
    k5.add_node(VertexSet::range(5));
    CHECK(alpha_width(graphs::complete(5), k5) == 1);
    CHECK(alpha_width(graphs::cycle(5), k5) == 2);
    CHECK(alpha_width(graphs::path(3), two_bags(VertexSet{0, 1}, VertexSet{1, 2})) == 1);
    CHECK_THROWS_AS(alpha_width(graphs::path(3), two_bags(VertexSet{0, 1}, VertexSet{2})), PreconditionError);
}

TEST_CASE("exact alpha-tw on small families") {
    CHECK(alpha_tw_exact(graphs::cycle(6)).value == 2);
    CHECK(oracle::alpha_tw(graphs::cycle(6)) == 2);
    CHECK(alpha_tw_exact(graphs::empty(5)).value == 1);
    CHECK(alpha_tw_exact(graphs::path(9)).value == 1);
    CHECK(alpha_tw_exact(graphs::complete(7)).value == 1);
    CHECK(alpha_tw_exact(graphs::complete_bipartite(3, 3)).value == 3);
    CHECK(treewidth_exact(graphs::complete(6)).value == 5);
    CHECK(treewidth_exact(graphs::cycle(8)).value == 2);
    CHECK(treewidth_exact(graphs::empty(0)).value == -1);
    CHECK_THROWS_AS(alpha_tw_exact(graphs::empty(kExactWidthCap + 1)), SizeCapError);
}

TEST_CASE("exact alpha-tw and treewidth agree with the ordering oracle") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            auto atw = alpha_tw_exact(g);
            auto tw = treewidth_exact(g);
            REQUIRE(atw.value == oracle::alpha_tw(g));
            REQUIRE(tw.value == oracle::treewidth(g));
            CHECK(check_tree_decomposition(g, atw.decomposition));
            CHECK(alpha_width(g, atw.decomposition) == atw.value);
            CHECK(check_tree_decomposition(g, tw.decomposition));
            CHECK(tw.decomposition.width() == tw.value);
        }
}

TEST_CASE("witness decompositions on random graphs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = random_graph(8 + static_cast<int>(seed % 7), 0.35, seed);
        auto r = alpha_tw_exact(g);
        CHECK(check_tree_decomposition(g, r.decomposition));
        CHECK(alpha_width(g, r.decomposition) == r.value);
        auto from_order = decomposition_from_order(g, r.order);
        CHECK(check_tree_decomposition(g, from_order));
        CHECK(alpha_width(g, from_order) == r.value);
    }
}

TEST_CASE("balanced separators") {
    Graph p5 = graphs::path(5);
    CHECK(balanced_separator(p5, p5.vertices(), 1) == VertexSet{2});
    CHECK(oracle::balanced(p5, p5.vertices().bits(), VertexSet{2}.bits()));
    CHECK(balanced_separator(p5, VertexSet{}, 1) == VertexSet{});

    // The whole of K2 separates vacuously with alpha 1; see the decisions ledger.
    Graph k2 = graphs::complete(2);
    CHECK(balanced_separator(k2, k2.vertices(), 1) == VertexSet{0, 1});
    CHECK(oracle::has_balanced_separator(k2, 0b11, 1));
    CHECK_FALSE(balanced_separator(k2, k2.vertices(), 0));
    CHECK_FALSE(oracle::has_balanced_separator(k2, 0b11, 0));
}

TEST_CASE("balanced separator existence matches the subset oracle") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n))
            for (std::uint64_t x = 0; x < (1ULL << n); ++x)
                for (int k = 0; k <= 2; ++k) {
                    auto s = balanced_separator(g, VertexSet(x), k);
                    REQUIRE(s.has_value() == oracle::has_balanced_separator(g, x, k));
                    if (s) {
                        CHECK(independence_number(g, *s) <= k);
                        CHECK(oracle::balanced(g, x, s->bits()));
                        CHECK(is_balanced_separator(g, VertexSet(x), *s));
                    }
                }
}

TEST_CASE("k-alpha-linked sets") {
    for (int n = 1; n <= 3; ++n) CHECK_FALSE(find_k_alpha_linked(graphs::empty(n), 1));
    // C4 at k = 1: recorded regression fixture, checked against the oracle.
    Graph c4 = graphs::cycle(4);
    auto x = find_k_alpha_linked(c4, 1);
    bool any = false;
    for (std::uint64_t m = 0; m < 16; ++m) any = any || oracle::is_linked(c4, m, 1);
    CHECK(x.has_value() == any);
    CHECK_FALSE(x.has_value());

    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n))
            for (int k = 0; k <= 2; ++k) {
                int best = -1;
                for (std::uint64_t m = 0; m < (1ULL << n); ++m)
                    if (oracle::is_linked(g, m, k)) best = std::max(best, oracle::alpha(g, m));
                auto found = find_k_alpha_linked(g, k);
                REQUIRE(found.has_value() == (best >= 0));
                if (found) {
                    CHECK(oracle::is_linked(g, found->bits(), k));
                    CHECK(independence_number(g, *found) == best);
                }
            }
}

TEST_CASE("heavy components") {
    Graph p3 = graphs::path(3);
    CHECK_FALSE(heavy_component(p3, p3.vertices(), VertexSet{1}));
    Graph k4 = graphs::complete(4);
    CHECK(heavy_component(k4, k4.vertices(), VertexSet{}) == k4.vertices());
    // Two heavy components are possible when X is not linked.
    Graph two = graphs::empty(2);
    CHECK(heavy_components(two, VertexSet{0}, VertexSet{}).size() == 1);
    CHECK(heavy_components(graphs::disjoint_union(graphs::complete(2), graphs::complete(2)), VertexSet{0, 2},
                           VertexSet{})
              .size() == 0);

    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n))
            for (int k = 0; k <= 1; ++k) {
                auto x = find_k_alpha_linked(g, k);
                if (!x) continue;
                for_each_subset(g.vertices(), [&](VertexSet s) {
                    if (independence_number(g, s) <= k) CHECK(heavy_components(g, *x, s).size() == 1);
                });
            }
}

TEST_CASE("refinement on small graphs") {
    Graph k6 = graphs::complete(6);
    auto r = refine_decomposition(k6, 1);
    REQUIRE(r.decomposition);
    CHECK(check_tree_decomposition(k6, *r.decomposition));
    CHECK(alpha_width(k6, *r.decomposition) <= 1);

    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : enumerate_graphs(n))
            for (int k = 1; k <= 2; ++k) {
                auto res = refine_decomposition(g, k);
                REQUIRE(res.decomposition.has_value() != res.linked_set.has_value());
                if (res.decomposition) {
                    REQUIRE(check_tree_decomposition(g, *res.decomposition));
                    REQUIRE(alpha_width(g, *res.decomposition) <= 2 * k + 1);
                    if (k == 1 && is_chordal(g)) CHECK(alpha_width(g, *res.decomposition) <= 3);
                } else {
                    REQUIRE(oracle::is_linked(g, res.linked_set->bits(), k));
                }
                const auto& h = res.stats.treated_history;
                for (std::size_t i = 1; i < h.size(); ++i) REQUIRE(h[i] > h[i - 1]);
            }
}

TEST_CASE("refinement on larger random graphs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = random_graph(10 + static_cast<int>(seed % 5), 0.3, seed);
        auto res = refine_decomposition(g, 1);
        if (res.decomposition) {
            CHECK(check_tree_decomposition(g, *res.decomposition));
            CHECK(alpha_width(g, *res.decomposition) <= 3);
        } else {
            CHECK_FALSE(balanced_separator(g, *res.linked_set, 1));
        }
    }
}

TEST_CASE("bound functions") {
    Bounds b;
    b.d = 3;
    b.l = 5;
    b.f_korhonen = [](std::uint64_t delta, std::uint64_t grid) { return delta * grid; };
    CHECK(b.max_degree() == 5);
    CHECK(b.f_vicinity() == 3ULL * 4 * 25);
    CHECK(b.f_wheel() == 4 * b.f_vicinity() + 1);
    b.f_korhonen = [](std::uint64_t, std::uint64_t) { return ~std::uint64_t{0}; };
    CHECK_THROWS(b.f_wheel());
}
