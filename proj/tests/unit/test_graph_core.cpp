#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "../support/oracles.hpp"
#include "alphawidth/enumerate.hpp"
#include "alphawidth/errors.hpp"
#include "alphawidth/graph.hpp"
#include "alphawidth/graph_algorithms.hpp"
#include "alphawidth/graph_io.hpp"

using namespace alphawidth;

TEST_CASE("vertex sets") {
    VertexSet s{0, 3, 5};
    CHECK(s.size() == 3);
    CHECK(s.to_string() == "{0,3,5}");
    CHECK(s.lowest() == 0);
    CHECK(s.highest() == 5);
    CHECK((s - VertexSet{3}) == VertexSet{0, 5});
    CHECK(lex_less(VertexSet{0, 1}, VertexSet{0, 1, 2}));
    CHECK(lex_less(VertexSet{0, 1, 2}, VertexSet{0, 2}));
    CHECK(lex_less(VertexSet{0, 2}, VertexSet{1}));
    std::vector<VertexSet> seen;
    for_each_subset_of_size(VertexSet::range(4), 2, [&](VertexSet x) {
        seen.push_back(x);
        return false;
    });
    REQUIRE(seen.size() == 6);
    CHECK(seen.front() == VertexSet{0, 1});
    CHECK(seen.back() == VertexSet{2, 3});
    int count = 0;
    for_each_subset(VertexSet{1, 4, 6}, [&](VertexSet) { ++count; });
    CHECK(count == 8);
    CHECK(VertexSet::range(64).size() == 64);
}

TEST_CASE("graph construction rejects bad input") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), PreconditionError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), PreconditionError);
    CHECK_THROWS_AS(Graph(65, {}), SizeCapError);
    Graph g(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(g.edge_count() == 1);
    CHECK(g.adjacent(1, 0));
}

TEST_CASE("graph6 decoding by hand") {
    // 'D' = 5 vertices; '?' = 000000, '{' = 111100 over pairs (0,1)(0,2)(1,2)(0,3)(1,3)(2,3)(0,4)(1,4)(2,4)(3,4)
    Graph g = parse_graph6("D?{");
    CHECK(g.order() == 5);
    CHECK(g.edges() == std::vector<Edge>{{0, 4}, {1, 4}, {2, 4}, {3, 4}});
    CHECK(parse_graph6("@") == graphs::empty(1));
    CHECK(parse_graph6("A_") == graphs::complete(2));
    CHECK(parse_graph6(">>graph6<<A_\n") == graphs::complete(2));
    CHECK(emit_graph6(graphs::complete(2)) == "A_");
    CHECK(emit_graph6(graphs::empty(1)) == "@");
}

TEST_CASE("graph6 errors name the byte offset") {
    try {
        parse_graph6("D?\x01");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }
    CHECK_THROWS_AS(parse_graph6("D?"), ParseError);
    CHECK_THROWS_AS(parse_graph6("A__"), ParseError);
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
}

TEST_CASE("graph6 against reference decodes") {
    std::ifstream in(ALPHAWIDTH_TEST_DATA "/graph6_reference.txt");
    REQUIRE(in);
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string code, n, edge_text;
        std::getline(fields, code, '\t');
        std::getline(fields, n, '\t');
        std::getline(fields, edge_text);
        std::vector<Edge> expected;
        std::istringstream es(edge_text);
        std::string e;
        while (es >> e) {
            auto dash = e.find('-');
            expected.emplace_back(std::stoi(e.substr(0, dash)), std::stoi(e.substr(dash + 1)));
        }
        Graph g = parse_graph6(code);
        CHECK(g.order() == std::stoi(n));
        CHECK(g.edges() == expected);
        CHECK(emit_graph6(g) == code);
        ++rows;
    }
    CHECK(rows == 100);
}

TEST_CASE("graph6 round trip") {
    for (int n = 0; n <= 7; ++n)
        for (const Graph& g : enumerate_graphs(n)) CHECK(parse_graph6(emit_graph6(g)) == g);
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        Graph g = random_graph(1 + static_cast<int>(seed % 64), 0.4, seed);
        CHECK(parse_graph6(emit_graph6(g)) == g);
    }
}

TEST_CASE("dimacs") {
    CHECK(parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n") == graphs::complete(3));
    CHECK(parse_dimacs("c comment\np edge 2 0\n") == graphs::empty(2));
    CHECK_THROWS_AS(parse_dimacs("p edge 3 1\ne 1 4\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p edge 3 1\ne 2 2\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("e 1 2\n"), ParseError);
    Graph c5 = graphs::cycle(5);
    CHECK(parse_dimacs(emit_dimacs(c5)) == c5);
    CHECK(parse_graph_text("p edge 2 1\ne 1 2\n") == graphs::complete(2));
    CHECK(parse_graph_text("A_\n") == graphs::complete(2));
    const std::string c_first = emit_graph6(graphs::cycle(36));
    REQUIRE(c_first.front() == 'c');
    CHECK(parse_graph_text(c_first + "\n") == graphs::cycle(36));
}

TEST_CASE("neighbourhoods and components") {
    Graph p3 = graphs::path(3);
    CHECK(open_neighborhood(p3, VertexSet{1}) == VertexSet{0, 2});
    CHECK(open_neighborhood(p3, p3.vertices()).empty());
    CHECK(closed_neighborhood(graphs::cycle(5), VertexSet{0}) == VertexSet{4, 0, 1});
    Graph p4 = graphs::path(4);
    CHECK(components(p4, VertexSet{0, 1, 3}) == std::vector<VertexSet>{VertexSet{0, 1}, VertexSet{3}});
    CHECK(components(p4, p4.vertices()) == std::vector<VertexSet>{p4.vertices()});
    CHECK(components(graphs::empty(4), VertexSet::range(4)).size() == 4);
    CHECK(components(p4, VertexSet{}).empty());
}

TEST_CASE("components form a partition") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Graph g = random_graph(12, 0.15, seed);
        VertexSet x(seed * 0x9e3779b97f4a7c15ULL & 0xfff);
        auto comps = components(g, x);
        VertexSet seen;
        for (VertexSet c : comps) {
            CHECK(!c.intersects(seen));
            CHECK(oracle::connected(g, c.bits()));
            seen |= c;
            for (VertexSet d : comps)
                if (!(c == d)) CHECK(!open_neighborhood(g, c).intersects(d));
        }
        CHECK(seen == x);
    }
}

TEST_CASE("independence and clique numbers") {
    CHECK(independence_number(graphs::complete(5)) == 1);
    CHECK(independence_number(graphs::cycle(5)) == 2);
    CHECK(independence_number(graphs::empty(0)) == 0);
    CHECK(clique_number(graphs::complete(5)) == 5);
    CHECK(clique_number(graphs::cycle(5)) == 2);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const int n = 4 + static_cast<int>(seed % 13);
        Graph g = random_graph(n, 0.2 + 0.1 * static_cast<double>(seed % 6), seed);
        CHECK(independence_number(g) == oracle::alpha(g, oracle::all(g)));
        CHECK(clique_number(g) == oracle::omega(g, oracle::all(g)));
        CHECK(is_independent(g, maximum_independent_set(g, g.vertices())));
        CHECK(is_clique(g, maximum_clique(g, g.vertices())));
    }
    for (int n = 1; n <= 8; ++n)
        for (const Graph& g : enumerate_graphs(n)) REQUIRE(independence_number(g) == oracle::alpha(g, oracle::all(g)));
}

TEST_CASE("independence number is monotone") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        Graph g = random_graph(14, 0.3, seed);
        VertexSet x(seed * 0x2545f4914f6cdd1dULL & 0x3fff);
        VertexSet sub(x.bits() & (seed * 0x9e3779b97f4a7c15ULL));
        CHECK(independence_number(g, sub) <= independence_number(g, x));
    }
}

TEST_CASE("K1d-freeness") {
    CHECK(is_k1d_free(graphs::complete(6), 2).free);
    auto star = is_k1d_free(graphs::star(3), 3);
    CHECK_FALSE(star.free);
    REQUIRE(star.witness);
    CHECK(star.witness->center == 0);
    CHECK(star.witness->leaves == VertexSet{1, 2, 3});
    CHECK(is_k1d_free(graphs::cycle(6), 3).free);
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : enumerate_graphs(n))
            for (int d = 1; d <= 4; ++d) {
                auto r = is_k1d_free(g, d);
                REQUIRE(r.free == !contains_induced(g, graphs::star(d)).has_value());
                if (!r.free) {
                    CHECK(r.witness->leaves.size() == d);
                    CHECK(is_independent(g, r.witness->leaves));
                    CHECK(r.witness->leaves.is_subset_of(g.neighbors(r.witness->center)));
                }
            }
}

TEST_CASE("chordality") {
    CHECK(is_chordal(graphs::path(6)));
    CHECK(is_chordal(graphs::star(5)));
    CHECK_FALSE(is_chordal(graphs::cycle(4)));
    CHECK(is_chordal(graphs::complete(6)));
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : enumerate_graphs(n)) REQUIRE(is_chordal(g) == oracle::chordal(g));
}

TEST_CASE("induced subgraphs and quasi-threshold graphs") {
    CHECK_FALSE(contains_induced(graphs::complete(3), graphs::path(3)));
    auto id = contains_induced(graphs::cycle(4), graphs::cycle(4));
    REQUIRE(id);
    CHECK(*id == std::vector<int>{0, 1, 2, 3});
    CHECK(contains_induced(graphs::cycle(5), graphs::path(4)));
    CHECK(is_quasi_threshold(graphs::complete(5)));
    CHECK_FALSE(is_quasi_threshold(graphs::path(4)));
    CHECK_FALSE(is_quasi_threshold(graphs::cycle(4)));
    CHECK(is_quasi_threshold(graphs::star(4)));
}

TEST_CASE("induced paths and cycles, shortest paths") {
    Graph c6 = graphs::cycle(6);
    CHECK(is_induced_path(c6, {0, 1, 2, 3}));
    CHECK_FALSE(is_induced_path(c6, {0, 1, 2, 3, 4, 5}));
    CHECK(is_induced_cycle(c6, {0, 1, 2, 3, 4, 5}));
    CHECK_FALSE(is_induced_cycle(graphs::complete(4), {0, 1, 2, 3}));
    auto p = shortest_path_into(c6, 0, VertexSet{3}, c6.vertices());
    REQUIRE(p);
    CHECK(*p == std::vector<int>{0, 1, 2, 3});
    CHECK_FALSE(shortest_path_into(c6, 0, VertexSet{3}, VertexSet{0, 1, 3}));
}

TEST_CASE("lex bfs gives perfect elimination orders on chordal graphs") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            auto order = lex_bfs(g);
            CHECK(order.size() == static_cast<std::size_t>(n));
            std::reverse(order.begin(), order.end());
            CHECK(is_perfect_elimination_order(g, order) == oracle::chordal(g));
        }
}

TEST_CASE("sparse graphs") {
    SparseGraph p = graphs::sparse_path(100);
    CHECK(p.order() == 100);
    CHECK(p.adjacent(41, 42));
    CHECK_FALSE(p.adjacent(41, 43));
    CHECK(p.edges().size() == 99);
    CHECK(p.induced({3, 4, 5}) == graphs::path(3));
}
