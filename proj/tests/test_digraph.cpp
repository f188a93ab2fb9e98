#include "compdi/digraph.hpp"
#include "compdi/fixtures.hpp"
#include "compdi/oracle.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace compdi;

TEST_SUITE("digraph") {

TEST_CASE("load_digraph reads the edge-list format") {
    Digraph d = load_digraph_from_string("4 6\n0 1\n1 0\n0 2\n2 3\n3 2\n1 3");
    CHECK(d.size() == 4);
    CHECK(d.arc_count() == 6);
    CHECK(d.has_arc(0, 1));
    CHECK(d.has_arc(1, 0));
    CHECK(d.has_arc(1, 3));
    CHECK_FALSE(d.has_arc(3, 1));
    CHECK(d.symmetric_arc(2, 3));
}

TEST_CASE("duplicate arc lines are idempotent") {
    Digraph d = load_digraph_from_string("3 3\n0 1\n0 1\n1 2\n");
    CHECK(d.arc_count() == 2);
}

TEST_CASE("parse errors name the line") {
    auto message = [](std::string_view text) {
        try {
            load_digraph_from_string(text);
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message("2 1\n0 0") == "loop arc at line 2");
    CHECK(message("2 1\n0 5") == "vertex id 5 out of range at line 2");
    CHECK(message("2 1\n0 x") == "malformed arc line at line 2");
    CHECK(message("2\n") == "malformed header at line 1");
    CHECK(message("3 2\n0 1\n") == "expected 2 arc lines, found 1");
    CHECK(message("3 1\n0 1\n1 2\n") == "more arc lines than declared at line 3");
    CHECK(message("# name 7 q\n3 0\n") == "vertex id 7 out of range at line 1");
    CHECK(message("# name 0 q\n# name 1 q\n3 0\n") == "duplicate label 'q' at line 2");
    CHECK(message("") == "missing header line");
}

TEST_CASE("name bindings label vertices") {
    Digraph d = load_digraph_from_string("# name 0 a\n# a comment\n\n3 1\n# name 2 c\n0 2\n");
    CHECK(d.label(0) == "a");
    CHECK(d.label(1) == "1");
    CHECK(d.label(2) == "c");
    CHECK(d.find_vertex("c") == Vertex{2});
    CHECK(d.find_vertex("1") == Vertex{1});
    CHECK_FALSE(d.find_vertex("b").has_value());
}

TEST_CASE("constructor rejects loops and out of range ids") {
    CHECK_THROWS_AS(Digraph(2, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Digraph(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("fig4 transcription") {
    Digraph d = fixtures::fig4();
    CHECK(d.size() == 4);
    CHECK(d.arc_count() == 8);
    CHECK(is_semicomplete(d));
    CHECK_FALSE(is_symmetric(d));
    Graph u = underlying_graph(d);
    CHECK(u.edge_count() == 6);
    CHECK(u.is_complete());
}

TEST_CASE("fig1 transcription") {
    Digraph d = fixtures::fig1();
    CHECK(d.size() == 12);
    CHECK(d.arc_count() == 16);
    CHECK_FALSE(is_semicomplete(d));
    // vertices drawn at the far ends of the top row are not adjacent
    CHECK_FALSE(d.adjacent(0, 4));
    CHECK(underlying_graph(d).edge_count() == 16);
}

TEST_CASE("fig3 duplicate arc collapses") {
    Digraph d = fixtures::fig3();
    CHECK(d.size() == 12);
    CHECK(d.arc_count() == 27);
    CHECK(fixtures::verify().empty());
}

TEST_CASE("semicomplete and symmetric edge cases") {
    CHECK(is_semicomplete(Digraph(1, {})));
    CHECK(is_semicomplete(Digraph(0, {})));
    CHECK(is_symmetric(Digraph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}})));
    CHECK(is_symmetric(Digraph(3, {})));
    CHECK_FALSE(is_semicomplete(Digraph(3, {{0, 1}, {1, 2}})));
    Graph g = underlying_graph(test::single_arc());
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(1, 0));
}

TEST_CASE("ordering must be a permutation") {
    CHECK_THROWS_AS(Ordering({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Ordering({0, 3}), std::invalid_argument);
    Ordering o({2, 0, 1});
    CHECK(o.position(2) == 0);
    CHECK(o.precedes(0, 1));
    CHECK_FALSE(o.precedes(1, 2));
}

TEST_CASE("topological order breaks ties by smallest id") {
    Digraph g(4, {{3, 1}, {2, 1}});
    auto o = topological_order(g);
    REQUIRE(o);
    CHECK(o->perm() == std::vector<Vertex>{0, 2, 3, 1});
    CHECK_FALSE(topological_order(test::three_cycle()).has_value());
}

TEST_CASE("properties: underlying graph, semicompleteness, serialization round trip") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + trial % 9;
        Digraph d = random_digraph(n, trial % 3 == 0, rng);
        std::size_t adjacent_pairs = 0;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) adjacent_pairs += d.adjacent(u, v) ? 1 : 0;
        Graph g = underlying_graph(d);
        CHECK(g.edge_count() == adjacent_pairs);
        CHECK(is_semicomplete(d) == g.is_complete());

        Digraph back = load_digraph_from_string(to_edge_list(d));
        CHECK(back.size() == d.size());
        CHECK(back.arcs() == d.arcs());
    }
    Digraph f = fixtures::fig3();
    Digraph back = load_digraph_from_string(to_edge_list(f));
    CHECK(back.arcs() == f.arcs());
    CHECK(back.labels() == f.labels());
}

}
