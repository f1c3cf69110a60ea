#include <doctest.h>

#include <set>

#include "barviz/graphs.hpp"
#include "oracles.hpp"

using namespace barviz;
using oracles::error_code_of;

TEST_CASE("transitive tournament") {
    Digraph t4 = transitive_tournament(4);
    CHECK(t4.n == 4);
    CHECK(t4.arcs.size() == 6);
    for (auto [u, v] : t4.arcs) CHECK(u < v);
    CHECK_FALSE(has_consistent_cycle(t4));
    CHECK(sources(t4) == std::vector<int>{0});
    CHECK(sinks(t4) == std::vector<int>{3});
    CHECK(error_code_of([] { transitive_tournament(0); }) == Errc::EmptyGraph);
    CHECK(transitive_tournament(1).arcs.empty());
}

TEST_CASE("directed cycles are detected") {
    Digraph c;
    c.n = 3;
    c.add_arc(0, 1);
    c.add_arc(1, 2);
    c.add_arc(2, 0);
    c.normalize();
    CHECK(has_consistent_cycle(c));
}

TEST_CASE("oriented complete bipartite") {
    Digraph g = oriented_complete_bipartite(2, 3, Direction::A_to_B);
    CHECK(g.n == 5);
    CHECK(g.arcs.size() == 6);
    for (auto [u, v] : g.arcs) {
        CHECK(u < 2);
        CHECK(v >= 2);
    }
    Digraph h = oriented_complete_bipartite(2, 3, Direction::B_to_A);
    for (auto [u, v] : h.arcs) {
        CHECK(u >= 2);
        CHECK(v < 2);
    }
    CHECK(underlying(g).edges == underlying(h).edges);
    CHECK(underlying(g).edges == complete_bipartite_graph(2, 3).edges);
}

TEST_CASE("normalization dedups and rejects junk") {
    Digraph g;
    g.n = 3;
    g.add_arc(1, 0);
    g.add_arc(1, 0);
    g.normalize();
    CHECK(g.arcs.size() == 1);
    Digraph loop;
    loop.n = 2;
    loop.add_arc(1, 1);
    CHECK(error_code_of([&] { loop.normalize(); }) == Errc::Internal);
    Digraph oob;
    oob.n = 1;
    oob.add_arc(0, 3);
    CHECK(error_code_of([&] { oob.normalize(); }) == Errc::Internal);
}

TEST_CASE("cubic triangle-free corpus") {
    auto corpus = cubic_triangle_free_corpus();
    REQUIRE(corpus.size() == 6);
    const char* names[] = {"k33", "cube", "petersen", "franklin", "heawood", "mobius-kantor"};
    int sizes[] = {6, 8, 10, 12, 14, 16};
    for (size_t i = 0; i < corpus.size(); ++i) {
        CHECK(corpus[i].name == names[i]);
        CHECK(corpus[i].g.n == sizes[i]);
        CHECK(static_cast<int>(corpus[i].g.edges.size()) == 3 * sizes[i] / 2);
        CHECK(validate_cubic_triangle_free(corpus[i].g));
        CHECK(is_connected(corpus[i].g));
    }
    CHECK_FALSE(validate_cubic_triangle_free(complete_graph(4)));   // triangles
    CHECK_FALSE(validate_cubic_triangle_free(cycle_graph(5)));      // degree 2
    CHECK_FALSE(validate_cubic_triangle_free(complete_graph(3)));   // both
}

TEST_CASE("named generators agree with explicit constructions") {
    CHECK(cube_graph().edges == lcf_graph(8, {3, -3}).edges);
    CHECK(k33_graph().edges == complete_bipartite_graph(3, 3).edges);
    CHECK(franklin_graph().edges == lcf_graph(12, {5, -5}).edges);
    CHECK(heawood_graph().edges == lcf_graph(14, {5, -5}).edges);
    CHECK(mobius_kantor_graph().edges == lcf_graph(16, {5, -5}).edges);
    // Petersen: 3-regular, girth 5 (no 3- or 4-cycles through brute check).
    Graph p = petersen_graph();
    auto adj = adjacency(p);
    for (int u = 0; u < p.n; ++u) CHECK(adj[u].size() == 3);
    for (auto [u, v] : p.edges)
        for (int w : adj[u])
            if (w != v) {
                CHECK_FALSE(p.has_edge(w, v));  // no triangle
                for (int x : adj[v])
                    if (x != u && x != w) CHECK_FALSE(p.has_edge(w, x));  // no 4-cycle
            }
}

TEST_CASE("counterexample pair") {
    Graph g1 = counterexample_graph(CounterexampleKind::G1);
    Graph gh = counterexample_graph(CounterexampleKind::Ghat);
    CHECK(g1.n == 20);
    CHECK(gh.n == 20);
    CHECK(g1.edges.size() == 27);
    CHECK(gh.edges.size() == 36);
    CHECK(is_spanning_subgraph(g1, gh));
    CHECK_FALSE(is_spanning_subgraph(gh, g1));
    // Ghat: ring plus two hubs joined to the nine even ring vertices.
    auto adj = adjacency(gh);
    CHECK(adj[18].size() == 9);
    CHECK(adj[19].size() == 9);
    CHECK(is_connected(gh));
    CHECK(is_connected(g1));
}

TEST_CASE("connectivity and spanning checks") {
    Graph two;
    two.n = 4;
    two.add_edge(0, 1);
    two.add_edge(2, 3);
    two.normalize();
    CHECK_FALSE(is_connected(two));
    CHECK(is_connected(path_graph(5)));
    Graph sub = path_graph(5);
    CHECK(is_spanning_subgraph(sub, complete_graph(5)));
    Graph small = path_graph(4);
    CHECK_FALSE(is_spanning_subgraph(small, complete_graph(5)));  // vertex counts differ
}
