#pragma once

#include <string>
#include <utility>
#include <vector>

#include "barviz/errors.hpp"

namespace barviz {

// Vertices are dense ids 0..n-1. Arc/edge lists are kept sorted and unique;
// builders call normalize() after batch insertion.
struct Digraph {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;  // ordered (u,v), no loops

    void add_arc(int u, int v) { arcs.emplace_back(u, v); }
    void normalize();
    bool has_arc(int u, int v) const;
};

struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // stored (min,max), no loops

    void add_edge(int u, int v);
    void normalize();
    bool has_edge(int u, int v) const;
};

enum class Direction { A_to_B, B_to_A };
enum class CounterexampleKind { G1, Ghat };

Graph underlying(const Digraph& g);

// Arcs (i,j) for all i < j.
Digraph transitive_tournament(int n);

// Parts A = 0..m-1 and B = m..m+n-1; every edge oriented per `direction`.
Digraph oriented_complete_bipartite(int m, int n, Direction direction);

// G1: K_2,9 plus one pendant per 9-side vertex. Ghat: C_18 plus two hubs
// adjacent to all even cycle vertices. Vertex identification: the 9-side of
// G1 is the even cycle ids 0,2,..,16, the pendant of 2i is 2i+1, hubs are
// 18 and 19 in both graphs, making G1 a spanning subgraph of Ghat.
Graph counterexample_graph(CounterexampleKind kind);

// True iff the digraph contains a directed cycle.
bool has_consistent_cycle(const Digraph& g);

bool validate_cubic_triangle_free(const Graph& h);

std::vector<std::vector<int>> adjacency(const Graph& g);
std::vector<std::vector<int>> out_adjacency(const Digraph& g);
std::vector<std::vector<int>> in_adjacency(const Digraph& g);
std::vector<int> sources(const Digraph& g);  // in-degree 0
std::vector<int> sinks(const Digraph& g);    // out-degree 0
bool is_connected(const Graph& g);
bool is_spanning_subgraph(const Graph& sub, const Graph& super);

Graph complete_graph(int n);
Graph complete_bipartite_graph(int m, int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

// Hamiltonian cycle 0..n-1 plus chords i -- (i + pattern[i mod k]) mod n.
Graph lcf_graph(int n, const std::vector<int>& pattern);

Graph k33_graph();
Graph cube_graph();      // Q3
Graph petersen_graph();  // not an LCF graph; built explicitly
Graph franklin_graph();
Graph heawood_graph();
Graph mobius_kantor_graph();

struct NamedGraph {
    std::string name;
    Graph g;
};
// The cubic triangle-free graphs used throughout the test suite, by size:
// K33 (6), cube (8), Petersen (10), Franklin (12), Heawood (14),
// Mobius-Kantor (16).
std::vector<NamedGraph> cubic_triangle_free_corpus();

}  // namespace barviz
