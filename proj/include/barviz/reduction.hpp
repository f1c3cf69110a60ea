#pragma once

#include <optional>
#include <vector>

#include "barviz/geometry.hpp"
#include "barviz/graphs.hpp"

namespace barviz {

// The hardness-reduction instance built from a cubic triangle-free H on
// vertices 0..n-1: three oriented K_5,3 copies H1,H2,H3, one copy M_v per
// vertex, plus the wiring arcs. Copies are oriented with local ids 0..4 as
// sources and 5..7 as sinks; named vertices use fixed local slots.
struct TestDigraph {
    Digraph g;               // the full instance
    Graph h;                 // source graph
    Digraph seed;            // the orientation of h used for its arcs
    int z = 0;               // the distinguished H-vertex
    int h1 = 0, h2 = 0, h3 = 0;  // base ids of the three named copies
    std::vector<int> m_base;     // base id of M_v per H-vertex v

    int s1() const { return h1 + 5; }            // a sink of H1
    int t2() const { return h2 + 0; }            // a source of H2
    int s2() const { return h2 + 5; }            // a sink of H2
    int t3() const { return h3 + 0; }            // a source of H3
    int vprime(int v) const { return m_base[static_cast<size_t>(v)] + 0; }
};

// Orient every edge from lower to higher id.
Digraph default_orientation(const Graph& h);

TestDigraph build_test_digraph(const Graph& h, int z, const Digraph& seed);

struct HamCycle {
    std::vector<int> verts;  // cyclic order, each vertex once
};

// Exhaustive backtracking with a cut-off on unreachable/forced vertices.
// Vertex budget: 24 by default, overridable via BARVIZ_SIZE_CAP.
std::optional<HamCycle> hamiltonian_cycle(const Graph& h);

int size_cap();

// The forward certificate: a 2-bar layout of t.g assembled from a staircase
// of H1,H2,H3, a displayed drawing of the Hamiltonian cycle with M_z on its
// left, and one fresh x-range per matching edge.
Layout two_bar_layout(const TestDigraph& t, const HamCycle& c);

// Per vertex v of g: a central oriented K_{t^2+t-1,t+1} joined to v and to
// two side copies, the two central attachment points being adjacent.
// Connector arcs run from the lower global id to the higher.
Digraph lift_gadget(const Digraph& g, int t);

}  // namespace barviz
