#pragma once

#include <utility>
#include <vector>

#include "barviz/geometry.hpp"
#include "barviz/graphs.hpp"
#include "barviz/rational.hpp"

namespace barviz {

// Closed intervals, at most t per vertex, same-vertex intervals pairwise
// disjoint. A vertex may end up with no intervals after pruning (it is then
// isolated in the realized graph).
struct IntervalRep {
    int t = 1;
    std::vector<std::vector<std::pair<Rational, Rational>>> per_vertex;
};

// Edge uv iff some u-interval meets some v-interval; point-touch counts.
Graph realized_interval_graph(const IntervalRep& r);

struct DepthProfile {
    int depth = 0;
    Rational witness;  // a point attaining the maximum (an interval endpoint)
};
DepthProfile depth(const IntervalRep& r);

// Edits r so its realized graph becomes h_prime, given realized(r) = h,
// h triangle-free, and h_prime a spanning subgraph of h. Two rules per
// unwanted intersection: delete the contained interval, or shrink a partial
// overlap from both sides. Interval counts never increase and no edge is
// ever added at any intermediate step (checked).
IntervalRep prune_to_subgraph(const IntervalRep& r, const Graph& h, const Graph& h_prime);

// Converts a depth-<=2 interval representation of underlying(d), where d is
// bipartite with every arc from the source part to the sink part, into a
// two-level layout: sources (and isolated vertices) at level 0, sinks at
// level 1. Every interval is widened by a quarter of the minimum positive
// endpoint gap so point-touches become positive-width overlaps; that keeps
// adjacency, per-vertex disjointness and depth <= 2 intact.
Layout interval_to_bars(const IntervalRep& r, const Digraph& d);

// The fixed 2-interval template realizing K_5,3 with depth 2, exposed for
// the test suite. Part A (5-side) = ids 0..4, part B (3-side) = ids 5..7.
IntervalRep k53_template();

// Displayed 2-bar layout of the one-way oriented K_5,3 (parts as in
// oriented_complete_bipartite(5,3,orient)). u must come from the sink part
// and v from the source part; the strictly leftmost bar belongs to u and
// the strictly rightmost to v, swapped when mirror = true.
Layout k53_gadget(int u, int v, Direction orient, bool mirror);

}  // namespace barviz
