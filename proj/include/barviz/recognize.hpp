#pragma once

#include <utility>
#include <vector>

#include "barviz/geometry.hpp"
#include "barviz/graphs.hpp"

namespace barviz {

// Rotation system: rotation[v] lists v's neighbors in cyclic order. Faces are
// counted by half-edge tracing; face 0 is recorded as the (arbitrary) outer
// face, since any face of a planar embedding can be chosen outermost.
struct PlanarEmbedding {
    std::vector<std::vector<int>> rotation;
    int face_count = 0;
    int outer_face = -1;
};

bool is_planar(const Graph& g, PlanarEmbedding* emb = nullptr);

std::vector<int> cut_vertices(const Graph& g);

// G plus a new source s wired to every source of G, a new sink t receiving
// an arc from every sink of G, and the arc st. s = n, t = n+1.
struct AugmentedDigraph {
    Digraph g;
    int s = 0, t = 0;
    std::vector<std::pair<int, int>> added;
};
AugmentedDigraph augment_st(const Digraph& g);

enum class Reason { NonPlanar, ConsistentCycle };

struct Recognition {
    bool ok = true;
    Reason reason = Reason::NonPlanar;
};

// True iff the st-augmentation has a planar underlying graph and no directed
// cycle. Planarity is tested first, so the reported reason is deterministic.
Recognition is_bar_visibility_digraph(const Digraph& g);

// One bar per vertex; requires is_bar_visibility_digraph(g).ok, else throws
// NotRepresentable carrying the reason name. Integer coordinates: y is the
// longest-path rank in the augmentation, x-extents come from a compatible
// numbering of the planar dual.
Layout construct_1bar(const Digraph& g);

// True iff g is planar and some planar embedding has every cut vertex on one
// face; equivalently, g plus an apex adjacent to all cut vertices is planar.
bool is_bar_visibility_graph(const Graph& g);

}  // namespace barviz
