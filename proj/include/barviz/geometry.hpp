#pragma once

#include <string>
#include <utility>
#include <vector>

#include "barviz/graphs.hpp"
#include "barviz/rational.hpp"

namespace barviz {

// Closed horizontal segment at height y. Positive length required.
struct Bar {
    int vertex = 0;
    Rational y, x_lo, x_hi;
};

// Bars may touch at endpoints on a level but interiors must be disjoint.
struct Layout {
    int declared_t = 1;
    std::vector<Bar> bars;
};

enum class ViolationKind { ZeroLength, TooManyBars, SameLevelOverlap, BadVertexId };

struct Violation {
    ViolationKind kind{};
    int bar_a = -1, bar_b = -1;
    std::string detail;
};

// Two bars see each other iff an open vertical strip (p,q) of positive width
// fits inside both x-projections and meets no bar at a strictly intermediate
// level. One witness strip is reported per unordered bar pair.
struct VisibilityPair {
    int lower = 0, upper = 0;  // bar indices, y(lower) < y(upper)
    Rational p, q;             // witness strip
};

struct Diff {
    std::vector<std::pair<int, int>> missing, extra;
    bool empty() const { return missing.empty() && extra.empty(); }
};

// Shrink each bar to a node, keep one edge per visible bar pair. euler_ok is
// |E| <= 3|V|-6 whenever |V| >= 3 (vacuously true below).
struct DerivedGraphReport {
    Graph graph;
    bool euler_ok = true;
};

std::vector<Violation> validate_layout(const Layout& l);
void require_valid(const Layout& l);  // throws InvalidLayout on any violation
std::string violation_text(const Violation& v);

std::vector<VisibilityPair> visible_pairs(const Layout& l);

// Arc (x,y) iff some x-bar sees some y-bar above it; same-vertex pairs
// dropped. Vertex count = 1 + max vertex id present (0 when empty).
Digraph realized_digraph(const Layout& l);

// missing = arcs(g) not realized; extra = realized arcs not in g.
Diff verify_layout(const Layout& l, const Digraph& g);

DerivedGraphReport derived_graph(const Layout& l);

// Maximum number of distinct vertices whose bars all cross one open vertical
// strip (0 for empty layouts).
int channel_depth(const Layout& l);

// True iff every vertex present owns an unbounded vertical strip of positive
// width meeting bars of that vertex only.
bool is_displayed(const Layout& l);

// --- placement helpers used by the constructions ---

Layout translated(const Layout& l, const Rational& dx, const Rational& dy);
Layout mirrored_x(const Layout& l);  // x -> -x; realized digraph unchanged

// new_id_of[old_vertex] = new vertex id; every vertex present must be mapped.
Layout relabeled(const Layout& l, const std::vector<int>& new_id_of);

void append_layout(Layout& dst, const Layout& src);
Layout remove_vertices(const Layout& l, const std::vector<int>& victims);

Rational min_x(const Layout& l);  // 0 for empty layouts
Rational max_x(const Layout& l);

// Index of the bar whose x_lo is strictly smaller (resp. x_hi strictly
// larger) than every other bar's; Internal error when absent or tied.
int unique_leftmost_bar(const Layout& l);
int unique_rightmost_bar(const Layout& l);

}  // namespace barviz
