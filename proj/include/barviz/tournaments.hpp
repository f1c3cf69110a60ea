#pragma once

#include <string>
#include <utility>
#include <vector>

#include "barviz/geometry.hpp"
#include "barviz/graphs.hpp"

namespace barviz {

// Spanning paths P_1..P_m of K_2m plus their central edges, which form a
// perfect matching. Vertices are 0-based (the classical labels x_1..x_2m
// map to ids 0..2m-1).
struct PathDecomposition {
    int m = 0;
    std::vector<std::vector<int>> paths;
    std::vector<std::pair<int, int>> central;  // (min,max) endpoint ids of e_i
};
PathDecomposition path_decomposition(int m);

// The m arc-disjoint pieces G_1..G_m whose union is T_n (n = 4m): piece i is
// the oriented path P_i on part A, the analogous path Q_i on part B, and all
// arcs between B and both endpoints of the central edge e_i.
struct QuarterPieces {
    int n = 0, m = 0;
    std::vector<int> part_a, part_b;                // global vertex ids
    std::vector<Digraph> pieces;                    // each over all n ids
    std::vector<std::pair<int, int>> e_endpoints;   // e_i endpoints, global ids
    std::vector<std::vector<int>> a_order, b_order; // P_i / Q_i vertex orders
};
QuarterPieces build_quarter_pieces(int n);

// A layout of T_n with at most ceil(n/4) bars per vertex: 1-bar layouts of
// the pieces for n rounded up to a multiple of 4, placed in x-disjoint
// strips, then bars of surplus vertices deleted.
Layout quarter_layout(int n);

// Given a layout realizing T_n, returns one realizing T_{n+2} with exactly
// one more bar per vertex: old ids shift up by 1, a fresh block right of
// the layout adds the new global source and sink. Lifting an empty layout
// yields a T_2 layout.
Layout lift_layout(const Layout& l);

struct BoundsReport {
    int n = 0, lower = 0, upper = 0;
    std::string lower_source, upper_source;
};

// lower = max over {exact quadratic bound, known-values table, ceil(n/6) for
// n >= 7, 1}; upper = min over {known-values table, ceil(n/4)}. All exact
// integer arithmetic. Sources name the winning bound: Theorem10, Table,
// CeilN6, Trivial, Theorem7.
BoundsReport bounds_Tn(int n);

// Least k with 2k >= 3n-5 - sqrt(7n^2-28n+25), computed exactly; 0 when the
// radicand is negative (n=2) or the bound is nonpositive.
int quadratic_lower_bound(int n);

// The value (3n-5-sqrt(7n^2-28n+25))/2 rendered to `places` decimal digits,
// half-up, by pure integer arithmetic.
std::string quadratic_bound_decimal(int n, int places);

}  // namespace barviz
