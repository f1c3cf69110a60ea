#include "barviz/reduction.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <utility>
#include <vector>

#include "barviz/errors.hpp"
#include "barviz/intervals.hpp"

namespace barviz {

Digraph default_orientation(const Graph& h) {
    Digraph d;
    d.n = h.n;
    for (auto [u, v] : h.edges) d.add_arc(std::min(u, v), std::max(u, v));
    d.normalize();
    return d;
}

TestDigraph build_test_digraph(const Graph& h, int z, const Digraph& seed) {
    Graph hh = h;
    hh.normalize();
    if (!validate_cubic_triangle_free(hh))
        fail(Errc::NotCubicTriangleFree, "source graph must be 3-regular and triangle-free");
    if (z < 0 || z >= hh.n) fail(Errc::InvalidInput, "distinguished vertex outside the graph");
    Digraph sd = seed;
    sd.normalize();
    if (sd.n != hh.n || static_cast<int>(sd.arcs.size()) != static_cast<int>(hh.edges.size()))
        fail(Errc::BadOrientation, "orientation does not match the edge set");
    Graph su = underlying(sd);
    su.normalize();
    if (su.edges != hh.edges) fail(Errc::BadOrientation, "orientation does not match the edge set");

    TestDigraph t;
    t.h = hh;
    t.seed = sd;
    t.z = z;
    int n = hh.n;
    t.h1 = n;
    t.h2 = n + 8;
    t.h3 = n + 16;
    for (int v = 0; v < n; ++v) t.m_base.push_back(n + 24 + 8 * v);
    t.g.n = 9 * n + 24;

    for (auto [u, v] : sd.arcs) t.g.add_arc(u, v);
    // Every copy is the one-way K_5,3 on local ids 0..7: 0..4 -> 5..7.
    auto add_copy = [&](int base) {
        for (int i = 0; i < 5; ++i)
            for (int j = 5; j < 8; ++j) t.g.add_arc(base + i, base + j);
    };
    add_copy(t.h1);
    add_copy(t.h2);
    add_copy(t.h3);
    for (int v = 0; v < n; ++v) add_copy(t.m_base[static_cast<size_t>(v)]);

    t.g.add_arc(t.s1(), t.t2());
    t.g.add_arc(t.s2(), t.t3());
    for (int v = 0; v < n; ++v) {
        t.g.add_arc(v, t.vprime(v));
        t.g.add_arc(t.s1(), v);
        t.g.add_arc(v, t.t2());
    }
    for (int i = 0; i < 8; ++i) {
        if (t.h2 + i != t.t2()) t.g.add_arc(z, t.h2 + i);
        t.g.add_arc(z, t.h3 + i);
    }
    for (int i = 0; i < 8; ++i) {
        int x = t.m_base[static_cast<size_t>(z)] + i;
        t.g.add_arc(t.s1(), x);
        t.g.add_arc(x, t.t2());
    }
    t.g.normalize();

    if (t.g.n != 9 * n + 24 || static_cast<long long>(t.g.arcs.size()) !=
                                   39LL * n / 2 + 78)
        fail(Errc::Internal, "instance size identities violated");
    return t;
}

int size_cap() {
    if (const char* env = std::getenv("BARVIZ_SIZE_CAP")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 24;
}

std::optional<HamCycle> hamiltonian_cycle(const Graph& h) {
    Graph g = h;
    g.normalize();
    if (g.n > size_cap()) fail(Errc::SizeLimit, "graph exceeds the search cap");
    if (g.n < 3) return std::nullopt;
    std::vector<std::vector<int>> adj = adjacency(g);
    std::vector<char> used(static_cast<size_t>(g.n), 0);
    std::vector<int> path{0};
    used[0] = 1;

    // Every unvisited vertex must keep two usable connections (unvisited
    // neighbors, the path head, or the start) or no extension can succeed.
    auto prune_ok = [&](int head) {
        for (int v = 0; v < g.n; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            int avail = 0;
            for (int w : adj[static_cast<size_t>(v)])
                if (!used[static_cast<size_t>(w)] || w == head || w == 0) ++avail;
            if (avail < 2) return false;
        }
        return true;
    };

    auto dfs = [&](auto&& self, int head) -> bool {
        if (static_cast<int>(path.size()) == g.n)
            return g.has_edge(head, 0);
        if (!prune_ok(head)) return false;
        for (int w : adj[static_cast<size_t>(head)]) {
            if (used[static_cast<size_t>(w)]) continue;
            used[static_cast<size_t>(w)] = 1;
            path.push_back(w);
            if (self(self, w)) return true;
            path.pop_back();
            used[static_cast<size_t>(w)] = 0;
        }
        return false;
    };
    if (!dfs(dfs, 0)) return std::nullopt;
    return HamCycle{path};
}

namespace {

// Geometry helpers for the assembly below. All boxes are instances of the
// one fixed gadget, translated into place and relabeled to global ids.
struct PlacedBox {
    Layout l;
    Rational left, right;
};

PlacedBox place_box(int base, bool mirror, const Rational& x_start, const Rational& y_bottom) {
    Layout box = k53_gadget(5, 0, Direction::A_to_B, mirror);
    std::vector<int> ids(8);
    for (int i = 0; i < 8; ++i) ids[static_cast<size_t>(i)] = base + i;
    box = relabeled(box, ids);
    box = translated(box, x_start - min_x(box), y_bottom);
    return {box, min_x(box), max_x(box)};
}

// Stretch the unique leftmost bar of `box` leftwards to new_lo; the bar must
// belong to `expect_vertex`.
void extend_left(Layout& box, int expect_vertex, const Rational& new_lo) {
    int idx = unique_leftmost_bar(box);
    Bar& b = box.bars[static_cast<size_t>(idx)];
    if (b.vertex != expect_vertex) fail(Errc::Internal, "left flank owned by the wrong vertex");
    if (new_lo >= b.x_lo) fail(Errc::Internal, "leftward extension would shrink the bar");
    b.x_lo = new_lo;
}

void extend_right(Layout& box, int expect_vertex, const Rational& new_hi) {
    int idx = unique_rightmost_bar(box);
    Bar& b = box.bars[static_cast<size_t>(idx)];
    if (b.vertex != expect_vertex) fail(Errc::Internal, "right flank owned by the wrong vertex");
    if (new_hi <= b.x_hi) fail(Errc::Internal, "rightward extension would shrink the bar");
    b.x_hi = new_hi;
}

}  // namespace

Layout two_bar_layout(const TestDigraph& t, const HamCycle& c) {
    int n = t.h.n;
    // The cycle must visit every H-vertex once, along edges of H.
    if (static_cast<int>(c.verts.size()) != n)
        fail(Errc::NotHamiltonianOfSource, "cycle length differs from the vertex count");
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : c.verts) {
        if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
            fail(Errc::NotHamiltonianOfSource, "cycle is not a permutation of the vertices");
        seen[static_cast<size_t>(v)] = 1;
    }
    for (size_t i = 0; i < c.verts.size(); ++i) {
        int a = c.verts[i], b = c.verts[(i + 1) % c.verts.size()];
        if (!t.h.has_edge(a, b))
            fail(Errc::NotHamiltonianOfSource, "consecutive cycle vertices are not adjacent");
    }

    // Rotate the cycle to start (and end) at z: w_0 = w_n = z.
    std::vector<int> w;
    {
        size_t zpos = 0;
        while (c.verts[zpos] != t.z) ++zpos;
        for (size_t i = 0; i < c.verts.size(); ++i)
            w.push_back(c.verts[(zpos + i) % c.verts.size()]);
        w.push_back(t.z);
    }
    // Heights along the cycle drawing follow the seed orientation.
    std::vector<int> py{0};
    for (int i = 0; i < n; ++i) {
        bool up = t.seed.has_arc(w[static_cast<size_t>(i)], w[static_cast<size_t>(i + 1)]);
        py.push_back(py.back() + (up ? 1 : -1));
    }

    // The matching left over from the cycle; z's partner is handled apart.
    std::set<std::pair<int, int>> cycle_edges;
    for (int i = 0; i < n; ++i) {
        int a = w[static_cast<size_t>(i)], b = w[static_cast<size_t>(i + 1)];
        cycle_edges.insert({std::min(a, b), std::max(a, b)});
    }
    std::vector<std::pair<int, int>> matching;
    int u_z = -1;
    {
        std::vector<char> matched(static_cast<size_t>(n), 0);
        for (auto [a, b] : t.h.edges) {
            if (cycle_edges.count({a, b})) continue;
            if (matched[static_cast<size_t>(a)] || matched[static_cast<size_t>(b)])
                fail(Errc::Internal, "cycle complement is not a perfect matching");
            matched[static_cast<size_t>(a)] = matched[static_cast<size_t>(b)] = 1;
            if (a == t.z || b == t.z)
                u_z = a == t.z ? b : a;
            else
                matching.emplace_back(a, b);
        }
        for (char m : matched)
            if (!m) fail(Errc::Internal, "cycle complement is not a perfect matching");
    }

    Layout out;
    out.declared_t = 2;

    // Step 1 part one: H1 low on the far left; its sink s1 later runs under
    // the whole cycle drawing.
    PlacedBox box_h1 = place_box(t.h1, true, Rational(0), Rational(-n - 2));
    Rational w1 = box_h1.right;

    // Step 2: M_z just right of H1, then the cycle drawing: bar i spans
    // [X_C+4i, X_C+4i+6] at height py_i, so exactly consecutive bars overlap
    // (in a width-2 window) and each keeps a private width-2 window.
    PlacedBox box_mz = place_box(t.m_base[static_cast<size_t>(t.z)], false, w1 + 6, Rational(1));
    Rational r_mz = box_mz.right;
    Rational x_c = r_mz + 6;
    std::vector<Bar> cycle_bars;
    for (int i = 0; i <= n; ++i)
        cycle_bars.push_back({w[static_cast<size_t>(i)], Rational(py[static_cast<size_t>(i)]),
                              x_c + 4 * i, x_c + 4 * i + 6});
    Rational br = x_c + 4 * n + 6;

    // Step 1 part two: H2 and H3 stepping up to the right.
    PlacedBox box_h2 = place_box(t.h2, true, br + 14, Rational(n + 1));
    Rational r_h2 = box_h2.right;
    PlacedBox box_h3 = place_box(t.h3, true, r_h2 + 12, Rational(n + 3));
    Rational r_h3 = box_h3.right;

    // Step 3: the long flank bars. s1 runs under M_z and the whole cycle,
    // t2 over them; z' pokes under the first cycle bar; the closing z-bar
    // runs past H2 and H3 to see both boxes from below.
    extend_right(box_h1.l, t.s1(), br + 2);
    extend_right(box_mz.l, t.vprime(t.z), x_c + 2);
    extend_left(box_h2.l, t.t2(), w1 + 2);
    extend_right(box_h2.l, t.s2(), r_h2 + 6);
    extend_left(box_h3.l, t.t3(), r_h2 + 2);
    cycle_bars.back().x_hi = r_h3 + 16;

    append_layout(out, box_h1.l);
    append_layout(out, box_mz.l);
    append_layout(out, box_h2.l);
    append_layout(out, box_h3.l);
    for (const Bar& b : cycle_bars) out.bars.push_back(b);

    // Step 4a: z's matching partner on the right flank, one level beside the
    // closing z-bar, with its copy box beyond the z-bar's end.
    {
        if (u_z < 0) fail(Errc::Internal, "z has no matching partner");
        bool partner_below = t.seed.has_arc(u_z, t.z);
        Rational uy = Rational(py.back() + (partner_below ? -1 : 1));
        Rational box_y = Rational(py.back() + (partner_below ? 0 : 2));
        out.bars.push_back({u_z, uy, r_h3 + 8, r_h3 + 24});
        PlacedBox box_mu =
            place_box(t.m_base[static_cast<size_t>(u_z)], true, r_h3 + 30, box_y);
        extend_left(box_mu.l, t.vprime(u_z), r_h3 + 20);
        append_layout(out, box_mu.l);
    }

    // Step 4b: one fresh x-range per remaining matching arc a->b: the head's
    // copy, then bars for b and a stepping down-left to up-right, then the
    // tail's copy, wired by three width-6 overlaps.
    for (auto [ma, mb] : matching) {
        int a = ma, b = mb;
        if (!t.seed.has_arc(a, b)) std::swap(a, b);
        if (!t.seed.has_arc(a, b)) fail(Errc::Internal, "matching edge missing from the seed");
        Rational p0 = max_x(out) + 10;
        PlacedBox box_b = place_box(t.m_base[static_cast<size_t>(b)], false, p0, Rational(3));
        Rational e = box_b.right;
        extend_right(box_b.l, t.vprime(b), e + 12);
        append_layout(out, box_b.l);
        out.bars.push_back({b, Rational(2), e + 6, e + 28});
        out.bars.push_back({a, Rational(1), e + 22, e + 44});
        PlacedBox box_a = place_box(t.m_base[static_cast<size_t>(a)], true, e + 50, Rational(2));
        extend_left(box_a.l, t.vprime(a), e + 38);
        append_layout(out, box_a.l);
    }

    if (static_cast<int>(out.bars.size()) != 18 * n + 48)
        fail(Errc::AssemblyOverflow, "assembled bar count is off");
    std::vector<Violation> violations = validate_layout(out);
    if (!violations.empty())
        fail(Errc::AssemblyOverflow, violation_text(violations.front()));
    if (!verify_layout(out, t.g).empty())
        fail(Errc::AssemblyOverflow, "assembled layout does not realize the instance");
    return out;
}

Digraph lift_gadget(const Digraph& g, int t) {
    if (t < 2) fail(Errc::BadT, "lift needs t of at least 2");
    Digraph base = g;
    base.normalize();
    int p = t * t + t - 1, q = t + 1;
    int copy = p + q;
    Digraph out = base;
    out.n = base.n + base.n * 3 * copy;
    for (int v = 0; v < base.n; ++v) {
        int central = base.n + v * 3 * copy;
        int side1 = central + copy;
        int side2 = central + 2 * copy;
        for (int b : {central, side1, side2})
            for (int i = 0; i < p; ++i)
                for (int j = p; j < copy; ++j) out.add_arc(b + i, b + j);
        // Connectors, oriented from the lower global id to the higher. The
        // two central attachment points (local 0 and local p) are adjacent.
        out.add_arc(v, central + 0);
        out.add_arc(central + p, side1 + 0);
        out.add_arc(central + 0, side2 + p);
    }
    out.normalize();
    long long added = static_cast<long long>(base.n) * (3LL * p * q + 3);
    if (static_cast<long long>(out.arcs.size()) !=
        static_cast<long long>(base.arcs.size()) + added)
        fail(Errc::Internal, "lift size arithmetic is off");
    return out;
}

}  // namespace barviz
