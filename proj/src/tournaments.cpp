#include "barviz/tournaments.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "barviz/errors.hpp"
#include "barviz/rational.hpp"
#include "barviz/recognize.hpp"

namespace barviz {

namespace {

// The classical zig-zag decomposition of K_2m works with labels 1..2m; this
// wraps any integer back into that window.
int wrap_label(int raw, int two_m) {
    int r = raw % two_m;
    if (r <= 0) r += two_m;
    return r;
}

void check_decomposition(const PathDecomposition& d) {
    int two_m = 2 * d.m;
    std::set<std::pair<int, int>> edges;
    long long count = 0;
    for (const std::vector<int>& p : d.paths) {
        if (static_cast<int>(p.size()) != two_m)
            fail(Errc::Internal, "path is not spanning");
        std::set<int> seen(p.begin(), p.end());
        if (static_cast<int>(seen.size()) != two_m)
            fail(Errc::Internal, "path repeats a vertex");
        for (size_t j = 0; j + 1 < p.size(); ++j) {
            edges.insert({std::min(p[j], p[j + 1]), std::max(p[j], p[j + 1])});
            ++count;
        }
    }
    long long want = static_cast<long long>(d.m) * (two_m - 1);
    if (count != want || static_cast<long long>(edges.size()) != want)
        fail(Errc::Internal, "paths do not partition the complete graph");
    std::set<int> ends;
    for (auto [a, b] : d.central) {
        ends.insert(a);
        ends.insert(b);
        if (!edges.count({a, b})) fail(Errc::Internal, "central edge not on its path");
    }
    if (static_cast<int>(ends.size()) != two_m)
        fail(Errc::Internal, "central edges are not a perfect matching");
}

}  // namespace

PathDecomposition path_decomposition(int m) {
    if (m < 1) fail(Errc::BadSize, "need at least one path");
    PathDecomposition d;
    d.m = m;
    int two_m = 2 * m;
    for (int i = 1; i <= m; ++i) {
        std::vector<int> p;
        p.push_back(wrap_label(i, two_m) - 1);
        for (int j = 1; j <= m - 1; ++j) {
            p.push_back(wrap_label(i + j, two_m) - 1);
            p.push_back(wrap_label(i - j, two_m) - 1);
        }
        p.push_back(wrap_label(i + m, two_m) - 1);
        d.paths.push_back(p);

        int a = wrap_label(i + (m + 1) / 2, two_m) - 1;
        int b = wrap_label(i - m / 2, two_m) - 1;
        d.central.emplace_back(std::min(a, b), std::max(a, b));
        // The matching edge is exactly the middle edge of the path.
        int lo = std::min(p[static_cast<size_t>(m - 1)], p[static_cast<size_t>(m)]);
        int hi = std::max(p[static_cast<size_t>(m - 1)], p[static_cast<size_t>(m)]);
        if (d.central.back() != std::make_pair(lo, hi))
            fail(Errc::Internal, "central edge disagrees with path middle");
    }
    check_decomposition(d);
    return d;
}

QuarterPieces build_quarter_pieces(int n) {
    if (n < 4 || n % 4 != 0) fail(Errc::BadSize, "vertex count must be a positive multiple of 4");
    QuarterPieces qp;
    qp.n = n;
    qp.m = n / 4;
    int m = qp.m;
    PathDecomposition d = path_decomposition(m);

    // Labels 1..2m of the decomposition live on part A: the first m ids and
    // the last m ids of T_n. Part B gets the middle ids and a shifted copy of
    // the same paths.
    auto a_id = [&](int zero_based_label) {
        int k = zero_based_label + 1;
        return k <= m ? k - 1 : 2 * m + k - 1;
    };
    auto b_id = [&](int zero_based_label) { return m + zero_based_label; };

    for (int k = 0; k < m; ++k) qp.part_a.push_back(k);
    for (int k = m; k < 3 * m; ++k) qp.part_b.push_back(k);
    for (int k = 3 * m; k < n; ++k) qp.part_a.push_back(k);

    std::set<std::pair<int, int>> all_arcs;
    long long arc_total = 0;
    for (int i = 0; i < m; ++i) {
        Digraph piece;
        piece.n = n;
        std::vector<int> pa, pb;
        for (int v : d.paths[static_cast<size_t>(i)]) pa.push_back(a_id(v));
        for (int v : d.paths[static_cast<size_t>(i)]) pb.push_back(b_id(v));
        auto low_high = [&piece](int u, int v) { piece.add_arc(std::min(u, v), std::max(u, v)); };
        for (size_t j = 0; j + 1 < pa.size(); ++j) low_high(pa[j], pa[j + 1]);
        for (size_t j = 0; j + 1 < pb.size(); ++j) low_high(pb[j], pb[j + 1]);
        int e_lo = a_id(d.central[static_cast<size_t>(i)].first);
        int e_hi = a_id(d.central[static_cast<size_t>(i)].second);
        if (e_lo > e_hi) std::swap(e_lo, e_hi);
        if (e_lo >= m || e_hi < 3 * m)
            fail(Errc::Internal, "central endpoints do not straddle part B");
        for (int b : qp.part_b) {
            piece.add_arc(e_lo, b);
            piece.add_arc(b, e_hi);
        }
        piece.normalize();
        for (auto [u, v] : piece.arcs) {
            if (u >= v) fail(Errc::Internal, "piece arc against the global order");
            all_arcs.insert({u, v});
            ++arc_total;
        }
        qp.pieces.push_back(piece);
        qp.e_endpoints.emplace_back(e_lo, e_hi);
        qp.a_order.push_back(pa);
        qp.b_order.push_back(pb);
    }
    long long want = static_cast<long long>(n) * (n - 1) / 2;
    if (arc_total != want || static_cast<long long>(all_arcs.size()) != want)
        fail(Errc::Internal, "pieces do not partition the tournament");
    return qp;
}

Layout quarter_layout(int n) {
    if (n == 0) fail(Errc::EmptyGraph, "tournament has no vertices");
    if (n < 0) fail(Errc::BadSize, "negative vertex count");
    int big = ((n + 3) / 4) * 4;
    QuarterPieces qp = build_quarter_pieces(big);

    Layout out;
    out.declared_t = big / 4;
    Rational cursor = 0;
    for (const Digraph& piece : qp.pieces) {
        Layout strip;
        try {
            strip = construct_1bar(piece);
        } catch (const Error& e) {
            if (e.code == Errc::NotRepresentable)
                fail(Errc::Internal, "piece rejected by the single-bar construction");
            throw;
        }
        Rational shift = cursor - min_x(strip);
        strip = translated(strip, shift, Rational(0));
        append_layout(out, strip);
        cursor = max_x(out) + 1;
    }

    if (big > n) {
        std::vector<int> victims;
        for (int v = n; v < big; ++v) victims.push_back(v);
        out = remove_vertices(out, victims);
    }
    if (big <= 200) {
        if (!verify_layout(out, transitive_tournament(n)).empty())
            fail(Errc::Internal, "assembled strips do not realize the tournament");
    }
    return out;
}

Layout lift_layout(const Layout& l) {
    for (const Violation& v : validate_layout(l))
        fail(Errc::InvalidInput, violation_text(v));
    int n = 0;
    for (const Bar& b : l.bars) n = std::max(n, b.vertex + 1);
    if (n > 0) {
        if (!verify_layout(l, transitive_tournament(n)).empty())
            fail(Errc::InvalidInput, "layout does not realize a transitive tournament");
    }

    Layout out;
    out.declared_t = l.declared_t + 1;
    for (const Bar& b : l.bars)
        out.bars.push_back({b.vertex + 1, b.y, b.x_lo, b.x_hi});

    // Fresh block strictly right of the old drawing: the new global source
    // spans the bottom, one unit slot per old vertex sits above it, and the
    // new global sink spans the top. The slots tile all of the source bar
    // except a final unit, which keeps source and sink mutually visible.
    Rational x0 = l.bars.empty() ? Rational(0) : max_x(l) + 1;
    out.bars.push_back({0, Rational(0), x0, x0 + Rational(n + 1)});
    for (int i = 1; i <= n; ++i)
        out.bars.push_back({i, Rational(1), x0 + Rational(i - 1), x0 + Rational(i)});
    out.bars.push_back({n + 1, Rational(2), x0, x0 + Rational(n + 1)});

    if (!verify_layout(out, transitive_tournament(n + 2)).empty())
        fail(Errc::Internal, "lifted layout fails verification");
    return out;
}

namespace {

// 0 when the table is silent for this n.
int table_value(int n) {
    if (n >= 1 && n <= 4) return 1;
    if (n >= 5 && n <= 10) return 2;
    if (n >= 11 && n <= 15) return 3;
    if (n == 17) return 4;
    return 0;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

int quadratic_lower_bound(int n) {
    BigInt nn = n;
    BigInt c = 3 * nn - 5;
    BigInt radicand = 7 * nn * nn - 28 * nn + 25;
    if (radicand < 0) return 0;
    BigInt s = isqrt_floor(radicand);
    BigInt k = floor_div(c - s + 1, 2);
    if (k < 0) return 0;
    return static_cast<int>(k);
}

std::string quadratic_bound_decimal(int n, int places) {
    if (places < 0) fail(Errc::BadSize, "negative precision");
    BigInt nn = n;
    BigInt radicand = 7 * nn * nn - 28 * nn + 25;
    if (radicand < 0) fail(Errc::BadSize, "value undefined for this n");
    BigInt pow_p = 1;
    for (int i = 0; i < places; ++i) pow_p *= 10;
    BigInt a = (3 * nn - 5) * pow_p;
    BigInt b = radicand * pow_p * pow_p;
    BigInt s = isqrt_floor(b);
    BigInt t = a + 1;
    // round-half-up of (a - sqrt(b)) / 2 in fixed point
    BigInt k = (s * s == b) ? floor_div(t - s, 2) : floor_div(t - s - 1, 2);
    BigInt whole = floor_div(k, pow_p);
    BigInt frac = k - whole * pow_p;
    std::string out = whole.str();
    if (places > 0) {
        std::string digits = frac.str();
        out += "." + std::string(static_cast<size_t>(places) - digits.size(), '0') + digits;
    }
    return out;
}

BoundsReport bounds_Tn(int n) {
    if (n == 0) fail(Errc::EmptyGraph, "tournament has no vertices");
    if (n < 0) fail(Errc::BadSize, "negative vertex count");
    BoundsReport r;
    r.n = n;

    struct Cand {
        int value;
        const char* source;
    };
    std::vector<Cand> lows;
    lows.push_back({quadratic_lower_bound(n), "Theorem10"});
    if (int tv = table_value(n); tv > 0) lows.push_back({tv, "Table"});
    if (n >= 7) lows.push_back({(n + 5) / 6, "CeilN6"});
    lows.push_back({1, "Trivial"});
    r.lower = 0;
    for (const Cand& c : lows) r.lower = std::max(r.lower, c.value);
    for (const Cand& c : lows)
        if (c.value == r.lower) {
            r.lower_source = c.source;
            break;
        }

    std::vector<Cand> ups;
    if (int tv = table_value(n); tv > 0) ups.push_back({tv, "Table"});
    ups.push_back({(n + 3) / 4, "Theorem7"});
    r.upper = ups.front().value;
    for (const Cand& c : ups) r.upper = std::min(r.upper, c.value);
    for (const Cand& c : ups)
        if (c.value == r.upper) {
            r.upper_source = c.source;
            break;
        }

    if (r.lower < 1 || r.lower > r.upper) fail(Errc::Internal, "bound candidates inconsistent");
    return r;
}

}  // namespace barviz
