#include <doctest.h>

#include <algorithm>
#include <set>

#include "barviz/geometry.hpp"
#include "barviz/tournaments.hpp"
#include "oracles.hpp"

using namespace barviz;
using oracles::error_code_of;

namespace {

// Independent restatement of the decomposition contract.
void check_decomposition_externally(const PathDecomposition& d) {
    int m = d.m;
    int n = 2 * m;
    REQUIRE(static_cast<int>(d.paths.size()) == m);
    REQUIRE(static_cast<int>(d.central.size()) == m);
    std::set<std::pair<int, int>> covered;
    for (const auto& path : d.paths) {
        REQUIRE(static_cast<int>(path.size()) == n);  // spanning
        std::set<int> distinct(path.begin(), path.end());
        REQUIRE(static_cast<int>(distinct.size()) == n);
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            auto e = std::minmax(path[i], path[i + 1]);
            REQUIRE(covered.insert({e.first, e.second}).second);  // no reuse
        }
    }
    REQUIRE(static_cast<int>(covered.size()) == n * (n - 1) / 2);  // all of K_2m
    std::set<int> matched;
    for (size_t i = 0; i < d.central.size(); ++i) {
        auto [a, b] = d.central[i];
        // the central edge sits in the middle of its own path
        const auto& path = d.paths[i];
        CHECK(((path[static_cast<size_t>(m - 1)] == a && path[static_cast<size_t>(m)] == b) ||
               (path[static_cast<size_t>(m - 1)] == b && path[static_cast<size_t>(m)] == a)));
        CHECK(matched.insert(a).second);
        CHECK(matched.insert(b).second);
    }
    CHECK(static_cast<int>(matched.size()) == n);  // perfect matching
}

}  // namespace

TEST_CASE("path decomposition invariants for small m") {
    for (int m = 1; m <= 20; ++m) check_decomposition_externally(path_decomposition(m));
    CHECK(error_code_of([] { path_decomposition(0); }) == Errc::BadSize);
}

TEST_CASE("path decomposition of the octagon matches the printed table") {
    PathDecomposition d = path_decomposition(4);
    CHECK(d.paths[0] == std::vector<int>{0, 1, 7, 2, 6, 3, 5, 4});
    CHECK(d.paths[1] == std::vector<int>{1, 2, 0, 3, 7, 4, 6, 5});
    CHECK(d.paths[2] == std::vector<int>{2, 3, 1, 4, 0, 5, 7, 6});
    CHECK(d.paths[3] == std::vector<int>{3, 4, 2, 5, 1, 6, 0, 7});
    CHECK(d.central == std::vector<std::pair<int, int>>{{2, 6}, {3, 7}, {0, 4}, {1, 5}});
}

TEST_CASE("quarter pieces partition the tournament") {
    for (int n : {4, 8, 12, 16, 20}) {
        QuarterPieces q = build_quarter_pieces(n);
        CHECK(q.n == n);
        CHECK(q.m == n / 4);
        std::set<std::pair<int, int>> all;
        for (const Digraph& piece : q.pieces) {
            CHECK(piece.n == n);
            for (auto [u, v] : piece.arcs) {
                CHECK(u < v);  // piece arcs follow the tournament's order
                CHECK(all.insert({u, v}).second);
            }
        }
        CHECK(static_cast<int>(all.size()) == n * (n - 1) / 2);
    }
    CHECK(error_code_of([] { build_quarter_pieces(6); }) == Errc::BadSize);
    CHECK(error_code_of([] { build_quarter_pieces(0); }) == Errc::BadSize);
}

TEST_CASE("quarter pieces at n=4 collapse to the whole tournament") {
    QuarterPieces q = build_quarter_pieces(4);
    REQUIRE(q.pieces.size() == 1);
    CHECK(q.pieces[0].arcs == transitive_tournament(4).arcs);
}

TEST_CASE("quarter pieces at n=16: central endpoints and middle part") {
    QuarterPieces q = build_quarter_pieces(16);
    REQUIRE(q.pieces.size() == 4);
    CHECK(q.e_endpoints[0] == std::pair<int, int>{2, 14});
    std::vector<int> b_expect;
    for (int v = 4; v <= 11; ++v) b_expect.push_back(v);
    CHECK(q.part_b == b_expect);
}

TEST_CASE("quarter layout verifies and respects the bar budget") {
    for (int n : {1, 2, 3, 4, 5, 9, 12, 18, 24}) {
        Layout l = quarter_layout(n);
        CHECK(validate_layout(l).empty());
        CHECK(verify_layout(l, transitive_tournament(n)).empty());
        int budget = (n + 3) / 4;
        CHECK(l.declared_t == budget);
        std::vector<int> per(static_cast<size_t>(n), 0);
        for (const Bar& b : l.bars) ++per[static_cast<size_t>(b.vertex)];
        for (int c : per) CHECK(c <= budget);
    }
    CHECK(error_code_of([] { quarter_layout(0); }) == Errc::EmptyGraph);
    CHECK(error_code_of([] { quarter_layout(-3); }) == Errc::BadSize);
}

TEST_CASE("lift adds two vertices for one extra bar") {
    // single-bar start: the one-bar tournament
    Layout t1;
    t1.declared_t = 1;
    t1.bars.push_back({0, Rational(0), Rational(0), Rational(1)});
    Layout t3 = lift_layout(t1);
    CHECK(t3.declared_t == 2);
    CHECK(verify_layout(t3, transitive_tournament(3)).empty());

    // iterate the lift: T3 -> T5 -> T7
    Layout t5 = lift_layout(t3);
    CHECK(t5.declared_t == 3);
    CHECK(verify_layout(t5, transitive_tournament(5)).empty());
    Layout t7 = lift_layout(t5);
    CHECK(verify_layout(t7, transitive_tournament(7)).empty());

    // lift on top of quarter layouts
    for (int n : {4, 7, 10}) {
        Layout base = quarter_layout(n);
        Layout lifted = lift_layout(base);
        CHECK(lifted.declared_t == base.declared_t + 1);
        CHECK(verify_layout(lifted, transitive_tournament(n + 2)).empty());
    }

    // inputs that are not tournament layouts are rejected
    Layout junk;
    junk.declared_t = 1;
    junk.bars.push_back({0, Rational(0), Rational(0), Rational(1)});
    junk.bars.push_back({1, Rational(0), Rational(2), Rational(3)});  // 0,1 never see
    CHECK(error_code_of([&] { lift_layout(junk); }) == Errc::InvalidInput);
    Layout broken;
    broken.declared_t = 1;
    broken.bars.push_back({0, Rational(0), Rational(1), Rational(1)});  // zero length
    CHECK(error_code_of([&] { lift_layout(broken); }) == Errc::InvalidInput);
}

TEST_CASE("quadratic lower bound closed form") {
    CHECK(quadratic_lower_bound(2) == 0);  // negative radicand clamps
    CHECK(quadratic_lower_bound(11) == 3);
    CHECK(quadratic_lower_bound(16) == 3);  // perfect-square radicand, equality allowed
    CHECK(quadratic_lower_bound(17) == 4);
    CHECK(quadratic_lower_bound(100) == 18);
    // never exceeds the recorded exact values
    int table[] = {0, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3};
    for (int n = 1; n <= 15; ++n) CHECK(quadratic_lower_bound(n) <= table[n]);
}

TEST_CASE("quadratic bound decimals") {
    CHECK(quadratic_bound_decimal(11, 4) == "2.1257");
    CHECK(quadratic_bound_decimal(17, 4) == "3.1758");
    CHECK(quadratic_bound_decimal(16, 0) == "3");  // the bound is exactly an integer
    CHECK(error_code_of([] { quadratic_bound_decimal(11, -1); }) == Errc::BadSize);
    CHECK(error_code_of([] { quadratic_bound_decimal(2, 4); }) == Errc::BadSize);
}

TEST_CASE("bounds table and sources") {
    for (int n = 1; n <= 4; ++n) {
        BoundsReport r = bounds_Tn(n);
        CHECK(r.lower == 1);
        CHECK(r.upper == 1);
    }
    for (int n = 5; n <= 10; ++n) {
        BoundsReport r = bounds_Tn(n);
        CHECK(r.lower == 2);
        CHECK(r.upper == 2);
    }
    for (int n = 11; n <= 15; ++n) {
        BoundsReport r = bounds_Tn(n);
        CHECK(r.lower == 3);
        CHECK(r.upper == 3);
    }
    CHECK(bounds_Tn(16).lower == 3);
    CHECK(bounds_Tn(16).upper == 4);
    CHECK(bounds_Tn(17).lower == 4);
    CHECK(bounds_Tn(17).upper == 4);

    CHECK(bounds_Tn(11).lower_source == "Theorem10");
    CHECK(bounds_Tn(11).upper_source == "Table");
    CHECK(bounds_Tn(16).upper_source == "Theorem7");
    CHECK(bounds_Tn(100).lower == 18);
    CHECK(bounds_Tn(100).upper == 25);
    CHECK(bounds_Tn(100).upper_source == "Theorem7");

    CHECK(error_code_of([] { bounds_Tn(0); }) == Errc::EmptyGraph);
    CHECK(error_code_of([] { bounds_Tn(-2); }) == Errc::BadSize);
}

TEST_CASE("bounds are consistent with the lift chain") {
    // lifting a layout witnesses upper(n+2) <= upper(n) + 1
    for (int n = 1; n <= 30; ++n) {
        BoundsReport a = bounds_Tn(n);
        BoundsReport b = bounds_Tn(n + 2);
        CHECK(a.lower <= a.upper);
        CHECK(b.upper <= a.upper + 1);
        CHECK(b.lower >= a.lower);  // monotone: T_n embeds in T_{n+2}
    }
}
