// Acceptance gate: one line per criterion, PASS/FAIL, with wall-clock budgets.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "barviz/geometry.hpp"
#include "barviz/graphs.hpp"
#include "barviz/intervals.hpp"
#include "barviz/recognize.hpp"
#include "barviz/reduction.hpp"
#include "barviz/tournaments.hpp"
#include "oracles.hpp"

using namespace barviz;

namespace {

struct Check {
    std::string name;
    double budget_s;  // 0 = no explicit budget
    std::function<bool(std::string&)> run;
};

bool expect(bool cond, std::string& why, const std::string& msg) {
    if (!cond && why.empty()) why = msg;
    return cond;
}

bool criterion_bounds(std::string& why) {
    bool ok = true;
    auto want = [&](int n, int lo, int hi) {
        BoundsReport r = bounds_Tn(n);
        ok &= expect(r.lower == lo && r.upper == hi, why,
                     "bounds mismatch at n=" + std::to_string(n) + ": got (" +
                         std::to_string(r.lower) + "," + std::to_string(r.upper) + ")");
    };
    for (int n = 1; n <= 4; ++n) want(n, 1, 1);
    for (int n = 5; n <= 10; ++n) want(n, 2, 2);
    for (int n = 11; n <= 15; ++n) want(n, 3, 3);
    want(16, 3, 4);
    want(17, 4, 4);
    return ok;
}

bool criterion_quarter(std::string& why) {
    for (int n = 1; n <= 40; ++n) {
        Layout l = quarter_layout(n);
        if (!verify_layout(l, transitive_tournament(n)).empty())
            return expect(false, why, "diff at n=" + std::to_string(n));
        int budget = (n + 3) / 4;
        std::vector<int> per(static_cast<size_t>(n), 0);
        for (const Bar& b : l.bars) ++per[static_cast<size_t>(b.vertex)];
        for (int c : per)
            if (c > budget) return expect(false, why, "budget exceeded at n=" + std::to_string(n));
    }
    return true;
}

bool criterion_paths(std::string& why) {
    for (int m = 1; m <= 100; ++m) {
        PathDecomposition d = path_decomposition(m);
        int n = 2 * m;
        std::set<std::pair<int, int>> covered;
        std::set<int> matched;
        for (const auto& path : d.paths) {
            if (static_cast<int>(path.size()) != n)
                return expect(false, why, "short path at m=" + std::to_string(m));
            for (size_t i = 0; i + 1 < path.size(); ++i) {
                auto e = std::minmax(path[i], path[i + 1]);
                if (!covered.insert({e.first, e.second}).second)
                    return expect(false, why, "edge reused at m=" + std::to_string(m));
            }
        }
        if (static_cast<int>(covered.size()) != n * (n - 1) / 2)
            return expect(false, why, "not a partition at m=" + std::to_string(m));
        for (auto [a, b] : d.central) {
            if (!matched.insert(a).second || !matched.insert(b).second)
                return expect(false, why, "central edges not a matching at m=" + std::to_string(m));
        }
        if (static_cast<int>(matched.size()) != n)
            return expect(false, why, "matching not perfect at m=" + std::to_string(m));
    }
    PathDecomposition d4 = path_decomposition(4);
    bool verbatim = d4.paths[0] == std::vector<int>{0, 1, 7, 2, 6, 3, 5, 4} &&
                    d4.paths[1] == std::vector<int>{1, 2, 0, 3, 7, 4, 6, 5} &&
                    d4.paths[2] == std::vector<int>{2, 3, 1, 4, 0, 5, 7, 6} &&
                    d4.paths[3] == std::vector<int>{3, 4, 2, 5, 1, 6, 0, 7} &&
                    d4.central == std::vector<std::pair<int, int>>{{2, 6}, {3, 7}, {0, 4}, {1, 5}};
    return expect(verbatim, why, "m=4 decomposition differs from the printed one");
}

bool criterion_lower_bound(std::string& why) {
    bool ok = true;
    ok &= expect(quadratic_lower_bound(11) == 3, why, "ceil bound at n=11 is not 3");
    ok &= expect(quadratic_lower_bound(17) == 4, why, "ceil bound at n=17 is not 4");
    ok &= expect(quadratic_bound_decimal(11, 4) == "2.1257", why, "decimal at n=11 wrong");
    ok &= expect(quadratic_bound_decimal(17, 4) == "3.1758", why, "decimal at n=17 wrong");
    return ok;
}

bool criterion_recognition(std::string& why) {
    std::mt19937 rng(20250818);
    for (int trial = 0; trial < 100; ++trial) {
        int n = std::uniform_int_distribution<int>(2, 30)(rng);
        Digraph g = oracles::random_path_orientation(rng, n);
        Recognition r = is_bar_visibility_digraph(g);
        if (!r.ok) return expect(false, why, "path orientation rejected");
        if (!verify_layout(construct_1bar(g), g).empty())
            return expect(false, why, "path construction diff");
    }
    for (int m = 1; m <= 10; ++m) {
        for (const Digraph& piece : build_quarter_pieces(4 * m).pieces) {
            Recognition r = is_bar_visibility_digraph(piece);
            if (!r.ok) return expect(false, why, "piece rejected at m=" + std::to_string(m));
            if (!verify_layout(construct_1bar(piece), piece).empty())
                return expect(false, why, "piece construction diff at m=" + std::to_string(m));
        }
    }
    Recognition t5 = is_bar_visibility_digraph(transitive_tournament(5));
    if (t5.ok || t5.reason != Reason::NonPlanar)
        return expect(false, why, "T5 verdict is not NonPlanar");
    for (int n = 3; n <= 10; ++n) {
        Digraph cyc;
        cyc.n = n;
        for (int i = 0; i < n; ++i) cyc.add_arc(i, (i + 1) % n);
        cyc.normalize();
        Recognition r = is_bar_visibility_digraph(cyc);
        if (r.ok || r.reason != Reason::ConsistentCycle)
            return expect(false, why, "cycle verdict is not ConsistentCycle");
    }
    return true;
}

bool criterion_reduction_sizes(std::string& why) {
    for (const NamedGraph& ng : cubic_triangle_free_corpus()) {
        int n = ng.g.n;
        if (n > 14) continue;  // the published identities cover n in {6,8,10,12,14}
        TestDigraph t = build_test_digraph(ng.g, 0, default_orientation(ng.g));
        if (t.g.n != 9 * n + 24)
            return expect(false, why, "vertex count off for " + ng.name);
        if (static_cast<int>(t.g.arcs.size()) != 39 * n / 2 + 78)
            return expect(false, why, "arc count off for " + ng.name);
    }
    return true;
}

bool criterion_forward_reduction(std::string& why) {
    for (const NamedGraph& ng : cubic_triangle_free_corpus()) {
        if (ng.name != "k33" && ng.name != "cube" && ng.name != "mobius-kantor") continue;
        auto cyc = hamiltonian_cycle(ng.g);
        if (!cyc) return expect(false, why, ng.name + " should be hamiltonian");
        TestDigraph t = build_test_digraph(ng.g, 0, default_orientation(ng.g));
        Layout l = two_bar_layout(t, *cyc);
        if (!verify_layout(l, t.g).empty())
            return expect(false, why, "two-bar diff for " + ng.name);
        std::vector<int> per(static_cast<size_t>(t.g.n), 0);
        for (const Bar& b : l.bars) ++per[static_cast<size_t>(b.vertex)];
        for (int c : per)
            if (c > 2) return expect(false, why, "more than two bars for " + ng.name);
    }
    return expect(!hamiltonian_cycle(petersen_graph()).has_value(), why,
                  "petersen should have no hamiltonian cycle");
}

bool criterion_properties(std::string& why) {
    // sweep vs brute-force oracle
    std::mt19937 rng(99887766);
    for (int trial = 0; trial < 500; ++trial) {
        Layout l = oracles::random_layout(rng, 40);
        Digraph a = realized_digraph(l);
        Digraph b = oracles::realized(l);
        if (a.n != b.n || a.arcs != b.arcs)
            return expect(false, why, "sweep/oracle mismatch at trial " + std::to_string(trial));
    }
    // deleting a top segment of a tournament layout leaves a tournament layout
    for (int trial = 0; trial < 100; ++trial) {
        int n = 5 + (trial * 7) % 36;
        int k = 1 + (trial * 13) % (n - 1);
        Layout l = quarter_layout(n);
        std::vector<int> kill;
        for (int v = k; v < n; ++v) kill.push_back(v);
        Layout cut = remove_vertices(l, kill);
        if (!verify_layout(cut, transitive_tournament(k)).empty())
            return expect(false, why, "deletion broke n=" + std::to_string(n) +
                                          " k=" + std::to_string(k));
    }
    // construction outputs: derived graphs satisfy the euler bound, planarity
    std::vector<Layout> outputs;
    for (int n = 1; n <= 40; ++n) outputs.push_back(quarter_layout(n));
    for (int m = 1; m <= 6; ++m)
        for (const Digraph& piece : build_quarter_pieces(4 * m).pieces)
            outputs.push_back(construct_1bar(piece));
    for (const NamedGraph& ng : cubic_triangle_free_corpus()) {
        if (ng.name != "k33" && ng.name != "cube") continue;
        TestDigraph t = build_test_digraph(ng.g, 0, default_orientation(ng.g));
        outputs.push_back(two_bar_layout(t, *hamiltonian_cycle(ng.g)));
    }
    for (size_t i = 0; i < outputs.size(); ++i) {
        DerivedGraphReport rep = derived_graph(outputs[i]);
        if (!rep.euler_ok)
            return expect(false, why, "euler bound violated on output " + std::to_string(i));
        if (!is_planar(rep.graph))
            return expect(false, why, "non-planar derived graph on output " + std::to_string(i));
    }
    // interval-derived layouts stay within channel depth 2
    std::vector<Layout> interval_layouts;
    interval_layouts.push_back(
        interval_to_bars(k53_template(), oriented_complete_bipartite(5, 3, Direction::A_to_B)));
    for (bool mirror : {false, true})
        for (int u = 5; u <= 7; ++u)
            for (int v = 0; v <= 4; ++v)
                interval_layouts.push_back(k53_gadget(u, v, Direction::A_to_B, mirror));
    std::mt19937 rng2(5554443);
    for (int trial = 0; trial < 100; ++trial) {
        auto scene = oracles::random_bipartite_intervals(rng2);
        interval_layouts.push_back(interval_to_bars(scene.rep, scene.arcs));
    }
    for (size_t i = 0; i < interval_layouts.size(); ++i)
        if (channel_depth(interval_layouts[i]) > 2)
            return expect(false, why, "channel depth over 2 on interval layout " +
                                          std::to_string(i));
    return true;
}

}  // namespace

int main() {
    std::vector<Check> checks = {
        {"known-values bounds table", 1.0, criterion_bounds},
        {"quarter construction verifies up to n=40", 30.0, criterion_quarter},
        {"path decompositions partition and match", 5.0, criterion_paths},
        {"exact quadratic lower bound", 1.0, criterion_lower_bound},
        {"recognition verdicts and constructions", 30.0, criterion_recognition},
        {"reduction size identities", 5.0, criterion_reduction_sizes},
        {"forward reduction at desk scale", 60.0, criterion_forward_reduction},
        {"property suites (oracle, deletion, derived, depth)", 0.0, criterion_properties},
    };
    bool all_ok = true;
    for (size_t i = 0; i < checks.size(); ++i) {
        std::string why;
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = checks[i].run(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && checks[i].budget_s > 0 && secs > checks[i].budget_s) {
            ok = false;
            why = "over budget";
        }
        if (checks[i].budget_s > 0)
            std::printf("%s  criterion %zu: %s (%.2fs of %.0fs)%s%s\n", ok ? "PASS" : "FAIL",
                        i + 1, checks[i].name.c_str(), secs, checks[i].budget_s,
                        why.empty() ? "" : " — ", why.c_str());
        else
            std::printf("%s  criterion %zu: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                        checks[i].name.c_str(), secs, why.empty() ? "" : " — ", why.c_str());
        all_ok &= ok;
    }
    return all_ok ? 0 : 1;
}
