#include "barviz/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace barviz {

std::string violation_text(const Violation& v) {
    const char* kind = "";
    switch (v.kind) {
        case ViolationKind::ZeroLength: kind = "ZeroLength"; break;
        case ViolationKind::TooManyBars: kind = "TooManyBars"; break;
        case ViolationKind::SameLevelOverlap: kind = "SameLevelOverlap"; break;
        case ViolationKind::BadVertexId: kind = "BadVertexId"; break;
    }
    return std::string(kind) + ": " + v.detail;
}

std::vector<Violation> validate_layout(const Layout& l) {
    std::vector<Violation> out;
    for (size_t i = 0; i < l.bars.size(); ++i) {
        const Bar& b = l.bars[i];
        if (b.vertex < 0)
            out.push_back({ViolationKind::BadVertexId, static_cast<int>(i), -1,
                           "bar " + std::to_string(i) + " has negative vertex id"});
        if (!(b.x_lo < b.x_hi))
            out.push_back({ViolationKind::ZeroLength, static_cast<int>(i), -1,
                           "bar " + std::to_string(i) + " has no positive length"});
    }
    std::map<int, int> count;
    for (size_t i = 0; i < l.bars.size(); ++i) {
        int v = l.bars[i].vertex;
        if (v < 0) continue;
        if (++count[v] == l.declared_t + 1)
            out.push_back({ViolationKind::TooManyBars, static_cast<int>(i), -1,
                           "vertex " + std::to_string(v) + " exceeds " +
                               std::to_string(l.declared_t) + " bars"});
    }
    // Same-level interior overlap: sweep each level left to right, tracking
    // the bar reaching furthest right so containment chains are caught too.
    std::map<Rational, std::vector<int>> by_level;
    for (size_t i = 0; i < l.bars.size(); ++i) by_level[l.bars[i].y].push_back(static_cast<int>(i));
    for (auto& [y, idxs] : by_level) {
        std::sort(idxs.begin(), idxs.end(), [&](int a, int b) {
            if (l.bars[a].x_lo != l.bars[b].x_lo) return l.bars[a].x_lo < l.bars[b].x_lo;
            return l.bars[a].x_hi < l.bars[b].x_hi;
        });
        int reach = -1;  // bar with max x_hi among earlier bars on this level
        for (int idx : idxs) {
            if (reach >= 0 && l.bars[idx].x_lo < l.bars[reach].x_hi)
                out.push_back({ViolationKind::SameLevelOverlap, reach, idx,
                               "bars " + std::to_string(reach) + " and " + std::to_string(idx) +
                                   " overlap on a level"});
            if (reach < 0 || l.bars[idx].x_hi > l.bars[reach].x_hi) reach = idx;
        }
    }
    return out;
}

void require_valid(const Layout& l) {
    std::vector<Violation> v = validate_layout(l);
    if (v.empty()) return;
    std::string msg = violation_text(v[0]);
    if (v.size() > 1) msg += " (+" + std::to_string(v.size() - 1) + " more)";
    fail(Errc::InvalidLayout, msg);
}

std::vector<VisibilityPair> visible_pairs(const Layout& l) {
    require_valid(l);
    // Sweep the x-axis. Between two consecutive event abscissas the active
    // set is constant, and any positive-width witness strip contains a whole
    // such cell, so reporting y-adjacent active pairs per cell is exact.
    // Removals precede insertions at equal x: endpoint contact is no strip.
    struct Ev {
        Rational x;
        int type;  // 0 = remove, 1 = insert
        int bar;
    };
    std::vector<Ev> evs;
    evs.reserve(l.bars.size() * 2);
    for (size_t i = 0; i < l.bars.size(); ++i) {
        evs.push_back({l.bars[i].x_lo, 1, static_cast<int>(i)});
        evs.push_back({l.bars[i].x_hi, 0, static_cast<int>(i)});
    }
    std::sort(evs.begin(), evs.end(), [](const Ev& a, const Ev& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.type != b.type) return a.type < b.type;
        return a.bar < b.bar;
    });

    std::map<Rational, int> active;  // y -> bar index (one bar per level per cell)
    std::set<std::pair<int, int>> seen;
    std::vector<VisibilityPair> out;
    size_t i = 0;
    while (i < evs.size()) {
        size_t j = i;
        while (j < evs.size() && evs[j].x == evs[i].x) {
            const Ev& e = evs[j];
            if (e.type == 0) {
                active.erase(l.bars[e.bar].y);
            } else {
                auto [it, inserted] = active.emplace(l.bars[e.bar].y, e.bar);
                if (!inserted) fail(Errc::Internal, "two bars active on one level");
            }
            ++j;
        }
        if (j >= evs.size()) break;  // nothing to the right of the last event
        const Rational& x = evs[i].x;
        const Rational& x_next = evs[j].x;
        auto it = active.begin();
        if (it != active.end()) {
            auto next = std::next(it);
            for (; next != active.end(); ++it, ++next) {
                std::pair<int, int> key(it->second, next->second);
                if (seen.insert(key).second)
                    out.push_back({key.first, key.second, x, x_next});
            }
        }
        i = j;
    }
    return out;
}

Digraph realized_digraph(const Layout& l) {
    std::vector<VisibilityPair> vp = visible_pairs(l);
    Digraph g;
    for (const Bar& b : l.bars) g.n = std::max(g.n, b.vertex + 1);
    for (const VisibilityPair& p : vp) {
        int u = l.bars[static_cast<size_t>(p.lower)].vertex;
        int v = l.bars[static_cast<size_t>(p.upper)].vertex;
        if (u != v) g.add_arc(u, v);
    }
    g.normalize();
    return g;
}

Diff verify_layout(const Layout& l, const Digraph& g) {
    for (const Bar& b : l.bars)
        if (b.vertex >= g.n)
            fail(Errc::InvalidLayout,
                 "layout vertex " + std::to_string(b.vertex) + " not in target digraph");
    Digraph r = realized_digraph(l);
    Diff d;
    std::set_difference(g.arcs.begin(), g.arcs.end(), r.arcs.begin(), r.arcs.end(),
                        std::back_inserter(d.missing));
    std::set_difference(r.arcs.begin(), r.arcs.end(), g.arcs.begin(), g.arcs.end(),
                        std::back_inserter(d.extra));
    return d;
}

DerivedGraphReport derived_graph(const Layout& l) {
    std::vector<VisibilityPair> vp = visible_pairs(l);
    DerivedGraphReport rep;
    rep.graph.n = static_cast<int>(l.bars.size());
    for (const VisibilityPair& p : vp) rep.graph.add_edge(p.lower, p.upper);
    rep.graph.normalize();
    long long v = rep.graph.n;
    long long e = static_cast<long long>(rep.graph.edges.size());
    rep.euler_ok = v < 3 || e <= 3 * v - 6;
    return rep;
}

namespace {

// Distinct vertex sets covering each open cell between consecutive endpoint
// abscissas. A bar meets the open cell iff it covers the whole cell, because
// cells are the finest subdivision induced by all endpoints.
std::vector<std::vector<int>> cell_vertex_sets(const Layout& l) {
    std::vector<Rational> xs;
    xs.reserve(l.bars.size() * 2);
    for (const Bar& b : l.bars) {
        xs.push_back(b.x_lo);
        xs.push_back(b.x_hi);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<std::vector<int>> cells;
    for (size_t i = 0; i + 1 < xs.size(); ++i) {
        std::vector<int> verts;
        for (const Bar& b : l.bars)
            if (b.x_lo <= xs[i] && b.x_hi >= xs[i + 1]) verts.push_back(b.vertex);
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        cells.push_back(std::move(verts));
    }
    return cells;
}

}  // namespace

int channel_depth(const Layout& l) {
    int depth = 0;
    for (const std::vector<int>& c : cell_vertex_sets(l))
        depth = std::max(depth, static_cast<int>(c.size()));
    return depth;
}

bool is_displayed(const Layout& l) {
    std::set<int> present, displayed;
    for (const Bar& b : l.bars) present.insert(b.vertex);
    for (const std::vector<int>& c : cell_vertex_sets(l))
        if (c.size() == 1) displayed.insert(c[0]);
    return displayed == present;
}

Layout translated(const Layout& l, const Rational& dx, const Rational& dy) {
    Layout out = l;
    for (Bar& b : out.bars) {
        b.x_lo += dx;
        b.x_hi += dx;
        b.y += dy;
    }
    return out;
}

Layout mirrored_x(const Layout& l) {
    Layout out = l;
    for (Bar& b : out.bars) {
        Rational lo = -b.x_hi;
        Rational hi = -b.x_lo;
        b.x_lo = lo;
        b.x_hi = hi;
    }
    return out;
}

Layout relabeled(const Layout& l, const std::vector<int>& new_id_of) {
    Layout out = l;
    for (Bar& b : out.bars) {
        if (b.vertex < 0 || b.vertex >= static_cast<int>(new_id_of.size()) ||
            new_id_of[static_cast<size_t>(b.vertex)] < 0)
            fail(Errc::Internal, "relabel map misses vertex " + std::to_string(b.vertex));
        b.vertex = new_id_of[static_cast<size_t>(b.vertex)];
    }
    return out;
}

void append_layout(Layout& dst, const Layout& src) {
    dst.declared_t = std::max(dst.declared_t, src.declared_t);
    dst.bars.insert(dst.bars.end(), src.bars.begin(), src.bars.end());
}

Layout remove_vertices(const Layout& l, const std::vector<int>& victims) {
    std::set<int> kill(victims.begin(), victims.end());
    Layout out;
    out.declared_t = l.declared_t;
    for (const Bar& b : l.bars)
        if (!kill.count(b.vertex)) out.bars.push_back(b);
    return out;
}

Rational min_x(const Layout& l) {
    Rational m = 0;
    bool first = true;
    for (const Bar& b : l.bars) {
        if (first || b.x_lo < m) m = b.x_lo;
        first = false;
    }
    return m;
}

Rational max_x(const Layout& l) {
    Rational m = 0;
    bool first = true;
    for (const Bar& b : l.bars) {
        if (first || b.x_hi > m) m = b.x_hi;
        first = false;
    }
    return m;
}

int unique_leftmost_bar(const Layout& l) {
    if (l.bars.empty()) fail(Errc::Internal, "leftmost bar of empty layout");
    int best = 0;
    bool tie = false;
    for (size_t i = 1; i < l.bars.size(); ++i) {
        if (l.bars[i].x_lo < l.bars[static_cast<size_t>(best)].x_lo) {
            best = static_cast<int>(i);
            tie = false;
        } else if (l.bars[i].x_lo == l.bars[static_cast<size_t>(best)].x_lo) {
            tie = true;
        }
    }
    if (tie) fail(Errc::Internal, "leftmost bar is not unique");
    return best;
}

int unique_rightmost_bar(const Layout& l) {
    if (l.bars.empty()) fail(Errc::Internal, "rightmost bar of empty layout");
    int best = 0;
    bool tie = false;
    for (size_t i = 1; i < l.bars.size(); ++i) {
        if (l.bars[i].x_hi > l.bars[static_cast<size_t>(best)].x_hi) {
            best = static_cast<int>(i);
            tie = false;
        } else if (l.bars[i].x_hi == l.bars[static_cast<size_t>(best)].x_hi) {
            tie = true;
        }
    }
    if (tie) fail(Errc::Internal, "rightmost bar is not unique");
    return best;
}

}  // namespace barviz
