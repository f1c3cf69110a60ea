#include "barviz/intervals.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "barviz/errors.hpp"

namespace barviz {

namespace {

using Interval = std::pair<Rational, Rational>;

bool meets(const Interval& a, const Interval& b) {
    return std::max(a.first, b.first) <= std::min(a.second, b.second);
}

std::vector<Rational> all_endpoints(const IntervalRep& r) {
    std::vector<Rational> pts;
    for (const auto& list : r.per_vertex)
        for (const Interval& iv : list) {
            pts.push_back(iv.first);
            pts.push_back(iv.second);
        }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// Smallest positive difference between distinct endpoint values; nothing
// when fewer than two distinct values exist.
std::optional<Rational> min_endpoint_gap(const IntervalRep& r) {
    std::vector<Rational> pts = all_endpoints(r);
    if (pts.size() < 2) return std::nullopt;
    Rational best = pts[1] - pts[0];
    for (size_t i = 2; i < pts.size(); ++i) {
        Rational gap = pts[i] - pts[i - 1];
        best = std::min(best, gap);
    }
    return best;
}

void check_interval_shape(const IntervalRep& r) {
    for (const auto& list : r.per_vertex) {
        for (const Interval& iv : list)
            if (iv.first > iv.second) fail(Errc::InvalidInput, "interval with reversed endpoints");
        for (size_t i = 0; i < list.size(); ++i)
            for (size_t j = i + 1; j < list.size(); ++j)
                if (meets(list[i], list[j]))
                    fail(Errc::InvalidInput, "same-vertex intervals share a point");
    }
}

}  // namespace

Graph realized_interval_graph(const IntervalRep& r) {
    Graph g;
    g.n = static_cast<int>(r.per_vertex.size());
    for (int u = 0; u < g.n; ++u)
        for (int w = u + 1; w < g.n; ++w) {
            bool adj = false;
            for (const Interval& a : r.per_vertex[static_cast<size_t>(u)]) {
                for (const Interval& b : r.per_vertex[static_cast<size_t>(w)])
                    if (meets(a, b)) {
                        adj = true;
                        break;
                    }
                if (adj) break;
            }
            if (adj) g.add_edge(u, w);
        }
    g.normalize();
    return g;
}

DepthProfile depth(const IntervalRep& r) {
    DepthProfile d;
    // The maximum is attained at an endpoint: any other point's covers all
    // fully cover the gap around it, endpoints included.
    for (const Rational& p : all_endpoints(r)) {
        int count = 0;
        for (const auto& list : r.per_vertex)
            for (const Interval& iv : list)
                if (iv.first <= p && p <= iv.second) {
                    ++count;
                    break;  // same-vertex intervals are disjoint anyway
                }
        if (count > d.depth) {
            d.depth = count;
            d.witness = p;
        }
    }
    return d;
}

IntervalRep prune_to_subgraph(const IntervalRep& r, const Graph& h, const Graph& h_prime) {
    check_interval_shape(r);
    Graph realized = realized_interval_graph(r);
    realized.normalize();
    Graph hh = h;
    hh.normalize();
    if (realized.n != hh.n || realized.edges != hh.edges)
        fail(Errc::WrongRealization, "representation does not realize the stated graph");
    // Triangle test on the host graph.
    std::vector<std::vector<char>> adj(static_cast<size_t>(hh.n),
                                       std::vector<char>(static_cast<size_t>(hh.n), 0));
    for (auto [u, v] : hh.edges)
        adj[static_cast<size_t>(u)][static_cast<size_t>(v)] =
            adj[static_cast<size_t>(v)][static_cast<size_t>(u)] = 1;
    for (auto [u, v] : hh.edges)
        for (int w = 0; w < hh.n; ++w)
            if (adj[static_cast<size_t>(u)][static_cast<size_t>(w)] &&
                adj[static_cast<size_t>(v)][static_cast<size_t>(w)])
                fail(Errc::NotTriangleFree, "host graph contains a triangle");
    Graph hp = h_prime;
    hp.normalize();
    if (hp.n != hh.n) fail(Errc::NotSpanning, "subgraph has a different vertex set");
    for (auto [u, v] : hp.edges)
        if (!hh.has_edge(u, v)) fail(Errc::NotSpanning, "subgraph has an edge the host lacks");

    IntervalRep cur = r;
    Graph before = realized;
    while (true) {
        // First unwanted intersecting interval pair, in deterministic order.
        int fu = -1, fw = -1;
        size_t fi = 0, fj = 0;
        for (int u = 0; u < hh.n && fu < 0; ++u)
            for (int w = u + 1; w < hh.n && fu < 0; ++w) {
                if (hp.has_edge(u, w)) continue;
                const auto& lu = cur.per_vertex[static_cast<size_t>(u)];
                const auto& lw = cur.per_vertex[static_cast<size_t>(w)];
                for (size_t i = 0; i < lu.size() && fu < 0; ++i)
                    for (size_t j = 0; j < lw.size(); ++j)
                        if (meets(lu[i], lw[j])) {
                            fu = u;
                            fw = w;
                            fi = i;
                            fj = j;
                            break;
                        }
            }
        if (fu < 0) break;

        Interval a = cur.per_vertex[static_cast<size_t>(fu)][fi];
        Interval b = cur.per_vertex[static_cast<size_t>(fw)][fj];
        bool b_in_a = a.first <= b.first && b.second <= a.second;
        bool a_in_b = b.first <= a.first && a.second <= b.second;
        if (b_in_a || a_in_b) {
            // Triangle-freeness makes the contained interval redundant for
            // every edge except the one being removed.
            if (b_in_a)
                cur.per_vertex[static_cast<size_t>(fw)].erase(
                    cur.per_vertex[static_cast<size_t>(fw)].begin() + static_cast<long>(fj));
            else
                cur.per_vertex[static_cast<size_t>(fu)].erase(
                    cur.per_vertex[static_cast<size_t>(fu)].begin() + static_cast<long>(fi));
        } else {
            // Partial overlap: cut both back past the shared stretch. Any
            // third interval reaching the vacated stretch would close a
            // triangle, so only this edge is lost.
            std::optional<Rational> gap = min_endpoint_gap(cur);
            if (!gap) fail(Errc::Internal, "overlap without distinct endpoints");
            Rational delta = *gap / 2;
            bool a_first = a.first < b.first;
            const Interval& lead = a_first ? a : b;
            const Interval& trail = a_first ? b : a;
            Interval new_lead{lead.first, trail.first - delta};
            Interval new_trail{lead.second + delta, trail.second};
            if (new_lead.first > new_lead.second || new_trail.first > new_trail.second)
                fail(Errc::Internal, "shrunken interval collapsed");
            cur.per_vertex[static_cast<size_t>(fu)][fi] = a_first ? new_lead : new_trail;
            cur.per_vertex[static_cast<size_t>(fw)][fj] = a_first ? new_trail : new_lead;
        }

        Graph after = realized_interval_graph(cur);
        for (auto [u, v] : after.edges)
            if (!before.has_edge(u, v)) fail(Errc::Internal, "pruning created an edge");
        before = after;
    }

    Graph final_graph = realized_interval_graph(cur);
    if (final_graph.edges != hp.edges)
        fail(Errc::Internal, "pruning missed the target subgraph");
    return cur;
}

Layout interval_to_bars(const IntervalRep& r, const Digraph& d) {
    check_interval_shape(r);
    // Depth first: any depth-3 point also forces a triangle, and the depth
    // verdict is the more informative one.
    if (depth(r).depth > 2) fail(Errc::DepthExceeded, "three intervals share a point");
    Graph realized = realized_interval_graph(r);
    Graph want = underlying(d);
    realized.normalize();
    want.normalize();
    if (realized.n != want.n || realized.edges != want.edges)
        fail(Errc::WrongRealization, "representation does not realize the digraph's graph");

    std::vector<int> indeg(static_cast<size_t>(d.n), 0), outdeg(static_cast<size_t>(d.n), 0);
    for (auto [u, v] : d.arcs) {
        ++outdeg[static_cast<size_t>(u)];
        ++indeg[static_cast<size_t>(v)];
    }
    for (int v = 0; v < d.n; ++v)
        if (indeg[static_cast<size_t>(v)] > 0 && outdeg[static_cast<size_t>(v)] > 0)
            fail(Errc::NotOneWayBipartite, "vertex has both in- and out-arcs");

    for (const auto& list : r.per_vertex)
        if (static_cast<int>(list.size()) > r.t)
            fail(Errc::InvalidInput, "vertex exceeds the declared interval budget");

    std::optional<Rational> gap = min_endpoint_gap(r);
    Rational eps = gap ? *gap / 4 : Rational(1);

    Layout out;
    out.declared_t = r.t;
    for (int v = 0; v < d.n; ++v) {
        Rational level = indeg[static_cast<size_t>(v)] > 0 ? 1 : 0;
        for (const Interval& iv : r.per_vertex[static_cast<size_t>(v)])
            out.bars.push_back({v, level, iv.first - eps, iv.second + eps});
    }

    require_valid(out);
    if (!verify_layout(out, d).empty())
        fail(Errc::Internal, "widened bars do not realize the digraph");
    if (channel_depth(out) > 2) fail(Errc::Internal, "widening raised the channel depth");
    return out;
}

IntervalRep k53_template() {
    IntervalRep r;
    r.t = 2;
    auto iv = [](int lo, int hi) { return Interval{Rational(lo), Rational(hi)}; };
    r.per_vertex = {
        {iv(9, 15), iv(30, 32)},   // 0
        {iv(23, 29), iv(2, 4)},    // 1
        {iv(37, 43), iv(16, 18)},  // 2
        {iv(51, 57), iv(72, 84)},  // 3
        {iv(65, 71), iv(44, 46)},  // 4
        {iv(0, 10), iv(42, 52)},   // 5
        {iv(14, 24), iv(56, 66)},  // 6
        {iv(28, 38), iv(70, 80)},  // 7
    };
    return r;
}

Layout k53_gadget(int u, int v, Direction orient, bool mirror) {
    if (u < 0 || u > 7 || v < 0 || v > 7) fail(Errc::InvalidInput, "vertex id outside 0..7");
    bool u_small = u <= 4, v_small = v <= 4;
    if (u_small == v_small) fail(Errc::SameSide, "u and v lie in the same part");
    bool u_is_sink = (orient == Direction::A_to_B) ? !u_small : u_small;
    if (!u_is_sink) fail(Errc::InvalidInput, "u must be in the sink part, v in the source part");

    // Assign template roles: the widest-spread pair of the template goes to
    // u and v so they own the extreme bars; the rest fill in by ascending id.
    // Template id 5 owns the leftmost bar, template id 3 the rightmost.
    std::vector<int> role(8, -1);
    int plays_left, plays_right;  // actual ids taking template 5 resp. 3
    bool internal_mirror;
    if (orient == Direction::A_to_B) {
        plays_left = u;  // sink side is 5..7, matching template id 5
        plays_right = v;
        internal_mirror = false;
    } else {
        plays_left = v;  // source side is 5..7 here
        plays_right = u;
        internal_mirror = true;
    }
    role[static_cast<size_t>(plays_left)] = 5;
    role[static_cast<size_t>(plays_right)] = 3;
    int next_small = 0;
    const int small_roles[4] = {0, 1, 2, 4};
    for (int w = 0; w <= 4; ++w)
        if (role[static_cast<size_t>(w)] < 0) role[static_cast<size_t>(w)] = small_roles[next_small++];
    int next_big = 6;
    for (int w = 5; w <= 7; ++w)
        if (role[static_cast<size_t>(w)] < 0) role[static_cast<size_t>(w)] = next_big++;

    IntervalRep tmpl = k53_template();
    IntervalRep rep;
    rep.t = 2;
    rep.per_vertex.resize(8);
    for (int w = 0; w < 8; ++w)
        rep.per_vertex[static_cast<size_t>(w)] =
            tmpl.per_vertex[static_cast<size_t>(role[static_cast<size_t>(w)])];

    Layout l = interval_to_bars(rep, oriented_complete_bipartite(5, 3, orient));
    if (internal_mirror) l = mirrored_x(l);
    if (mirror) l = mirrored_x(l);

    if (!is_displayed(l)) fail(Errc::Internal, "gadget lost a private strip");
    int want_left = mirror ? v : u;
    int want_right = mirror ? u : v;
    if (l.bars[static_cast<size_t>(unique_leftmost_bar(l))].vertex != want_left ||
        l.bars[static_cast<size_t>(unique_rightmost_bar(l))].vertex != want_right)
        fail(Errc::Internal, "gadget extremes landed on the wrong vertices");
    return l;
}

}  // namespace barviz
