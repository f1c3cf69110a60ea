#include "barviz/recognize.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/biconnected_components.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace barviz {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                          boost::property<boost::edge_index_t, int>>;

BoostGraph to_boost(const Graph& g) {
    BoostGraph bg(static_cast<size_t>(g.n));
    for (auto [u, v] : g.edges)
        boost::add_edge(static_cast<size_t>(u), static_cast<size_t>(v), bg);
    int idx = 0;
    auto index_map = boost::get(boost::edge_index, bg);
    for (auto [ei, eend] = boost::edges(bg); ei != eend; ++ei) boost::put(index_map, *ei, idx++);
    return bg;
}

// Faces of a rotation system, traced over half-edges with the convention
// next((a,b)) = (b, successor of a in rotation[b]).
struct FaceTrace {
    std::map<std::pair<int, int>, int> face_of;  // half-edge -> face id
    int count = 0;
};

FaceTrace trace_faces(const std::vector<std::vector<int>>& rot) {
    int n = static_cast<int>(rot.size());
    std::vector<std::map<int, int>> pos(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v)
        for (size_t i = 0; i < rot[static_cast<size_t>(v)].size(); ++i)
            pos[static_cast<size_t>(v)][rot[static_cast<size_t>(v)][i]] = static_cast<int>(i);
    FaceTrace ft;
    for (int v = 0; v < n; ++v) {
        for (int nb : rot[static_cast<size_t>(v)]) {
            std::pair<int, int> he(v, nb);
            if (ft.face_of.count(he)) continue;
            std::pair<int, int> cur = he;
            do {
                ft.face_of[cur] = ft.count;
                int b = cur.second;
                const std::vector<int>& rb = rot[static_cast<size_t>(b)];
                int p = pos[static_cast<size_t>(b)].at(cur.first);
                cur = {b, rb[(static_cast<size_t>(p) + 1) % rb.size()]};
            } while (cur != he);
            ++ft.count;
        }
    }
    return ft;
}

std::vector<int> topological_order(const Digraph& g) {
    std::vector<int> indeg(static_cast<size_t>(g.n), 0);
    for (auto [u, v] : g.arcs) ++indeg[static_cast<size_t>(v)];
    std::vector<std::vector<int>> out = out_adjacency(g);
    std::queue<int> q;
    for (int v = 0; v < g.n; ++v)
        if (indeg[static_cast<size_t>(v)] == 0) q.push(v);
    std::vector<int> order;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        order.push_back(v);
        for (int w : out[static_cast<size_t>(v)])
            if (--indeg[static_cast<size_t>(w)] == 0) q.push(w);
    }
    if (static_cast<int>(order.size()) != g.n) fail(Errc::Internal, "topological sort on cyclic digraph");
    return order;
}

// Longest path lengths from `src`, every vertex assumed reachable.
std::vector<int> longest_from(const Digraph& g, int src) {
    std::vector<int> order = topological_order(g);
    std::vector<int> dist(static_cast<size_t>(g.n), -1);
    dist[static_cast<size_t>(src)] = 0;
    std::vector<std::vector<int>> out = out_adjacency(g);
    for (int v : order) {
        if (dist[static_cast<size_t>(v)] < 0) continue;
        for (int w : out[static_cast<size_t>(v)])
            dist[static_cast<size_t>(w)] =
                std::max(dist[static_cast<size_t>(w)], dist[static_cast<size_t>(v)] + 1);
    }
    for (int v = 0; v < g.n; ++v)
        if (dist[static_cast<size_t>(v)] < 0) fail(Errc::Internal, "vertex unreachable from source");
    return dist;
}

}  // namespace

bool is_planar(const Graph& g, PlanarEmbedding* emb) {
    BoostGraph bg = to_boost(g);
    using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
    std::vector<std::vector<EdgeDesc>> storage(static_cast<size_t>(g.n));
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding = storage.data());
    if (!planar) return false;
    if (emb) {
        emb->rotation.assign(static_cast<size_t>(g.n), {});
        for (int v = 0; v < g.n; ++v)
            for (const EdgeDesc& e : storage[static_cast<size_t>(v)]) {
                int a = static_cast<int>(boost::source(e, bg));
                int b = static_cast<int>(boost::target(e, bg));
                emb->rotation[static_cast<size_t>(v)].push_back(a == v ? b : a);
            }
        if (g.edges.empty()) {
            emb->face_count = 1;  // the whole plane
        } else {
            emb->face_count = trace_faces(emb->rotation).count;
        }
        emb->outer_face = 0;  // any face may serve as the outer one
    }
    return planar;
}

std::vector<int> cut_vertices(const Graph& g) {
    BoostGraph bg = to_boost(g);
    std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> arts;
    boost::articulation_points(bg, std::back_inserter(arts));
    std::vector<int> out;
    out.reserve(arts.size());
    for (auto v : arts) out.push_back(static_cast<int>(v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

AugmentedDigraph augment_st(const Digraph& g) {
    AugmentedDigraph a;
    a.g = g;
    a.s = g.n;
    a.t = g.n + 1;
    a.g.n = g.n + 2;
    for (int v : sources(g)) {
        a.g.add_arc(a.s, v);
        a.added.emplace_back(a.s, v);
    }
    for (int v : sinks(g)) {
        a.g.add_arc(v, a.t);
        a.added.emplace_back(v, a.t);
    }
    a.g.add_arc(a.s, a.t);
    a.added.emplace_back(a.s, a.t);
    a.g.normalize();
    return a;
}

Recognition is_bar_visibility_digraph(const Digraph& g) {
    AugmentedDigraph aug = augment_st(g);
    if (!is_planar(underlying(aug.g))) return {false, Reason::NonPlanar};
    if (has_consistent_cycle(aug.g)) return {false, Reason::ConsistentCycle};
    return {true, Reason::NonPlanar};
}

namespace {

// One handedness attempt for the dual numbering of the st-embedding.
// Returns x-coordinates for dual nodes (faces, with the outer face split
// into sstar/tstar) or nothing when this handedness is inconsistent.
struct DualAttempt {
    std::vector<int> x;
    int sstar = 0, tstar = 0;
};

std::optional<DualAttempt> try_dual(const Digraph& gpp, const FaceTrace& ft, int fo, bool flip) {
    int sstar = ft.count, tstar = ft.count + 1;
    int nd = ft.count + 2;
    auto mapped = [&](int a, int b) {
        int f = ft.face_of.at({a, b});
        if (f != fo) return f;
        bool aligned = gpp.has_arc(a, b);
        return (aligned != flip) ? tstar : sstar;
    };
    Digraph dual;
    dual.n = nd;
    for (auto [u, v] : gpp.arcs) {
        int fa = mapped(u, v);
        int fb = mapped(v, u);
        int left = flip ? fa : fb;
        int right = flip ? fb : fa;
        if (left == right) fail(Errc::Internal, "edge with one face on both sides");
        dual.add_arc(left, right);
    }
    dual.normalize();
    // The split outer face must act as unique source and unique sink, every
    // other used dual node needs both in- and out-arcs, and no arc may touch
    // the retired combined-face id.
    std::vector<int> indeg(static_cast<size_t>(nd), 0), outdeg(static_cast<size_t>(nd), 0);
    for (auto [u, v] : dual.arcs) {
        ++outdeg[static_cast<size_t>(u)];
        ++indeg[static_cast<size_t>(v)];
    }
    if (indeg[static_cast<size_t>(fo)] + outdeg[static_cast<size_t>(fo)] != 0)
        fail(Errc::Internal, "arc incident to the retired outer-face id");
    if (indeg[static_cast<size_t>(sstar)] != 0 || outdeg[static_cast<size_t>(tstar)] != 0)
        return std::nullopt;
    if (outdeg[static_cast<size_t>(sstar)] == 0 || indeg[static_cast<size_t>(tstar)] == 0)
        return std::nullopt;
    for (int f = 0; f < ft.count; ++f) {
        if (f == fo) continue;
        if (indeg[static_cast<size_t>(f)] == 0 || outdeg[static_cast<size_t>(f)] == 0)
            return std::nullopt;
    }
    if (has_consistent_cycle(dual)) return std::nullopt;

    DualAttempt at;
    at.sstar = sstar;
    at.tstar = tstar;
    // Longest path from sstar; fo is untouched, give it 0 by leaving it out.
    std::vector<int> order = topological_order(dual);
    at.x.assign(static_cast<size_t>(nd), 0);
    std::vector<std::vector<int>> out = out_adjacency(dual);
    for (int v : order)
        for (int w : out[static_cast<size_t>(v)])
            at.x[static_cast<size_t>(w)] =
                std::max(at.x[static_cast<size_t>(w)], at.x[static_cast<size_t>(v)] + 1);
    for (int f = 0; f < nd; ++f)
        if (f != at.tstar && f != fo && at.x[static_cast<size_t>(f)] >= at.x[static_cast<size_t>(at.tstar)])
            return std::nullopt;
    return at;
}

}  // namespace

Layout construct_1bar(const Digraph& g) {
    Recognition rec = is_bar_visibility_digraph(g);
    if (!rec.ok)
        fail(Errc::NotRepresentable,
             rec.reason == Reason::NonPlanar ? "NonPlanar" : "ConsistentCycle");
    Layout result;
    result.declared_t = 1;
    if (g.n == 0) return result;

    AugmentedDigraph aug = augment_st(g);
    int s = aug.s, t = aug.t;
    int big_n = g.n + 2;

    PlanarEmbedding emb;
    if (!is_planar(underlying(aug.g), &emb)) fail(Errc::Internal, "augmentation not planar");

    // Remove the st edge from the rotation system; the two faces flanking it
    // merge, guaranteeing a face with both s and t on its boundary.
    std::vector<std::vector<int>> rot = emb.rotation;
    auto drop_neighbor = [](std::vector<int>& r, int x) {
        auto it = std::find(r.begin(), r.end(), x);
        if (it == r.end()) fail(Errc::Internal, "rotation misses expected neighbor");
        r.erase(it);
    };
    drop_neighbor(rot[static_cast<size_t>(s)], t);
    drop_neighbor(rot[static_cast<size_t>(t)], s);

    Digraph gpp = aug.g;
    gpp.arcs.erase(std::remove(gpp.arcs.begin(), gpp.arcs.end(), std::make_pair(s, t)),
                   gpp.arcs.end());

    FaceTrace ft = trace_faces(rot);
    std::vector<char> has_s(static_cast<size_t>(ft.count), 0), has_t(static_cast<size_t>(ft.count), 0);
    for (const auto& [he, f] : ft.face_of) {
        if (he.first == s) has_s[static_cast<size_t>(f)] = 1;
        if (he.first == t) has_t[static_cast<size_t>(f)] = 1;
    }
    int fo = -1;
    for (int f = 0; f < ft.count; ++f)
        if (has_s[static_cast<size_t>(f)] && has_t[static_cast<size_t>(f)]) {
            fo = f;
            break;
        }
    if (fo < 0) fail(Errc::Internal, "no face holds both terminals");

    bool flip = false;
    std::optional<DualAttempt> dual = try_dual(gpp, ft, fo, false);
    if (!dual) {
        flip = true;
        dual = try_dual(gpp, ft, fo, true);
    }
    if (!dual) fail(Errc::Internal, "no consistent dual numbering");
    auto mapped = [&](int a, int b) {
        int f = ft.face_of.at({a, b});
        if (f != fo) return f;
        bool aligned = gpp.has_arc(a, b);
        return (aligned != flip) ? dual->tstar : dual->sstar;
    };

    std::vector<int> y = longest_from(gpp, s);

    Layout full;
    full.declared_t = 1;
    const std::vector<int>& x = dual->x;
    Rational x_lo_st = x[static_cast<size_t>(dual->sstar)];
    Rational x_hi_st = x[static_cast<size_t>(dual->tstar)];
    full.bars.push_back({s, Rational(y[static_cast<size_t>(s)]), x_lo_st, x_hi_st});
    full.bars.push_back({t, Rational(y[static_cast<size_t>(t)]), x_lo_st, x_hi_st});

    for (int v = 0; v < big_n; ++v) {
        if (v == s || v == t) continue;
        const std::vector<int>& rv = rot[static_cast<size_t>(v)];
        int deg = static_cast<int>(rv.size());
        if (deg == 0) fail(Errc::Internal, "isolated vertex in st-augmentation");
        std::vector<char> incoming(static_cast<size_t>(deg), 0);
        for (int i = 0; i < deg; ++i)
            incoming[static_cast<size_t>(i)] = gpp.has_arc(rv[static_cast<size_t>(i)], v) ? 1 : 0;
        std::vector<int> corners;  // positions i where block of i ends before i+1
        for (int i = 0; i < deg; ++i)
            if (incoming[static_cast<size_t>(i)] !=
                incoming[static_cast<size_t>((i + 1) % static_cast<size_t>(deg))])
                corners.push_back(i);
        if (corners.size() != 2)
            fail(Errc::Internal, "vertex rotation is not bimodal");
        std::vector<int> xs;
        for (int i : corners) {
            int nb = rv[(static_cast<size_t>(i) + 1) % static_cast<size_t>(deg)];
            int f = mapped(v, nb);
            xs.push_back(x[static_cast<size_t>(f)]);
        }
        if (xs[0] == xs[1]) fail(Errc::Internal, "zero-width vertex extent");
        full.bars.push_back({v, Rational(y[static_cast<size_t>(v)]),
                             Rational(std::min(xs[0], xs[1])), Rational(std::max(xs[0], xs[1]))});
    }

    if (!verify_layout(full, gpp).empty())
        fail(Errc::Internal, "tessellation self-check failed");

    // s and t sit on strictly extreme levels, so deleting their bars removes
    // only their own visibilities.
    for (const Bar& b : full.bars)
        if (b.vertex != s && b.vertex != t) result.bars.push_back(b);
    return result;
}

bool is_bar_visibility_graph(const Graph& g) {
    if (!is_planar(g)) return false;
    std::vector<int> cuts = cut_vertices(g);
    if (cuts.empty()) return true;
    // Planar with all cut vertices on a common face iff adding an apex
    // adjacent to every cut vertex stays planar.
    Graph aug = g;
    aug.n = g.n + 1;
    for (int c : cuts) aug.add_edge(c, g.n);
    aug.normalize();
    return is_planar(aug);
}

}  // namespace barviz
