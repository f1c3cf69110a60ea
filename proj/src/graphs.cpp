#include "barviz/graphs.hpp"

#include <algorithm>
#include <queue>

namespace barviz {

void Digraph::normalize() {
    for (auto& [u, v] : arcs) {
        if (u == v) fail(Errc::Internal, "loop arc");
        if (u < 0 || v < 0 || u >= n || v >= n) fail(Errc::Internal, "arc endpoint out of range");
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
}

bool Digraph::has_arc(int u, int v) const {
    return std::binary_search(arcs.begin(), arcs.end(), std::make_pair(u, v));
}

void Graph::add_edge(int u, int v) {
    edges.emplace_back(std::min(u, v), std::max(u, v));
}

void Graph::normalize() {
    for (auto& [u, v] : edges) {
        if (u == v) fail(Errc::Internal, "loop edge");
        if (u < 0 || v < 0 || u >= n || v >= n) fail(Errc::Internal, "edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

Graph underlying(const Digraph& g) {
    Graph h;
    h.n = g.n;
    for (auto [u, v] : g.arcs) h.add_edge(u, v);
    h.normalize();
    return h;
}

Digraph transitive_tournament(int n) {
    if (n == 0) fail(Errc::EmptyGraph, "transitive tournament needs at least one vertex");
    if (n < 0) fail(Errc::BadSize, "negative vertex count");
    Digraph g;
    g.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_arc(i, j);
    g.normalize();
    return g;
}

Digraph oriented_complete_bipartite(int m, int n, Direction direction) {
    if (m < 1 || n < 1) fail(Errc::BadSize, "both parts need at least one vertex");
    Digraph g;
    g.n = m + n;
    for (int a = 0; a < m; ++a)
        for (int b = m; b < m + n; ++b) {
            if (direction == Direction::A_to_B)
                g.add_arc(a, b);
            else
                g.add_arc(b, a);
        }
    g.normalize();
    return g;
}

Graph counterexample_graph(CounterexampleKind kind) {
    Graph g;
    g.n = 20;
    if (kind == CounterexampleKind::Ghat) {
        for (int i = 0; i < 18; ++i) g.add_edge(i, (i + 1) % 18);
        for (int i = 0; i < 18; i += 2) {
            g.add_edge(18, i);
            g.add_edge(19, i);
        }
    } else {
        for (int i = 0; i < 18; i += 2) {
            g.add_edge(18, i);
            g.add_edge(19, i);
            g.add_edge(i, i + 1);  // pendant
        }
    }
    g.normalize();
    return g;
}

bool has_consistent_cycle(const Digraph& g) {
    std::vector<int> indeg(g.n, 0);
    for (auto [u, v] : g.arcs) ++indeg[v];
    std::vector<std::vector<int>> out = out_adjacency(g);
    std::queue<int> q;
    for (int v = 0; v < g.n; ++v)
        if (indeg[v] == 0) q.push(v);
    int removed = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        ++removed;
        for (int w : out[v])
            if (--indeg[w] == 0) q.push(w);
    }
    return removed != g.n;
}

bool validate_cubic_triangle_free(const Graph& h) {
    std::vector<std::vector<int>> adj = adjacency(h);
    for (int v = 0; v < h.n; ++v)
        if (adj[v].size() != 3) return false;
    for (auto [u, v] : h.edges)
        for (int w : adj[u])
            if (w != v && h.has_edge(v, w)) return false;
    return true;
}

std::vector<std::vector<int>> adjacency(const Graph& g) {
    std::vector<std::vector<int>> adj(g.n);
    for (auto [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

std::vector<std::vector<int>> out_adjacency(const Digraph& g) {
    std::vector<std::vector<int>> adj(g.n);
    for (auto [u, v] : g.arcs) adj[u].push_back(v);
    return adj;
}

std::vector<std::vector<int>> in_adjacency(const Digraph& g) {
    std::vector<std::vector<int>> adj(g.n);
    for (auto [u, v] : g.arcs) adj[v].push_back(u);
    return adj;
}

std::vector<int> sources(const Digraph& g) {
    std::vector<int> indeg(g.n, 0);
    for (auto [u, v] : g.arcs) ++indeg[v];
    std::vector<int> out;
    for (int v = 0; v < g.n; ++v)
        if (indeg[v] == 0) out.push_back(v);
    return out;
}

std::vector<int> sinks(const Digraph& g) {
    std::vector<int> outdeg(g.n, 0);
    for (auto [u, v] : g.arcs) ++outdeg[u];
    std::vector<int> out;
    for (int v = 0; v < g.n; ++v)
        if (outdeg[v] == 0) out.push_back(v);
    return out;
}

bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    std::vector<std::vector<int>> adj = adjacency(g);
    std::vector<char> seen(g.n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                q.push(w);
            }
    }
    return count == g.n;
}

bool is_spanning_subgraph(const Graph& sub, const Graph& super) {
    if (sub.n != super.n) return false;
    for (auto [u, v] : sub.edges)
        if (!super.has_edge(u, v)) return false;
    return true;
}

Graph complete_graph(int n) {
    if (n < 0) fail(Errc::BadSize, "negative vertex count");
    Graph g;
    g.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    g.normalize();
    return g;
}

Graph complete_bipartite_graph(int m, int n) {
    if (m < 0 || n < 0) fail(Errc::BadSize, "negative part size");
    Graph g;
    g.n = m + n;
    for (int a = 0; a < m; ++a)
        for (int b = m; b < m + n; ++b) g.add_edge(a, b);
    g.normalize();
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) fail(Errc::BadSize, "cycle needs at least 3 vertices");
    Graph g;
    g.n = n;
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    g.normalize();
    return g;
}

Graph path_graph(int n) {
    if (n < 1) fail(Errc::BadSize, "path needs at least 1 vertex");
    Graph g;
    g.n = n;
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    g.normalize();
    return g;
}

Graph lcf_graph(int n, const std::vector<int>& pattern) {
    if (n < 3 || pattern.empty()) fail(Errc::BadSize, "bad LCF parameters");
    Graph g;
    g.n = n;
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    for (int i = 0; i < n; ++i) {
        int jump = pattern[static_cast<size_t>(i) % pattern.size()];
        int j = ((i + jump) % n + n) % n;
        if (j != i) g.add_edge(i, j);
    }
    g.normalize();
    return g;
}

Graph k33_graph() { return complete_bipartite_graph(3, 3); }

Graph cube_graph() { return lcf_graph(8, {3, -3}); }

Graph petersen_graph() {
    Graph g;
    g.n = 10;
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer 5-cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner 5-cycle as pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    g.normalize();
    return g;
}

Graph franklin_graph() { return lcf_graph(12, {5, -5}); }

Graph heawood_graph() { return lcf_graph(14, {5, -5}); }

Graph mobius_kantor_graph() { return lcf_graph(16, {5, -5}); }

std::vector<NamedGraph> cubic_triangle_free_corpus() {
    return {
        {"k33", k33_graph()},
        {"cube", cube_graph()},
        {"petersen", petersen_graph()},
        {"franklin", franklin_graph()},
        {"heawood", heawood_graph()},
        {"mobius-kantor", mobius_kantor_graph()},
    };
}

}  // namespace barviz
