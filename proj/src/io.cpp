#include "barviz/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "barviz/errors.hpp"

namespace barviz {

namespace {

struct Line {
    int number = 0;                   // 1-based position in the file
    std::vector<std::string> tokens;  // comment-stripped, whitespace-split
};

[[noreturn]] void parse_fail(int line, const std::string& what) {
    fail(Errc::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (size_t hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        std::istringstream ls(raw);
        Line line;
        line.number = number;
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) out.push_back(line);
    }
    return out;
}

int parse_int(const Line& line, const std::string& tok) {
    size_t start = tok.size() > 1 && tok[0] == '-' ? 1 : 0;
    if (start == tok.size()) parse_fail(line.number, "expected an integer, got '" + tok + "'");
    for (size_t i = start; i < tok.size(); ++i)
        if (tok[i] < '0' || tok[i] > '9')
            parse_fail(line.number, "expected an integer, got '" + tok + "'");
    try {
        return std::stoi(tok);
    } catch (const std::exception&) {
        parse_fail(line.number, "integer out of range: '" + tok + "'");
    }
}

Rational parse_rational_at(const Line& line, const std::string& tok) {
    try {
        return parse_rational(tok);
    } catch (const Error&) {
        parse_fail(line.number, "expected a rational, got '" + tok + "'");
    }
}

// Header of the shape `<keyword> <field>=<int>`.
int parse_header(const std::vector<Line>& lines, const std::string& keyword,
                 const std::string& field) {
    if (lines.empty()) fail(Errc::ParseError, "line 1: empty input, expected '" + keyword + "'");
    const Line& h = lines.front();
    if (h.tokens[0] != keyword || h.tokens.size() != 2)
        parse_fail(h.number, "expected header '" + keyword + " " + field + "=<int>'");
    const std::string& kv = h.tokens[1];
    if (kv.rfind(field + "=", 0) != 0)
        parse_fail(h.number, "expected header field '" + field + "='");
    return parse_int(h, kv.substr(field.size() + 1));
}

int parse_vertex(const Line& line, const std::string& tok, int n) {
    int v = parse_int(line, tok);
    if (v < 0 || v >= n) parse_fail(line.number, "vertex " + tok + " outside 0.." + std::to_string(n - 1));
    return v;
}

}  // namespace

std::string serialize_digraph(const Digraph& g) {
    Digraph c = g;
    c.normalize();
    std::ostringstream out;
    out << "digraph n=" << c.n << "\n";
    for (auto [u, v] : c.arcs) out << "a " << u << " " << v << "\n";
    return out.str();
}

Digraph parse_digraph(const std::string& text) {
    std::vector<Line> lines = tokenize(text);
    Digraph g;
    g.n = parse_header(lines, "digraph", "n");
    if (g.n < 0) parse_fail(lines.front().number, "negative vertex count");
    for (size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.tokens[0] != "a" || l.tokens.size() != 3)
            parse_fail(l.number, "expected 'a <u> <v>'");
        int u = parse_vertex(l, l.tokens[1], g.n);
        int v = parse_vertex(l, l.tokens[2], g.n);
        if (u == v) parse_fail(l.number, "self-loop");
        g.add_arc(u, v);
    }
    g.normalize();
    return g;
}

std::string serialize_graph(const Graph& g) {
    Graph c = g;
    c.normalize();
    std::ostringstream out;
    out << "graph n=" << c.n << "\n";
    for (auto [u, v] : c.edges) out << "e " << u << " " << v << "\n";
    return out.str();
}

Graph parse_graph(const std::string& text) {
    std::vector<Line> lines = tokenize(text);
    Graph g;
    g.n = parse_header(lines, "graph", "n");
    if (g.n < 0) parse_fail(lines.front().number, "negative vertex count");
    for (size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.tokens[0] != "e" || l.tokens.size() != 3)
            parse_fail(l.number, "expected 'e <u> <v>'");
        int u = parse_vertex(l, l.tokens[1], g.n);
        int v = parse_vertex(l, l.tokens[2], g.n);
        if (u == v) parse_fail(l.number, "self-loop");
        g.add_edge(u, v);
    }
    g.normalize();
    return g;
}

std::string serialize_layout(const Layout& l) {
    std::vector<Bar> bars = l.bars;
    std::sort(bars.begin(), bars.end(), [](const Bar& a, const Bar& b) {
        if (a.y != b.y) return a.y < b.y;
        if (a.x_lo != b.x_lo) return a.x_lo < b.x_lo;
        if (a.x_hi != b.x_hi) return a.x_hi < b.x_hi;
        return a.vertex < b.vertex;
    });
    std::ostringstream out;
    out << "layout t=" << l.declared_t << "\n";
    for (const Bar& b : bars)
        out << "bar " << b.vertex << " " << to_string(b.y) << " " << to_string(b.x_lo) << " "
            << to_string(b.x_hi) << "\n";
    return out.str();
}

Layout parse_layout(const std::string& text) {
    std::vector<Line> lines = tokenize(text);
    Layout l;
    l.declared_t = parse_header(lines, "layout", "t");
    if (l.declared_t < 0) parse_fail(lines.front().number, "negative bar budget");
    for (size_t i = 1; i < lines.size(); ++i) {
        const Line& ln = lines[i];
        if (ln.tokens[0] != "bar" || ln.tokens.size() != 5)
            parse_fail(ln.number, "expected 'bar <vertex> <y> <x_lo> <x_hi>'");
        Bar b;
        b.vertex = parse_int(ln, ln.tokens[1]);
        if (b.vertex < 0) parse_fail(ln.number, "negative vertex id");
        b.y = parse_rational_at(ln, ln.tokens[2]);
        b.x_lo = parse_rational_at(ln, ln.tokens[3]);
        b.x_hi = parse_rational_at(ln, ln.tokens[4]);
        l.bars.push_back(b);
    }
    return l;
}

std::string serialize_intervals(const IntervalRep& r) {
    std::ostringstream out;
    out << "intervals t=" << r.t << "\n";
    for (size_t v = 0; v < r.per_vertex.size(); ++v) {
        auto ivs = r.per_vertex[v];
        std::sort(ivs.begin(), ivs.end());
        for (const auto& [lo, hi] : ivs)
            out << "iv " << v << " " << to_string(lo) << " " << to_string(hi) << "\n";
    }
    return out.str();
}

IntervalRep parse_intervals(const std::string& text) {
    std::vector<Line> lines = tokenize(text);
    IntervalRep r;
    r.t = parse_header(lines, "intervals", "t");
    if (r.t < 1) parse_fail(lines.front().number, "interval budget must be positive");
    for (size_t i = 1; i < lines.size(); ++i) {
        const Line& ln = lines[i];
        if (ln.tokens[0] != "iv" || ln.tokens.size() != 4)
            parse_fail(ln.number, "expected 'iv <vertex> <lo> <hi>'");
        int v = parse_int(ln, ln.tokens[1]);
        if (v < 0) parse_fail(ln.number, "negative vertex id");
        Rational lo = parse_rational_at(ln, ln.tokens[2]);
        Rational hi = parse_rational_at(ln, ln.tokens[3]);
        if (lo > hi) parse_fail(ln.number, "interval ends before it starts");
        if (static_cast<size_t>(v) >= r.per_vertex.size())
            r.per_vertex.resize(static_cast<size_t>(v) + 1);
        r.per_vertex[static_cast<size_t>(v)].emplace_back(lo, hi);
    }
    return r;
}

std::string serialize_path_decomposition(const PathDecomposition& d) {
    std::ostringstream out;
    out << "pathdecomp m=" << d.m << "\n";
    for (size_t i = 0; i < d.paths.size(); ++i) {
        out << "path " << (i + 1);
        for (int v : d.paths[i]) out << " " << v;
        out << "\n";
    }
    for (size_t i = 0; i < d.central.size(); ++i)
        out << "central " << (i + 1) << " " << d.central[i].first << " " << d.central[i].second
            << "\n";
    return out.str();
}

std::string serialize_cycle(const HamCycle& c) {
    std::ostringstream out;
    out << "cycle";
    for (int v : c.verts) out << " " << v;
    out << "\n";
    return out.str();
}

HamCycle parse_cycle(const std::string& text) {
    std::vector<Line> lines = tokenize(text);
    if (lines.empty()) fail(Errc::ParseError, "line 1: empty input, expected 'cycle ...'");
    if (lines.size() > 1) parse_fail(lines[1].number, "unexpected extra line");
    const Line& l = lines.front();
    if (l.tokens[0] != "cycle" || l.tokens.size() < 2)
        parse_fail(l.number, "expected 'cycle <v0> <v1> ...'");
    HamCycle c;
    for (size_t i = 1; i < l.tokens.size(); ++i) {
        int v = parse_int(l, l.tokens[i]);
        if (v < 0) parse_fail(l.number, "negative vertex id");
        c.verts.push_back(v);
    }
    return c;
}

std::string serialize_roles(const TestDigraph& t) {
    std::ostringstream out;
    out << "roles\n";
    out << "role hn " << t.h.n << "\n";
    out << "role z " << t.z << "\n";
    out << "role h1 " << t.h1 << "\n";
    out << "role h2 " << t.h2 << "\n";
    out << "role h3 " << t.h3 << "\n";
    for (size_t v = 0; v < t.m_base.size(); ++v)
        out << "role m" << v << " " << t.m_base[v] << "\n";
    return out.str();
}

TestDigraph reassemble_test_digraph(const Digraph& fh, const std::string& roles_text) {
    std::vector<Line> lines = tokenize(roles_text);
    if (lines.empty() || lines.front().tokens != std::vector<std::string>{"roles"})
        fail(Errc::ParseError, "line 1: expected 'roles' header");
    int hn = -1, z = -1, h1 = -1, h2 = -1, h3 = -1;
    std::vector<std::pair<int, int>> m_entries;
    for (size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.tokens[0] != "role" || l.tokens.size() != 3)
            parse_fail(l.number, "expected 'role <name> <id>'");
        const std::string& name = l.tokens[1];
        int id = parse_int(l, l.tokens[2]);
        if (name == "hn")
            hn = id;
        else if (name == "z")
            z = id;
        else if (name == "h1")
            h1 = id;
        else if (name == "h2")
            h2 = id;
        else if (name == "h3")
            h3 = id;
        else if (name.size() > 1 && name[0] == 'm')
            m_entries.emplace_back(parse_int(l, name.substr(1)), id);
        else
            parse_fail(l.number, "unknown role '" + name + "'");
    }
    if (hn < 0 || z < 0 || h1 < 0 || h2 < 0 || h3 < 0)
        fail(Errc::ParseError, "line 1: role map is missing a named entry");
    if (static_cast<int>(m_entries.size()) != hn)
        fail(Errc::ParseError, "line 1: role map must name one copy per source vertex");

    // Recover the source graph and its orientation from the low ids, then
    // rebuild and insist the rebuilt instance matches arc for arc.
    Digraph seed;
    seed.n = hn;
    for (auto [u, v] : fh.arcs)
        if (u < hn && v < hn) seed.add_arc(u, v);
    seed.normalize();
    TestDigraph t = build_test_digraph(underlying(seed), z, seed);
    if (t.h1 != h1 || t.h2 != h2 || t.h3 != h3)
        fail(Errc::InvalidInput, "role map disagrees with the copy layout");
    for (auto [v, base] : m_entries)
        if (v < 0 || v >= hn || t.m_base[static_cast<size_t>(v)] != base)
            fail(Errc::InvalidInput, "role map disagrees with the copy layout");
    Digraph canon = fh;
    canon.normalize();
    if (canon.n != t.g.n || canon.arcs != t.g.arcs)
        fail(Errc::InvalidInput, "digraph is not the instance its role map describes");
    return t;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::InvalidInput, "cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::InvalidInput, "cannot open '" + path + "' for writing");
    out << content;
    if (!out.good()) fail(Errc::InvalidInput, "failed writing '" + path + "'");
}

}  // namespace barviz
