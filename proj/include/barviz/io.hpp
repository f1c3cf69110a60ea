#pragma once

#include <string>
#include <vector>

#include "barviz/geometry.hpp"
#include "barviz/graphs.hpp"
#include "barviz/intervals.hpp"
#include "barviz/reduction.hpp"
#include "barviz/tournaments.hpp"

namespace barviz {

// Text formats, one record per line, '#' starts a comment, 0-based ids.
// Serialization is canonical (sorted records), so parse-then-serialize is
// the identity on canonical files.
//
//   digraph n=<N>      then  a <u> <v>
//   graph n=<N>        then  e <u> <v>
//   layout t=<T>       then  bar <vertex> <y> <x_lo> <x_hi>   (rationals p/q)
//   intervals t=<T>    then  iv <vertex> <lo> <hi>            (vertex = line group)
//   pathdecomp m=<M>   then  path <i> <v...> / central <i> <a> <b>
//   roles              then  role <name> <id>
//   cycle <v0> <v1> ...

std::string serialize_digraph(const Digraph& g);
Digraph parse_digraph(const std::string& text);

std::string serialize_graph(const Graph& g);
Graph parse_graph(const std::string& text);

std::string serialize_layout(const Layout& l);
Layout parse_layout(const std::string& text);

std::string serialize_intervals(const IntervalRep& r);
IntervalRep parse_intervals(const std::string& text);

std::string serialize_path_decomposition(const PathDecomposition& d);

std::string serialize_cycle(const HamCycle& c);
HamCycle parse_cycle(const std::string& text);

// Role sidecar for a reduction instance. Records hn (vertex count of H), z,
// the three copy bases and each per-vertex copy base.
std::string serialize_roles(const TestDigraph& t);

// Rebuilds the full TestDigraph from the instance digraph plus its sidecar:
// H and the seed orientation are recovered from the arcs among ids 0..hn-1.
TestDigraph reassemble_test_digraph(const Digraph& fh, const std::string& roles_text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace barviz
