#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

// Edge-list document:
//   n m
//   u v        (m lines)
// Blank lines and lines starting with '#' are ignored. Errors carry the
// 1-based line number.
Graph parse_graph(std::string_view text);
std::string emit_graph(const Graph& g);

// graph6 encoding of simple undirected graphs (one graph per line).
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view line);

// One graph6 string per non-empty line.
std::vector<Graph> parse_graph6_lines(std::string_view text);

// Certificate: "u v label" per edge, "vertex sum" per vertex, then "OK" or
// "COLLISION u v" (or "NOT_BIJECTION").
std::string emit_certificate(const Graph& g, const Labeling& l);

struct Certificate {
  Graph graph;
  Labeling labeling;
  WeightMap claimed_sums;
  bool claimed_ok = false;
};

Certificate parse_certificate(std::string_view text);

std::string read_text(const std::string& path);  // "-" reads stdin

}  // namespace antimagic
