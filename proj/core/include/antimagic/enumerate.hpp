#pragma once

#include <string>
#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

// Isomorphism-invariant certificate (graph6 of a canonical relabeling).
// Individualization-refinement without automorphism pruning; meant for the
// small graphs of exhaustive sweeps (n <= 12 or so).
std::string canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);

// All graphs on n vertices up to isomorphism, ordered by canonical form.
std::vector<Graph> enumerate_graphs(int n, bool connected_only);

}  // namespace antimagic
