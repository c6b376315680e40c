#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

Graph complete_partite(const std::vector<int>& class_sizes);

// G(n, p) start, then edges to random non-neighbors are added at deficient
// vertices until the minimum degree is at least d. Deterministic per seed.
// Throws PreconditionError if d >= n or d < 0.
Graph random_min_degree(int n, int d, std::uint64_t seed, double p = 0.0);

// Uniform G(n, p).
Graph random_graph(int n, double p, std::uint64_t seed);

// "cycle:N", "path:N", "star:N" (K_{1,N}), "complete:N", "petersen".
Graph named_graph(const std::string& id);
std::vector<std::string> named_graph_ids();

}  // namespace antimagic
