#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

// Randomized labeling for graphs of large minimum degree, run as a Las Vegas
// loop: pair edges, draw a random pairing of the labels, orient each pair by
// a coin, verify; resample coins near collisions, then redraw the pairing.
struct DenseConfig {
  int d = 0;                    // <= 0 means ceil(3 ln n)
  int max_restarts = 1000;      // label pairings drawn before giving up
  int resample_rounds = 64;     // local coin resamplings per pairing
  std::uint64_t seed = 0;
  // Constants of the asymptotic argument. They do not steer the algorithm;
  // they are carried for reporting (point-probability and dependency bounds).
  double c1 = 1.0, c2 = 1.0, C = 3.0, C1 = 1.0, C2 = 1.0;
};

int default_min_degree_parameter(int n);

using Rng = std::mt19937_64;

struct DenseState {
  Graph graph;    // the input graph
  int d = 0;
  Labeling removed;                 // labels fixed while reducing; 0 on kept edges
  std::vector<EdgeId> kept;         // edges of the reduced graph, ascending
  std::vector<char> in_kept;        // per input edge
  std::vector<int> reduced_degree;  // d'(v)
  std::vector<char> in_b;           // degree > d in the reduced graph
  WeightMap carried;                // r(v): sum of removed labels at v
  Label t = 0;                      // labels 1..t remain for the kept edges
  bool parity_adjusted = false;     // one extra removal made t even

  std::vector<std::vector<EdgeId>> f_sets;  // F(v), empty outside B
  std::vector<std::vector<EdgeId>> h_sets;  // H(v)
  std::vector<EdgeId> partner;               // p(e), -1 on removed edges
  std::vector<std::array<EdgeId, 2>> edge_pairs;  // (smaller, larger) edge id, sorted
  std::vector<int> pair_of;                       // per input edge, -1 on removed

  std::vector<std::array<Label, 2>> label_pairs;  // per edge pair, (smaller, larger)
  WeightMap f_sums;                               // f(v)

  Graph reduced_graph() const;
};

// Requires min degree >= d. Throws PreconditionError otherwise.
DenseState phase1_reduce(const Graph& g, int d);
// Throws InvariantError if no endpoint-disjoint pairing of the free edges is found.
DenseState phase2_pair_edges(DenseState st);
// Endpoint-disjoint perfect pairing of `edges` in g, or nullopt. Greedy with
// exchange repair, then maximum matching on the complement of the line graph.
std::optional<std::vector<std::array<EdgeId, 2>>> disjoint_edge_pairing(const Graph& g, std::vector<EdgeId> edges);
std::optional<std::vector<std::array<EdgeId, 2>>> disjoint_edge_pairing_by_matching(const Graph& g,
                                                                                     const std::vector<EdgeId>& edges);

DenseState phase3_pair_labels(DenseState st, Rng& rng);
// coins[k] == true puts the smaller label of pair k on its smaller edge.
Labeling phase5_assign(const DenseState& st, const std::vector<char>& coins);
Labeling phase5_assign(const DenseState& st, Rng& rng);

struct DenseResult {
  std::optional<Labeling> labeling;
  int restarts = 0;         // pairings redrawn after the first
  long long resamples = 0;  // local resampling rounds in total
  std::int64_t best_collisions = -1;
  std::optional<std::pair<Vertex, Vertex>> last_collision;
};

DenseResult label_dense(const Graph& g, const DenseConfig& cfg);

}  // namespace antimagic
