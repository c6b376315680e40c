#pragma once

#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

// Acyclic edge set whose removal leaves every degree even.
struct ParityForest {
  std::vector<EdgeId> edges;  // ascending
};

// Edge-disjoint simple cycles covering an even graph. cycles[i] lists the
// vertices in traversal order; cycle_edges[i][k] joins cycles[i][k] and
// cycles[i][(k + 1) % len].
struct CycleDecomposition {
  std::vector<std::vector<Vertex>> cycles;
  std::vector<std::vector<EdgeId>> cycle_edges;
};

ParityForest parity_forest(const Graph& g);

// Throws PreconditionError if some vertex has odd degree.
CycleDecomposition cycle_decomposition(const Graph& g);

// Labeling for graphs with a vertex adjacent to all others (n >= 3). The
// smallest-id such vertex is used unless `apex` is given.
Labeling label_universal_vertex(const Graph& g);
Labeling label_universal_vertex(const Graph& g, Vertex apex);

// True iff no positive weight is shared by more than ceil(n/2) vertices.
bool weight_multiplicity_ok(const Graph& g, const PartialLabeling& pl);

// Extends `pl` to every edge with unused pool labels while keeping
// weight_multiplicity_ok. Requires |pool| = m + 2 and n >= 3.
PartialLabeling complete_partial_labeling(const Graph& g, PartialLabeling pl);

enum class NMinus2Route {
  small_lookup,  // n = 4, and the n = 5 graphs the constructions cannot handle
  sparse_isolated_non_neighbor,
  dense_forest_cycles,      // m >= 2n - 4
  sparse_m_2n_minus_5,
  sparse_m_2n_minus_6_or_7,
  sparse_m_at_most_2n_minus_8,
};

const char* to_string(NMinus2Route r);

struct NMinus2Trace {
  Labeling labeling;
  NMinus2Route route = NMinus2Route::small_lookup;
  Vertex apex = -1;          // a vertex of degree n - 2
  Vertex non_neighbor = -1;  // its unique non-neighbor
  // Sums inside G - apex just before the apex edges are labeled (indexed by
  // original vertex id; the apex entry is 0). Empty on the lookup route.
  WeightMap star_weights;
  // Index of the choice variant that passed verification (0 = canonical).
  unsigned variant = 0;
};

inline constexpr unsigned kNMinus2Variants = 4096;

// Labeling for n >= 4 and max degree exactly n - 2.
NMinus2Trace label_max_degree_n_minus_2_traced(const Graph& g);
Labeling label_max_degree_n_minus_2(const Graph& g);

}  // namespace antimagic
