#pragma once

#include <optional>
#include <string>
#include <vector>

#include "antimagic/dense.hpp"
#include "antimagic/graph.hpp"
#include "antimagic/oracle.hpp"

namespace antimagic {

enum class Method { automatic, universal, delta_n2, partite, dense, oracle };

const char* to_string(Method m);
// Accepts auto|universal|delta-n2|partite|dense|oracle.
std::optional<Method> parse_method(const std::string& s);

struct DispatchConfig {
  Method method = Method::automatic;
  DenseConfig dense;
  SearchBudget search{SearchMode::heuristic};
  int exhaustive_max_edges = 12;  // oracle route falls back to backtracking up to this size
};

enum class Outcome { antimagic, failed, not_applicable };

const char* to_string(Outcome o);

struct RunReport {
  std::string method;  // route actually taken
  std::string graph_id;
  Outcome outcome = Outcome::failed;
  int restarts = 0;
  double wall_ms = 0.0;
  std::optional<Labeling> certificate;  // present iff outcome == antimagic
  std::string note;
};

// Routes by structure: max degree n-1 / n-2, then complete multipartite,
// then minimum degree >= d (dense pipeline), else the heuristic oracle.
// Any certificate is re-verified before it is returned.
RunReport dispatch_label(const Graph& g, const DispatchConfig& cfg);

struct SweepConfig {
  DispatchConfig dispatch{Method::oracle};
  int threads = 0;  // <= 0 means hardware concurrency
};

// Reports in input order.
std::vector<RunReport> sweep(const std::vector<Graph>& graphs, const SweepConfig& cfg);

bool is_k2(const Graph& g);

}  // namespace antimagic
