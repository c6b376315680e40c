#pragma once

#include <cstdint>
#include <optional>

#include "antimagic/graph.hpp"

namespace antimagic {

enum class SearchMode { exhaustive, heuristic };

struct SearchBudget {
  SearchMode mode = SearchMode::exhaustive;
  std::int64_t max_nodes = 50'000'000;  // exhaustive
  std::int64_t max_iters = 20'000;      // heuristic, per restart
  int restarts = 50;                    // heuristic
  std::uint64_t seed = 0;
};

enum class SearchOutcome { found, proven_none, budget_exceeded, not_found };

const char* to_string(SearchOutcome o);

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::not_found;
  std::optional<Labeling> labeling;
  std::int64_t nodes = 0;       // exhaustive search tree nodes
  std::int64_t iterations = 0;  // heuristic moves tried
  int restarts_used = 0;
};

// Backtracking over edges ordered to saturate low-degree vertices first,
// trying larger labels first; prunes when two saturated vertices collide.
SearchResult exhaustive_search(const Graph& g, const SearchBudget& b);

// Number of antimagic labelings, or nullopt if the node budget runs out.
std::optional<std::uint64_t> count_antimagic_labelings(const Graph& g, std::int64_t max_nodes = 50'000'000);

// Random restarts of a hill climb on the number of equal-sum vertex pairs,
// moving by label transpositions.
SearchResult heuristic_search(const Graph& g, const SearchBudget& b);

// Heuristic first, then exhaustive search with the same budget's node limit.
SearchResult find_certificate(const Graph& g, const SearchBudget& b);

}  // namespace antimagic
