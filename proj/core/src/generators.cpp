#include "antimagic/generators.hpp"

#include <algorithm>
#include <charconv>
#include <random>

#include "antimagic/partite.hpp"

namespace antimagic {

Graph complete_partite(const std::vector<int>& class_sizes) {
  if (class_sizes.empty()) throw PreconditionError("at least one class is required");
  return complete_multipartite_graph(class_sizes);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 0) throw PreconditionError("vertex count must be non-negative");
  if (p < 0.0 || p > 1.0) throw PreconditionError("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph random_min_degree(int n, int d, std::uint64_t seed, double p) {
  if (d < 0 || d >= n) throw PreconditionError("random-min-degree needs 0 <= d < n");
  if (p < 0.0 || p > 1.0) throw PreconditionError("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<int> deg(n, 0);
  auto link = [&](int u, int v) {
    adj[u][v] = adj[v][u] = 1;
    ++deg[u];
    ++deg[v];
  };
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) link(u, v);
    }
  }
  std::vector<int> candidates;
  for (int v = 0; v < n; ++v) {
    while (deg[v] < d) {
      // Prefer partners that are themselves deficient, so fewer edges are added.
      candidates.clear();
      for (int u = 0; u < n; ++u) {
        if (u != v && !adj[v][u] && deg[u] < d) candidates.push_back(u);
      }
      if (candidates.empty()) {
        for (int u = 0; u < n; ++u) {
          if (u != v && !adj[v][u]) candidates.push_back(u);
        }
      }
      link(v, candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)]);
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (adj[u][v]) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

namespace {

int parse_size(const std::string& id, std::size_t colon) {
  int k = 0;
  const char* first = id.data() + colon + 1;
  const char* last = id.data() + id.size();
  auto [ptr, ec] = std::from_chars(first, last, k);
  if (ec != std::errc() || ptr != last || k < 1) throw PreconditionError("bad size in graph id '" + id + "'");
  return k;
}

}  // namespace

Graph named_graph(const std::string& id) {
  if (id == "petersen") {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
      e.emplace_back(i, (i + 1) % 5);
      e.emplace_back(i, i + 5);
      e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edges(10, e);
  }
  const auto colon = id.find(':');
  if (colon == std::string::npos) throw PreconditionError("unknown graph id '" + id + "'");
  const std::string family = id.substr(0, colon);
  const int k = parse_size(id, colon);
  std::vector<std::pair<int, int>> e;
  if (family == "cycle") {
    if (k < 3) throw PreconditionError("a cycle needs at least 3 vertices");
    for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    return Graph::from_edges(k, e);
  }
  if (family == "path") {
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(k, e);
  }
  if (family == "star") {
    for (int i = 1; i <= k; ++i) e.emplace_back(0, i);
    return Graph::from_edges(k + 1, e);
  }
  if (family == "complete") {
    for (int u = 0; u < k; ++u) {
      for (int v = u + 1; v < k; ++v) e.emplace_back(u, v);
    }
    return Graph::from_edges(k, e);
  }
  throw PreconditionError("unknown graph family '" + family + "'");
}

std::vector<std::string> named_graph_ids() { return {"cycle:N", "path:N", "star:N", "complete:N", "petersen"}; }

}  // namespace antimagic
