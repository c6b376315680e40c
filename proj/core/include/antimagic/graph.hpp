#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "antimagic/errors.hpp"

namespace antimagic {

using Vertex = int;
using EdgeId = int;
using Label = std::int64_t;
using Weight = std::int64_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph. Edges are stored canonically: u < v within each
// edge, and the edge list sorted lexicographically, so edge ids are stable
// across every construction that builds the same edge set.
class Graph {
 public:
  Graph() = default;

  // Throws StructuralError on self-loops, duplicates or out-of-range ids.
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

  int n() const noexcept { return n_; }
  int m() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }

  // Incident edge ids of v, ascending.
  std::span<const EdgeId> incident(Vertex v) const {
    return incident_.at(static_cast<std::size_t>(v));
  }
  int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }
  int max_degree() const noexcept;
  int min_degree() const noexcept;

  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;
  bool adjacent(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }
  Vertex other(EdgeId e, Vertex v) const {
    const Edge& ed = edge(e);
    return ed.u == v ? ed.v : ed.u;
  }

  std::vector<Vertex> neighbors(Vertex v) const;

  // Induced subgraph on `keep` (ascending old ids). Returned vertex i is keep[i].
  Graph induced(std::span<const Vertex> keep) const;
  // Spanning subgraph keeping edges with mask[e] == true.
  Graph spanning(const std::vector<bool>& mask) const;

  bool connected() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

// Total labeling: labels[e] is the label of edge e.
struct Labeling {
  std::vector<Label> labels;

  friend bool operator==(const Labeling&, const Labeling&) = default;
};

// S-partial labeling. `pool` is the allowed label set S (sorted, distinct),
// `assignment[e]` is 0 when e is unlabeled.
class PartialLabeling {
 public:
  PartialLabeling() = default;
  PartialLabeling(int m, std::vector<Label> pool);

  static PartialLabeling from_total(const Labeling& l);

  const std::vector<Label>& pool() const noexcept { return pool_; }
  const std::vector<Label>& assignment() const noexcept { return assignment_; }
  int size() const noexcept { return static_cast<int>(assignment_.size()); }

  bool assigned(EdgeId e) const { return assignment_.at(static_cast<std::size_t>(e)) != 0; }
  Label at(EdgeId e) const { return assignment_.at(static_cast<std::size_t>(e)); }
  bool in_pool(Label x) const;
  bool used(Label x) const;
  bool total() const;

  // Throws InvariantError if x is outside the pool or already used.
  void assign(EdgeId e, Label x);
  void unassign(EdgeId e);

  std::vector<Label> unused() const;
  Labeling to_total() const;

 private:
  std::vector<Label> pool_;
  std::vector<Label> assignment_;
};

using WeightMap = std::vector<Weight>;

// Labels above this edge count are rejected by the verifier.
inline constexpr int kMaxEdges = 1'000'000;

WeightMap vertex_sums(const Graph& g, const PartialLabeling& pl,
                      const std::optional<WeightMap>& base = std::nullopt);
WeightMap vertex_sums(const Graph& g, const Labeling& l);

struct VerifyReport {
  enum class Failure { none, not_bijection, collision };

  bool ok = false;
  Failure failure = Failure::none;
  std::optional<std::pair<Vertex, Vertex>> first_collision;
  std::string reason;
};

VerifyReport verify_antimagic(const Graph& g, const Labeling& l);

// Number of unordered vertex pairs with equal sums.
std::int64_t count_collisions(const WeightMap& w);

bool is_bijection(const Labeling& l);

}  // namespace antimagic
