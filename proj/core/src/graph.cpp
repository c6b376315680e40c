#include "antimagic/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace antimagic {

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 0) throw StructuralError("negative vertex count");
  Graph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw StructuralError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                            ") has an endpoint out of range");
    }
    if (a == b) throw StructuralError("self-loop at vertex " + std::to_string(a));
    g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    throw StructuralError("duplicate edge (" + std::to_string(dup->u) + "," +
                          std::to_string(dup->v) + ")");
  }
  g.incident_.assign(static_cast<std::size_t>(n), {});
  for (EdgeId e = 0; e < g.m(); ++e) {
    g.incident_[static_cast<std::size_t>(g.edges_[static_cast<std::size_t>(e)].u)].push_back(e);
    g.incident_[static_cast<std::size_t>(g.edges_[static_cast<std::size_t>(e)].v)].push_back(e);
  }
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (const auto& inc : incident_) best = std::max(best, static_cast<int>(inc.size()));
  return best;
}

int Graph::min_degree() const noexcept {
  if (n_ == 0) return 0;
  int best = m();
  for (const auto& inc : incident_) best = std::min(best, static_cast<int>(inc.size()));
  return best;
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const {
  if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_) return std::nullopt;
  Edge key{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (EdgeId e : incident(v)) out.push_back(other(e, v));
  std::sort(out.begin(), out.end());
  return out;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<int> remap(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) remap.at(static_cast<std::size_t>(keep[i])) = static_cast<int>(i);
  std::vector<std::pair<int, int>> kept;
  for (const Edge& e : edges_) {
    int a = remap[static_cast<std::size_t>(e.u)];
    int b = remap[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) kept.emplace_back(a, b);
  }
  return from_edges(static_cast<int>(keep.size()), kept);
}

Graph Graph::spanning(const std::vector<bool>& mask) const {
  std::vector<std::pair<int, int>> kept;
  for (EdgeId e = 0; e < m(); ++e) {
    if (mask.at(static_cast<std::size_t>(e))) kept.emplace_back(edges_[static_cast<std::size_t>(e)].u, edges_[static_cast<std::size_t>(e)].v);
  }
  return from_edges(n_, kept);
}

bool Graph::connected() const {
  if (n_ <= 1) return true;
  std::vector<bool> seen(static_cast<std::size_t>(n_), false);
  std::queue<Vertex> q;
  q.push(0);
  seen[0] = true;
  int count = 1;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (EdgeId e : incident(v)) {
      Vertex w = other(e, v);
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++count;
        q.push(w);
      }
    }
  }
  return count == n_;
}

PartialLabeling::PartialLabeling(int m, std::vector<Label> pool)
    : pool_(std::move(pool)), assignment_(static_cast<std::size_t>(m), 0) {
  std::sort(pool_.begin(), pool_.end());
  if (std::adjacent_find(pool_.begin(), pool_.end()) != pool_.end()) {
    throw StructuralError("label pool contains duplicates");
  }
  if (!pool_.empty() && pool_.front() <= 0) throw StructuralError("labels must be positive");
}

PartialLabeling PartialLabeling::from_total(const Labeling& l) {
  std::vector<Label> pool(l.labels.size());
  std::iota(pool.begin(), pool.end(), Label{1});
  PartialLabeling pl(static_cast<int>(l.labels.size()), std::move(pool));
  for (std::size_t e = 0; e < l.labels.size(); ++e) pl.assign(static_cast<EdgeId>(e), l.labels[e]);
  return pl;
}

bool PartialLabeling::in_pool(Label x) const {
  return std::binary_search(pool_.begin(), pool_.end(), x);
}

bool PartialLabeling::used(Label x) const {
  return std::find(assignment_.begin(), assignment_.end(), x) != assignment_.end();
}

bool PartialLabeling::total() const {
  return std::none_of(assignment_.begin(), assignment_.end(), [](Label x) { return x == 0; });
}

void PartialLabeling::assign(EdgeId e, Label x) {
  if (e < 0 || e >= size()) throw StructuralError("edge index out of range");
  if (!in_pool(x)) throw InvariantError("label " + std::to_string(x) + " is not in the pool");
  if (assignment_[static_cast<std::size_t>(e)] == x) return;
  if (used(x)) throw InvariantError("label " + std::to_string(x) + " is already used");
  assignment_[static_cast<std::size_t>(e)] = x;
}

void PartialLabeling::unassign(EdgeId e) {
  if (e < 0 || e >= size()) throw StructuralError("edge index out of range");
  assignment_[static_cast<std::size_t>(e)] = 0;
}

std::vector<Label> PartialLabeling::unused() const {
  std::vector<Label> used_sorted;
  for (Label x : assignment_) {
    if (x != 0) used_sorted.push_back(x);
  }
  std::sort(used_sorted.begin(), used_sorted.end());
  std::vector<Label> out;
  std::set_difference(pool_.begin(), pool_.end(), used_sorted.begin(), used_sorted.end(),
                      std::back_inserter(out));
  return out;
}

Labeling PartialLabeling::to_total() const {
  if (!total()) throw InvariantError("partial labeling is not total");
  return Labeling{assignment_};
}

WeightMap vertex_sums(const Graph& g, const PartialLabeling& pl, const std::optional<WeightMap>& base) {
  if (pl.size() != g.m()) throw StructuralError("labeling does not match the edge count");
  WeightMap w(static_cast<std::size_t>(g.n()), 0);
  if (base) {
    if (base->size() != w.size()) throw StructuralError("base weight map has the wrong size");
    w = *base;
  }
  for (EdgeId e = 0; e < g.m(); ++e) {
    Label x = pl.at(e);
    if (x == 0) continue;
    const Edge& ed = g.edge(e);
    w[static_cast<std::size_t>(ed.u)] += x;
    w[static_cast<std::size_t>(ed.v)] += x;
  }
  return w;
}

WeightMap vertex_sums(const Graph& g, const Labeling& l) {
  if (static_cast<int>(l.labels.size()) != g.m()) {
    throw StructuralError("labeling does not match the edge count");
  }
  WeightMap w(static_cast<std::size_t>(g.n()), 0);
  for (EdgeId e = 0; e < g.m(); ++e) {
    const Edge& ed = g.edge(e);
    w[static_cast<std::size_t>(ed.u)] += l.labels[static_cast<std::size_t>(e)];
    w[static_cast<std::size_t>(ed.v)] += l.labels[static_cast<std::size_t>(e)];
  }
  return w;
}

bool is_bijection(const Labeling& l) {
  const auto m = l.labels.size();
  std::vector<bool> seen(m + 1, false);
  for (Label x : l.labels) {
    if (x < 1 || static_cast<std::size_t>(x) > m || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

namespace {

// Vertices ordered by (weight, id).
std::vector<Vertex> order_by_weight(const WeightMap& w) {
  std::vector<Vertex> order(w.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return w[static_cast<std::size_t>(a)] != w[static_cast<std::size_t>(b)]
               ? w[static_cast<std::size_t>(a)] < w[static_cast<std::size_t>(b)]
               : a < b;
  });
  return order;
}

}  // namespace

std::int64_t count_collisions(const WeightMap& w) {
  auto order = order_by_weight(w);
  std::int64_t total = 0;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j < order.size() && w[static_cast<std::size_t>(order[j])] == w[static_cast<std::size_t>(order[i])]) ++j;
    auto k = static_cast<std::int64_t>(j - i);
    total += k * (k - 1) / 2;
    i = j;
  }
  return total;
}

VerifyReport verify_antimagic(const Graph& g, const Labeling& l) {
  if (g.m() > kMaxEdges) throw ResourceError("edge count exceeds the verifier ceiling");
  VerifyReport rep;
  if (static_cast<int>(l.labels.size()) != g.m() || !is_bijection(l)) {
    rep.failure = VerifyReport::Failure::not_bijection;
    rep.reason = "labels are not a bijection onto 1..m";
    return rep;
  }
  WeightMap w = vertex_sums(g, l);
  auto order = order_by_weight(w);
  std::optional<std::pair<Vertex, Vertex>> best;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    if (w[static_cast<std::size_t>(order[i])] != w[static_cast<std::size_t>(order[i + 1])]) continue;
    // order[i] is the smallest id in its group when i starts the group.
    if (i > 0 && w[static_cast<std::size_t>(order[i - 1])] == w[static_cast<std::size_t>(order[i])]) continue;
    std::pair<Vertex, Vertex> cand{order[i], order[i + 1]};
    if (!best || cand < *best) best = cand;
  }
  if (best) {
    rep.failure = VerifyReport::Failure::collision;
    rep.first_collision = best;
    rep.reason = "vertices " + std::to_string(best->first) + " and " +
                 std::to_string(best->second) + " share sum " +
                 std::to_string(w[static_cast<std::size_t>(best->first)]);
    return rep;
  }
  rep.ok = true;
  return rep;
}

}  // namespace antimagic
