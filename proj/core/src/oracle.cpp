#include "antimagic/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace antimagic {

const char* to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::found: return "found";
    case SearchOutcome::proven_none: return "proven_none";
    case SearchOutcome::budget_exceeded: return "budget_exceeded";
    case SearchOutcome::not_found: return "not_found";
  }
  return "unknown";
}

namespace {

class Backtracker {
 public:
  Backtracker(const Graph& g, std::int64_t max_nodes, bool count_all)
      : g_(g), max_nodes_(max_nodes), count_all_(count_all) {
    const int n = g.n();
    const int m = g.m();
    order_.resize(m);
    std::iota(order_.begin(), order_.end(), 0);
    auto key = [&](EdgeId e) {
      int a = g.degree(g.edge(e).u), b = g.degree(g.edge(e).v);
      return std::make_tuple(std::min(a, b), std::max(a, b), e);
    };
    std::sort(order_.begin(), order_.end(), [&](EdgeId x, EdgeId y) { return key(x) < key(y); });
    remaining_.resize(n);
    for (Vertex v = 0; v < n; ++v) remaining_[v] = g.degree(v);
    sums_.assign(n, 0);
    used_.assign(m + 1, 0);
    labels_.assign(m, 0);
  }

  // Returns false if the node budget ran out.
  bool run() {
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (remaining_[v] == 0) {
        if (collides(v)) return true;
        saturated_.push_back(v);
      }
    }
    return descend(0);
  }

  std::optional<Labeling> found;
  std::uint64_t count = 0;
  std::int64_t nodes = 0;

 private:
  bool collides(Vertex v) const {
    for (Vertex u : saturated_) {
      if (sums_[u] == sums_[v]) return true;
    }
    return false;
  }

  bool descend(std::size_t depth) {
    if (depth == order_.size()) {
      ++count;
      if (!found) found = Labeling{labels_};
      return true;
    }
    const EdgeId e = order_[depth];
    const Vertex a = g_.edge(e).u, b = g_.edge(e).v;
    for (Label l = g_.m(); l >= 1; --l) {
      if (used_[l]) continue;
      if (++nodes > max_nodes_) return false;
      used_[l] = 1;
      labels_[e] = l;
      sums_[a] += l;
      sums_[b] += l;
      --remaining_[a];
      --remaining_[b];
      const std::size_t mark = saturated_.size();
      bool ok = true;
      for (Vertex v : {a, b}) {
        if (ok && remaining_[v] == 0) {
          if (collides(v)) ok = false;
          else saturated_.push_back(v);
        }
      }
      bool within = true;
      if (ok) within = descend(depth + 1);
      saturated_.resize(mark);
      ++remaining_[a];
      ++remaining_[b];
      sums_[a] -= l;
      sums_[b] -= l;
      labels_[e] = 0;
      used_[l] = 0;
      if (!within) return false;
      if (found && !count_all_) return true;
    }
    return true;
  }

  const Graph& g_;
  std::int64_t max_nodes_;
  bool count_all_;
  std::vector<EdgeId> order_;
  std::vector<int> remaining_;
  WeightMap sums_;
  std::vector<char> used_;
  std::vector<Label> labels_;
  std::vector<Vertex> saturated_;
};

}  // namespace

SearchResult exhaustive_search(const Graph& g, const SearchBudget& b) {
  if (b.max_nodes < 1) throw PreconditionError("node budget must be positive");
  Backtracker bt(g, b.max_nodes, false);
  const bool complete = bt.run();
  SearchResult res;
  res.nodes = bt.nodes;
  if (bt.found) {
    if (!verify_antimagic(g, *bt.found).ok) throw InvariantError("exhaustive search produced an invalid labeling");
    res.outcome = SearchOutcome::found;
    res.labeling = bt.found;
  } else {
    res.outcome = complete ? SearchOutcome::proven_none : SearchOutcome::budget_exceeded;
  }
  return res;
}

std::optional<std::uint64_t> count_antimagic_labelings(const Graph& g, std::int64_t max_nodes) {
  Backtracker bt(g, max_nodes, true);
  if (!bt.run()) return std::nullopt;
  return bt.count;
}

SearchResult heuristic_search(const Graph& g, const SearchBudget& b) {
  if (b.max_iters < 1 || b.restarts < 1) throw PreconditionError("heuristic budgets must be positive");
  SearchResult res;
  const int n = g.n();
  const int m = g.m();
  std::mt19937_64 rng(b.seed);
  const Weight cap = static_cast<Weight>(std::max(1, g.max_degree())) * m + 1;
  std::vector<std::int32_t> cnt(static_cast<std::size_t>(cap), 0);

  for (int r = 0; r < b.restarts; ++r) {
    res.restarts_used = r;
    Labeling l;
    l.labels.resize(m);
    std::iota(l.labels.begin(), l.labels.end(), Label{1});
    std::shuffle(l.labels.begin(), l.labels.end(), rng);
    WeightMap w = vertex_sums(g, l);
    std::fill(cnt.begin(), cnt.end(), 0);
    std::int64_t collisions = 0;
    for (Vertex v = 0; v < n; ++v) collisions += cnt[w[v]]++;

    auto remove = [&](Vertex v) { collisions -= --cnt[w[v]]; };
    auto add = [&](Vertex v) { collisions += cnt[w[v]]++; };
    auto swap_labels = [&](EdgeId e1, EdgeId e2) {
      const Edge& x = g.edge(e1);
      const Edge& y = g.edge(e2);
      const Vertex touched[4] = {x.u, x.v, y.u, y.v};
      for (Vertex v : touched) remove(v);
      const Label diff = l.labels[e2] - l.labels[e1];
      w[x.u] += diff;
      w[x.v] += diff;
      w[y.u] -= diff;
      w[y.v] -= diff;
      std::swap(l.labels[e1], l.labels[e2]);
      for (Vertex v : touched) add(v);
    };

    for (std::int64_t it = 0; collisions > 0 && it < b.max_iters && m >= 2; ++it) {
      ++res.iterations;
      const EdgeId e1 = std::uniform_int_distribution<EdgeId>(0, m - 1)(rng);
      EdgeId e2 = std::uniform_int_distribution<EdgeId>(0, m - 2)(rng);
      if (e2 >= e1) ++e2;
      const std::int64_t before = collisions;
      swap_labels(e1, e2);
      if (collisions > before) swap_labels(e1, e2);
    }
    if (collisions == 0) {
      if (!verify_antimagic(g, l).ok) throw InvariantError("heuristic search produced an invalid labeling");
      res.outcome = SearchOutcome::found;
      res.labeling = std::move(l);
      return res;
    }
  }
  res.outcome = SearchOutcome::not_found;
  return res;
}

SearchResult find_certificate(const Graph& g, const SearchBudget& b) {
  SearchResult h = heuristic_search(g, b);
  if (h.outcome == SearchOutcome::found) return h;
  SearchResult e = exhaustive_search(g, b);
  e.iterations = h.iterations;
  e.restarts_used = h.restarts_used;
  return e;
}

}  // namespace antimagic
