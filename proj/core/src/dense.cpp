#include "antimagic/dense.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

namespace antimagic {

int default_min_degree_parameter(int n) {
  if (n <= 1) return 1;
  return std::max(1, static_cast<int>(std::ceil(3.0 * std::log(static_cast<double>(n)))));
}

Graph DenseState::reduced_graph() const {
  std::vector<bool> mask(in_kept.begin(), in_kept.end());
  return graph.spanning(mask);
}

DenseState phase1_reduce(const Graph& g, int d) {
  if (d < 1) throw PreconditionError("minimum-degree parameter must be at least 1");
  if (g.n() == 0 || g.min_degree() < d) throw PreconditionError("minimum degree is below d");
  DenseState st;
  st.graph = g;
  st.d = d;
  const int n = g.n();
  const int m = g.m();
  st.removed.labels.assign(m, 0);
  st.in_kept.assign(m, 1);
  std::vector<int> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);

  // Degrees only fall, so an edge that is not removable now never becomes
  // removable later: one pass in canonical order reaches the fixed point.
  Label next = m;
  auto remove = [&](EdgeId e) {
    st.removed.labels[e] = next--;
    st.in_kept[e] = 0;
    --deg[g.edge(e).u];
    --deg[g.edge(e).v];
  };
  for (EdgeId e = 0; e < m; ++e) {
    if (deg[g.edge(e).u] >= d + 1 && deg[g.edge(e).v] >= d + 1) remove(e);
  }
  Label t = next;
  if (t % 2 != 0) {
    EdgeId pick = -1;
    int best = -1;
    for (EdgeId e = 0; e < m; ++e) {
      if (!st.in_kept[e]) continue;
      int s = deg[g.edge(e).u] + deg[g.edge(e).v];
      if (s > best) {
        best = s;
        pick = e;
      }
    }
    remove(pick);
    st.parity_adjusted = true;
    --t;
  }
  st.t = t;
  for (EdgeId e = 0; e < m; ++e) {
    if (st.in_kept[e]) st.kept.push_back(e);
  }
  st.reduced_degree = deg;
  st.in_b.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) st.in_b[v] = deg[v] >= d + 1 ? 1 : 0;
  st.carried.assign(n, 0);
  for (EdgeId e = 0; e < m; ++e) {
    st.carried[g.edge(e).u] += st.removed.labels[e];
    st.carried[g.edge(e).v] += st.removed.labels[e];
  }
  return st;
}

namespace {

bool share_endpoint(const Graph& g, EdgeId a, EdgeId b) {
  const Edge& x = g.edge(a);
  const Edge& y = g.edge(b);
  return x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
}

}  // namespace

std::optional<std::vector<std::array<EdgeId, 2>>> disjoint_edge_pairing_by_matching(
    const Graph& g, const std::vector<EdgeId>& edges) {
  const std::size_t k = edges.size();
  if (k % 2 != 0) return std::nullopt;
  if (k > 2000) return std::nullopt;
  using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BGraph bg(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (!share_endpoint(g, edges[i], edges[j])) boost::add_edge(i, j, bg);
    }
  }
  std::vector<boost::graph_traits<BGraph>::vertex_descriptor> mate(k);
  boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
  std::vector<std::array<EdgeId, 2>> out;
  const auto none = boost::graph_traits<BGraph>::null_vertex();
  for (std::size_t i = 0; i < k; ++i) {
    if (mate[i] == none) return std::nullopt;
    if (i < mate[i]) out.push_back({edges[i], edges[mate[i]]});
  }
  return out;
}

std::optional<std::vector<std::array<EdgeId, 2>>> disjoint_edge_pairing(const Graph& g,
                                                                        std::vector<EdgeId> edges) {
  if (edges.size() % 2 != 0) return std::nullopt;
  std::sort(edges.begin(), edges.end());
  std::vector<std::array<EdgeId, 2>> pairs;
  std::vector<char> done(edges.size(), 0);
  std::vector<EdgeId> left;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (done[i]) continue;
    done[i] = 1;
    bool found = false;
    for (std::size_t j = i + 1; j < edges.size() && !found; ++j) {
      if (!done[j] && !share_endpoint(g, edges[i], edges[j])) {
        done[j] = 1;
        pairs.push_back({edges[i], edges[j]});
        found = true;
      }
    }
    if (!found) left.push_back(edges[i]);
  }

  // Exchange repair: leftover e, f and an existing pair {a, b} become {e, a}, {f, b}.
  while (!left.empty()) {
    const EdgeId e = left.front();
    bool fixed = false;
    for (std::size_t fi = 1; fi < left.size() && !fixed; ++fi) {
      const EdgeId f = left[fi];
      if (!share_endpoint(g, e, f)) {
        pairs.push_back({e, f});
        left.erase(left.begin() + static_cast<std::ptrdiff_t>(fi));
        left.erase(left.begin());
        fixed = true;
        break;
      }
      for (auto& p : pairs) {
        for (int side = 0; side < 2 && !fixed; ++side) {
          const EdgeId a = p[side];
          const EdgeId b = p[1 - side];
          if (!share_endpoint(g, e, a) && !share_endpoint(g, f, b)) {
            p = {e, a};
            pairs.push_back({f, b});
            left.erase(left.begin() + static_cast<std::ptrdiff_t>(fi));
            left.erase(left.begin());
            fixed = true;
          }
        }
        if (fixed) break;
      }
    }
    if (!fixed) return disjoint_edge_pairing_by_matching(g, edges);
  }
  for (auto& p : pairs) {
    if (p[0] > p[1]) std::swap(p[0], p[1]);
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

DenseState phase2_pair_edges(DenseState st) {
  const Graph& g = st.graph;
  const int n = g.n();
  st.f_sets.assign(n, {});
  st.h_sets.assign(n, {});
  std::vector<char> in_f(g.m(), 0);
  for (Vertex v = 0; v < n; ++v) {
    std::vector<EdgeId> inc;
    for (EdgeId e : g.incident(v)) {
      if (st.in_kept[e]) inc.push_back(e);
    }
    std::size_t fsize = 0;
    if (st.in_b[v]) {
      const int excess = st.reduced_degree[v] - st.d;
      fsize = static_cast<std::size_t>(excess % 2 == 0 ? excess : excess - 1);
    }
    st.f_sets[v].assign(inc.begin(), inc.begin() + static_cast<std::ptrdiff_t>(fsize));
    st.h_sets[v].assign(inc.begin() + static_cast<std::ptrdiff_t>(fsize), inc.end());
    for (EdgeId e : st.f_sets[v]) {
      if (in_f[e]) throw InvariantError("F sets overlap; B is not independent");
      in_f[e] = 1;
    }
  }

  st.edge_pairs.clear();
  for (Vertex v = 0; v < n; ++v) {
    const auto& f = st.f_sets[v];
    for (std::size_t i = 0; i + 1 < f.size(); i += 2) st.edge_pairs.push_back({f[i], f[i + 1]});
  }
  std::vector<EdgeId> free_edges;
  for (EdgeId e : st.kept) {
    if (!in_f[e]) free_edges.push_back(e);
  }
  auto rest = disjoint_edge_pairing(g, free_edges);
  if (!rest) throw InvariantError("no endpoint-disjoint pairing of the remaining edges");
  st.edge_pairs.insert(st.edge_pairs.end(), rest->begin(), rest->end());
  std::sort(st.edge_pairs.begin(), st.edge_pairs.end());

  st.partner.assign(g.m(), -1);
  st.pair_of.assign(g.m(), -1);
  for (std::size_t k = 0; k < st.edge_pairs.size(); ++k) {
    auto [a, b] = st.edge_pairs[k];
    st.partner[a] = b;
    st.partner[b] = a;
    st.pair_of[a] = st.pair_of[b] = static_cast<int>(k);
  }
  return st;
}

DenseState phase3_pair_labels(DenseState st, Rng& rng) {
  if (st.edge_pairs.size() * 2 != static_cast<std::size_t>(st.t)) {
    throw PreconditionError("edge pairing does not cover the remaining labels");
  }
  std::vector<Label> perm(static_cast<std::size_t>(st.t));
  std::iota(perm.begin(), perm.end(), Label{1});
  std::shuffle(perm.begin(), perm.end(), rng);
  st.label_pairs.resize(st.edge_pairs.size());
  for (std::size_t k = 0; k < st.label_pairs.size(); ++k) {
    Label a = perm[2 * k];
    Label b = perm[2 * k + 1];
    st.label_pairs[k] = {std::min(a, b), std::max(a, b)};
  }
  st.f_sums.assign(st.graph.n(), 0);
  for (Vertex v = 0; v < st.graph.n(); ++v) {
    const auto& f = st.f_sets[v];
    for (std::size_t i = 0; i + 1 < f.size(); i += 2) {
      const auto& lp = st.label_pairs[st.pair_of[f[i]]];
      st.f_sums[v] += lp[0] + lp[1];
    }
  }
  return st;
}

Labeling phase5_assign(const DenseState& st, const std::vector<char>& coins) {
  if (coins.size() != st.edge_pairs.size()) throw PreconditionError("one coin per edge pair is required");
  if (st.label_pairs.size() != st.edge_pairs.size()) throw PreconditionError("label pairs have not been drawn");
  Labeling l = st.removed;
  for (std::size_t k = 0; k < st.edge_pairs.size(); ++k) {
    auto [e1, e2] = st.edge_pairs[k];
    auto [lo, hi] = st.label_pairs[k];
    l.labels[e1] = coins[k] ? lo : hi;
    l.labels[e2] = coins[k] ? hi : lo;
  }
  return l;
}

Labeling phase5_assign(const DenseState& st, Rng& rng) {
  std::vector<char> coins(st.edge_pairs.size());
  std::bernoulli_distribution fair(0.5);
  for (auto& c : coins) c = fair(rng) ? 1 : 0;
  return phase5_assign(st, coins);
}

DenseResult label_dense(const Graph& g, const DenseConfig& cfg) {
  if (cfg.max_restarts < 1) throw PreconditionError("max_restarts must be at least 1");
  const int d = cfg.d > 0 ? cfg.d : default_min_degree_parameter(g.n());
  DenseState st = phase2_pair_edges(phase1_reduce(g, d));
  Rng rng(cfg.seed);
  std::bernoulli_distribution fair(0.5);
  DenseResult res;
  const std::size_t pairs = st.edge_pairs.size();

  for (int attempt = 0; attempt < cfg.max_restarts; ++attempt) {
    res.restarts = attempt;
    st = phase3_pair_labels(std::move(st), rng);
    std::vector<char> coins(pairs);
    for (auto& c : coins) c = fair(rng) ? 1 : 0;
    for (int round = 0;; ++round) {
      Labeling l = phase5_assign(st, coins);
      WeightMap w = vertex_sums(g, l);
      const std::int64_t collisions = count_collisions(w);
      if (res.best_collisions < 0 || collisions < res.best_collisions) res.best_collisions = collisions;
      if (collisions == 0) {
        auto rep = verify_antimagic(g, l);
        if (!rep.ok) throw InvariantError("dense pipeline produced an invalid labeling: " + rep.reason);
        res.labeling = std::move(l);
        return res;
      }
      res.last_collision = verify_antimagic(g, l).first_collision;
      if (round == cfg.resample_rounds) break;
      ++res.resamples;
      // Resample every coin that can move the sum of a colliding vertex.
      std::vector<Vertex> order(g.n());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return w[a] != w[b] ? w[a] < w[b] : a < b; });
      std::vector<char> touch(pairs, 0);
      for (std::size_t i = 0; i < order.size(); ++i) {
        const bool dup = (i + 1 < order.size() && w[order[i]] == w[order[i + 1]]) ||
                         (i > 0 && w[order[i]] == w[order[i - 1]]);
        if (!dup) continue;
        for (EdgeId e : st.h_sets[order[i]]) touch[st.pair_of[e]] = 1;
      }
      for (std::size_t k = 0; k < pairs; ++k) {
        if (touch[k]) coins[k] = fair(rng) ? 1 : 0;
      }
    }
  }
  return res;
}

}  // namespace antimagic
