#include <doctest.h>

#include <random>

#include "antimagic/enumerate.hpp"
#include "antimagic/io.hpp"
#include "antimagic/special.hpp"
#include "brute.hpp"

using namespace antimagic;

namespace {

bool forest_ok(const Graph& g, const ParityForest& f) {
  std::vector<int> deg(g.n());
  for (Vertex v = 0; v < g.n(); ++v) deg[v] = g.degree(v);
  std::vector<std::pair<int, int>> fe;
  for (EdgeId e : f.edges) {
    --deg[g.edge(e).u];
    --deg[g.edge(e).v];
    fe.emplace_back(g.edge(e).u, g.edge(e).v);
  }
  for (int d : deg) {
    if (d % 2 != 0) return false;
  }
  return brute::acyclic(g.n(), fe);
}

bool decomposition_ok(const Graph& g, const CycleDecomposition& c) {
  std::vector<int> hits(g.m(), 0);
  for (std::size_t i = 0; i < c.cycles.size(); ++i) {
    const auto& cyc = c.cycles[i];
    if (cyc.size() < 3 || c.cycle_edges[i].size() != cyc.size()) return false;
    std::set<Vertex> distinct(cyc.begin(), cyc.end());
    if (distinct.size() != cyc.size()) return false;
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      auto e = g.find_edge(cyc[k], cyc[(k + 1) % cyc.size()]);
      if (!e || *e != c.cycle_edges[i][k]) return false;
      ++hits[*e];
    }
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

Graph remove_edges(const Graph& g, const std::vector<EdgeId>& drop) {
  std::vector<bool> keep(g.m(), true);
  for (EdgeId e : drop) keep[e] = false;
  return g.spanning(keep);
}

}  // namespace

TEST_CASE("parity forest examples") {
  CHECK(parity_forest(Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}})).edges.empty());
  Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  CHECK(parity_forest(p3).edges == std::vector<EdgeId>{0, 1});
  Graph k4 = from_graph6("C~");
  auto f = parity_forest(k4);
  CHECK(forest_ok(k4, f));
}

TEST_CASE("cycle decomposition examples") {
  auto c4 = cycle_decomposition(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
  REQUIRE(c4.cycles.size() == 1);
  CHECK(c4.cycles[0].size() == 4);
  auto k3 = cycle_decomposition(Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}));
  REQUIRE(k3.cycles.size() == 1);
  CHECK(k3.cycles[0].size() == 3);
  Graph bowtie = Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  auto bt = cycle_decomposition(bowtie);
  REQUIRE(bt.cycles.size() == 2);
  CHECK(bt.cycles[0].size() == 3);
  CHECK(bt.cycles[1].size() == 3);
  CHECK(decomposition_ok(bowtie, bt));
  CHECK_THROWS_AS(cycle_decomposition(Graph::from_edges(3, {{0, 1}, {1, 2}})), PreconditionError);
}

TEST_CASE("parity forest and cycle decomposition invariants over all graphs up to 8 vertices") {
  for (int n = 1; n <= 8; ++n) {
    for (const Graph& g : enumerate_graphs(n, false)) {
      const auto f = parity_forest(g);
      REQUIRE(forest_ok(g, f));
      const Graph even = remove_edges(g, f.edges);
      REQUIRE(decomposition_ok(even, cycle_decomposition(even)));
    }
  }
}

TEST_CASE("universal vertex on the star and on K4") {
  Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  Labeling ls = label_universal_vertex(star);
  CHECK(ls.labels == std::vector<Label>{1, 2, 3});
  CHECK(vertex_sums(star, ls) == WeightMap{6, 1, 2, 3});

  Graph k4 = from_graph6("C~");
  Labeling lk = label_universal_vertex(k4);
  CHECK(lk.labels[*k4.find_edge(1, 2)] == 1);
  CHECK(lk.labels[*k4.find_edge(1, 3)] == 2);
  CHECK(lk.labels[*k4.find_edge(2, 3)] == 3);
  CHECK(vertex_sums(k4, lk) == WeightMap{15, 7, 9, 11});

  CHECK_THROWS_AS(label_universal_vertex(Graph::from_edges(2, {{0, 1}})), PreconditionError);
  CHECK_THROWS_AS(label_universal_vertex(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}})), PreconditionError);
}

TEST_CASE("universal vertex: apex weight closed form and strictly increasing neighbor order") {
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : enumerate_graphs(n, true)) {
      if (g.max_degree() != n - 1) continue;
      Labeling l = label_universal_vertex(g);
      REQUIRE(brute::is_antimagic(g, l.labels));
      Vertex apex = 0;
      while (g.degree(apex) != n - 1) ++apex;
      const auto w = brute::sums(g, l.labels);
      const std::int64_t m = g.m();
      CHECK(w[apex] == (n - 1) * (m - n + 1) + n * (n - 1) / 2);
      CHECK(*std::max_element(w.begin(), w.end()) == w[apex]);
      CHECK(std::count(w.begin(), w.end(), w[apex]) == 1);
    }
  }
}

TEST_CASE("partial labeling completion") {
  Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  PartialLabeling full(2, {1, 2, 3, 4});
  full.assign(0, 1);
  full.assign(1, 3);
  CHECK(complete_partial_labeling(p3, full).assignment() == full.assignment());

  // Brute force: smallest label for edge (1,2) keeping at most 2 vertices on any positive weight.
  PartialLabeling pl(2, {1, 2, 3, 4});
  pl.assign(0, 4);
  Label expected = 0;
  for (Label x : {1, 2, 3}) {
    std::map<std::int64_t, int> mult;
    for (auto w : brute::sums(p3, {4, x})) {
      if (w > 0) ++mult[w];
    }
    bool ok = std::all_of(mult.begin(), mult.end(), [](auto kv) { return kv.second <= 2; });
    if (ok) {
      expected = x;
      break;
    }
  }
  auto done = complete_partial_labeling(p3, pl);
  CHECK(done.at(1) == expected);
  CHECK(done.at(0) == 4);

  CHECK_THROWS_AS(complete_partial_labeling(Graph::from_edges(2, {{0, 1}}), PartialLabeling(1, {1, 2, 3})),
                  PreconditionError);
  CHECK_THROWS_AS(complete_partial_labeling(p3, PartialLabeling(2, {1, 2, 3})), PreconditionError);
}

TEST_CASE("partial labeling completion keeps the multiplicity bound on random inputs") {
  std::mt19937_64 rng(3);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 10);
    Graph g = brute::random_graph(n, 0.5, rng);
    if (g.m() == 0) continue;
    std::vector<Label> pool(g.m() + 2);
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = 2 * static_cast<Label>(i) + 3;
    PartialLabeling pl(g.m(), pool);
    auto done = complete_partial_labeling(g, pl);
    REQUIRE(done.total());
    std::map<std::int64_t, int> mult;
    for (auto w : vertex_sums(g, done)) {
      if (w > 0) ++mult[w];
    }
    for (auto [w, c] : mult) CHECK(c <= (n + 1) / 2);
    ++checked;
  }
  CHECK(checked > 300);
}

TEST_CASE("max degree n-2 examples") {
  Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(brute::is_antimagic(c4, label_max_degree_n_minus_2(c4).labels));
  // The 5-cycle has max degree 2, not n - 2 = 3; the bull is a 5-vertex, 5-edge stand-in.
  Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK_THROWS_AS(label_max_degree_n_minus_2(c5), PreconditionError);
  Graph bull = Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}});
  auto t5 = label_max_degree_n_minus_2_traced(bull);
  CHECK(t5.route == NMinus2Route::sparse_m_2n_minus_5);
  CHECK(brute::is_antimagic(bull, t5.labeling.labels));
  CHECK(brute::has_antimagic(bull));
  // K5 minus a path on three vertices and a disjoint edge: max degree 3, m = 7 >= 2n - 4.
  Graph k5x = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {3, 4}});
  REQUIRE(k5x.max_degree() == 3);
  auto tk = label_max_degree_n_minus_2_traced(k5x);
  CHECK(tk.route == NMinus2Route::dense_forest_cycles);
  CHECK(brute::is_antimagic(k5x, tk.labeling.labels));
  CHECK(brute::has_antimagic(k5x));

  CHECK_THROWS_AS(label_max_degree_n_minus_2(Graph::from_edges(3, {{0, 1}})), PreconditionError);
  CHECK_THROWS_AS(label_max_degree_n_minus_2(from_graph6("C~")), PreconditionError);
}

TEST_CASE("max degree n-2: every graph on 4 to 7 vertices, with route invariants") {
  std::map<NMinus2Route, int> routes;
  for (int n = 4; n <= 7; ++n) {
    for (const Graph& g : enumerate_graphs(n, false)) {
      if (g.max_degree() != n - 2) continue;
      const auto tr = label_max_degree_n_minus_2_traced(g);
      REQUIRE(brute::is_antimagic(g, tr.labeling.labels));
      ++routes[tr.route];
      if (tr.route == NMinus2Route::dense_forest_cycles) {
        int odd = 0;
        for (Vertex v = 0; v < n; ++v) {
          if (v != tr.apex && tr.star_weights[v] % 2 != 0) ++odd;
        }
        CHECK(odd <= 2);
        CHECK(tr.star_weights[tr.non_neighbor] % 2 == 0);
      }
    }
  }
  CHECK(routes[NMinus2Route::dense_forest_cycles] > 0);
  CHECK(routes[NMinus2Route::sparse_m_2n_minus_5] > 0);
  CHECK(routes[NMinus2Route::sparse_m_2n_minus_6_or_7] > 0);
  CHECK(routes[NMinus2Route::sparse_m_at_most_2n_minus_8] > 0);
  CHECK(routes[NMinus2Route::sparse_isolated_non_neighbor] > 0);
}

TEST_CASE("max degree n-2 on random larger graphs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 9 + static_cast<int>(rng() % 20);
    Graph base = brute::random_graph(n - 1, std::uniform_real_distribution<double>(0.05, 0.9)(rng), rng);
    // Vertex n-1 joins every vertex except one chosen at random.
    const int miss = static_cast<int>(rng() % (n - 1));
    std::vector<std::pair<int, int>> e;
    for (const Edge& ed : base.edges()) e.emplace_back(ed.u, ed.v);
    for (int v = 0; v < n - 1; ++v) {
      if (v != miss) e.emplace_back(v, n - 1);
    }
    Graph g = Graph::from_edges(n, e);
    if (g.max_degree() != n - 2) continue;
    REQUIRE(brute::is_antimagic(g, label_max_degree_n_minus_2(g).labels));
  }
}
