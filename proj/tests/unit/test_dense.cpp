#include <doctest.h>

#include <map>

#include "antimagic/dense.hpp"
#include "antimagic/generators.hpp"
#include "antimagic/io.hpp"
#include "brute.hpp"

using namespace antimagic;

namespace {

Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

Graph cube() {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < 8; ++v) {
    for (int bit : {1, 2, 4}) {
      if ((v & bit) == 0) e.emplace_back(v, v | bit);
    }
  }
  return Graph::from_edges(8, e);
}

Graph k2_5() {
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v <= 5; ++v) {
    e.emplace_back(0, v);
    e.emplace_back(6, v);
  }
  return Graph::from_edges(7, e);
}

bool share(const Graph& g, EdgeId a, EdgeId b) {
  const Edge& x = g.edge(a);
  const Edge& y = g.edge(b);
  return x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
}

void check_phase1(const Graph& g, const DenseState& st) {
  // Labels m, m-1, ... on removed edges; kept edges unlabeled.
  std::vector<Label> removed;
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (st.in_kept[e]) {
      CHECK(st.removed.labels[e] == 0);
    } else {
      removed.push_back(st.removed.labels[e]);
    }
  }
  std::sort(removed.begin(), removed.end());
  for (std::size_t i = 0; i < removed.size(); ++i) CHECK(removed[i] == st.t + 1 + static_cast<Label>(i));
  CHECK(st.t % 2 == 0);
  CHECK(static_cast<Label>(st.kept.size()) == st.t);
  int below = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    int deg = 0;
    for (EdgeId e : g.incident(v)) deg += st.in_kept[e];
    CHECK(deg == st.reduced_degree[v]);
    CHECK(static_cast<bool>(st.in_b[v]) == (deg >= st.d + 1));
    if (deg < st.d) {
      ++below;
      CHECK(deg == st.d - 1);
    }
  }
  CHECK(below <= (st.parity_adjusted ? 2 : 0));
  for (EdgeId e : st.kept) {
    if (!st.parity_adjusted) CHECK_FALSE((st.in_b[g.edge(e).u] && st.in_b[g.edge(e).v]));
  }
  WeightMap r(g.n(), 0);
  for (EdgeId e = 0; e < g.m(); ++e) {
    r[g.edge(e).u] += st.removed.labels[e];
    r[g.edge(e).v] += st.removed.labels[e];
  }
  CHECK(r == st.carried);
}

void check_phase2(const Graph& g, const DenseState& st) {
  std::size_t f_total = 0;
  std::vector<char> in_f(g.m(), 0);
  for (Vertex v = 0; v < g.n(); ++v) {
    const auto& f = st.f_sets[v];
    CHECK(f.size() % 2 == 0);
    f_total += f.size();
    for (EdgeId e : f) {
      CHECK_FALSE(in_f[e]);
      in_f[e] = 1;
    }
    if (st.in_b[v]) {
      CHECK(std::abs(st.reduced_degree[v] - static_cast<int>(f.size()) - st.d) <= 1);
    } else {
      CHECK(f.empty());
    }
    const int h = static_cast<int>(st.h_sets[v].size());
    CHECK(h >= st.d - 1);
    CHECK(h <= st.d + 1);
    CHECK(h + static_cast<int>(f.size()) == st.reduced_degree[v]);
    if (!st.in_b[v] && st.reduced_degree[v] >= st.d) CHECK(h == st.d);
  }
  CHECK(f_total + 2 * (st.edge_pairs.size() - f_total / 2) == static_cast<std::size_t>(st.t));
  for (EdgeId e : st.kept) {
    REQUIRE(st.partner[e] >= 0);
    CHECK(st.partner[st.partner[e]] == e);
    CHECK(st.partner[e] != e);
    if (!in_f[e]) CHECK_FALSE(share(g, e, st.partner[e]));
  }
}

}  // namespace

TEST_CASE("regular graphs with an even edge count lose no edges") {
  for (const Graph& g : {cycle(6), from_graph6("C~"), cube()}) {
    REQUIRE(g.min_degree() == g.max_degree());
    REQUIRE(g.m() % 2 == 0);
    DenseState st = phase1_reduce(g, g.min_degree());
    CHECK(st.kept.size() == static_cast<std::size_t>(g.m()));
    CHECK(st.t == g.m());
    CHECK(std::count(st.in_b.begin(), st.in_b.end(), 1) == 0);
    CHECK(std::all_of(st.carried.begin(), st.carried.end(), [](Weight w) { return w == 0; }));
  }
}

TEST_CASE("reduction of K4 with d = 2") {
  Graph k4 = from_graph6("C~");
  DenseState st = phase1_reduce(k4, 2);
  check_phase1(k4, st);
  CHECK(st.removed.labels[0] == 6);
  CHECK(st.t == 4);
}

TEST_CASE("reduction with a single vertex above d") {
  Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  DenseState st = phase1_reduce(p3, 1);
  check_phase1(p3, st);
  CHECK(st.kept.size() == 2);
  CHECK(st.in_b == std::vector<char>{0, 1, 0});
  CHECK_THROWS_AS(phase2_pair_edges(st), InvariantError);
  CHECK_THROWS_AS(phase1_reduce(p3, 2), PreconditionError);
}

TEST_CASE("pairing of the 6-cycle") {
  Graph c6 = cycle(6);
  DenseState st = phase2_pair_edges(phase1_reduce(c6, 2));
  CHECK(st.edge_pairs.size() == 3);
  check_phase2(c6, st);
}

TEST_CASE("F sets take the smallest valid even size") {
  Graph g = k2_5();
  DenseState st = phase2_pair_edges(phase1_reduce(g, 2));
  CHECK(st.t == 10);
  CHECK(st.f_sets[0].size() == 2);
  CHECK(st.f_sets[6].size() == 2);
  check_phase2(g, st);
}

TEST_CASE("phase invariants on random dense graphs") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 20 + static_cast<int>(seed * 7 % 100);
    const int d = default_min_degree_parameter(n);
    Graph g = random_min_degree(n, std::min(n - 1, 2 * d + static_cast<int>(seed % 5)), seed, 0.1 * (seed % 4));
    DenseState st = phase1_reduce(g, d);
    check_phase1(g, st);
    const Label ts = st.t;
    const double dn = static_cast<double>(d) * n;
    CHECK(ts <= dn + 1);
    CHECK(ts + 2 >= dn / 2);
    st = phase2_pair_edges(std::move(st));
    check_phase2(g, st);
  }
}

TEST_CASE("label pairing is reproducible and covers 1..t") {
  Graph c6 = cycle(6);
  DenseState st = phase2_pair_edges(phase1_reduce(c6, 2));
  Rng a(42), b(42);
  DenseState x = phase3_pair_labels(st, a);
  DenseState y = phase3_pair_labels(st, b);
  CHECK(x.label_pairs == y.label_pairs);
  std::vector<Label> all;
  for (auto [lo, hi] : x.label_pairs) {
    CHECK(lo < hi);
    all.push_back(lo);
    all.push_back(hi);
  }
  CHECK(brute::is_permutation_1_to_m(all));
}

TEST_CASE("a single label pair on two disjoint edges") {
  Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}});
  DenseState st = phase2_pair_edges(phase1_reduce(g, 1));
  Rng rng(1);
  st = phase3_pair_labels(st, rng);
  REQUIRE(st.label_pairs.size() == 1);
  CHECK(st.label_pairs[0] == std::array<Label, 2>{1, 2});
  CHECK(phase5_assign(st, std::vector<char>{1}).labels == std::vector<Label>{1, 2});
  CHECK(phase5_assign(st, std::vector<char>{0}).labels == std::vector<Label>{2, 1});
  int heads = 0;
  for (int i = 0; i < 10000; ++i) heads += phase5_assign(st, rng).labels[0] == 1;
  CHECK(heads > 4700);
  CHECK(heads < 5300);
}

TEST_CASE("the three pairings of four labels are equally likely") {
  Graph c4 = cycle(4);
  DenseState st = phase2_pair_edges(phase1_reduce(c4, 2));
  REQUIRE(st.t == 4);
  Rng rng(2024);
  std::map<Label, int> partner_of_one;
  const int trials = 100000;
  for (int i = 0; i < trials; ++i) {
    st = phase3_pair_labels(std::move(st), rng);
    for (auto [lo, hi] : st.label_pairs) {
      if (lo == 1) ++partner_of_one[hi];
    }
  }
  REQUIRE(partner_of_one.size() == 3);
  for (auto [label, count] : partner_of_one) CHECK(std::abs(static_cast<double>(count) / trials - 1.0 / 3) <= 0.02);
}

TEST_CASE("F sums do not depend on the coins") {
  Graph g = k2_5();
  DenseState st = phase2_pair_edges(phase1_reduce(g, 2));
  Rng rng(9);
  st = phase3_pair_labels(st, rng);
  std::vector<std::vector<char>> coin_sets = {std::vector<char>(st.edge_pairs.size(), 1),
                                              std::vector<char>(st.edge_pairs.size(), 0)};
  for (int i = 0; i < 20; ++i) {
    std::vector<char> c(st.edge_pairs.size());
    for (auto& x : c) x = static_cast<char>(rng() & 1);
    coin_sets.push_back(c);
  }
  for (const auto& coins : coin_sets) {
    Labeling l = phase5_assign(st, coins);
    CHECK(brute::is_permutation_1_to_m(l.labels));
    for (Vertex v = 0; v < g.n(); ++v) {
      Weight f = 0;
      for (EdgeId e : st.f_sets[v]) f += l.labels[e];
      CHECK(f == st.f_sums[v]);
    }
  }
}

TEST_CASE("full pipeline output on the 6-cycle is a bijection") {
  Graph c6 = cycle(6);
  DenseState st = phase2_pair_edges(phase1_reduce(c6, 2));
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    st = phase3_pair_labels(std::move(st), rng);
    CHECK(brute::is_permutation_1_to_m(phase5_assign(st, rng).labels));
  }
}

TEST_CASE("dense driver success on the first draw") {
  Graph g = cube();
  bool immediate = false;
  for (std::uint64_t seed = 0; seed < 64 && !immediate; ++seed) {
    DenseConfig cfg;
    cfg.d = 3;
    cfg.seed = seed;
    DenseResult r = label_dense(g, cfg);
    REQUIRE(r.labeling);
    CHECK(brute::is_antimagic(g, r.labeling->labels));
    immediate = r.restarts == 0 && r.resamples == 0;
  }
  CHECK(immediate);
}

TEST_CASE("dense driver failure report") {
  Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}});
  DenseConfig cfg;
  cfg.d = 1;
  cfg.max_restarts = 1;
  DenseResult r = label_dense(g, cfg);
  CHECK_FALSE(r.labeling);
  CHECK(r.best_collisions == 2);
  REQUIRE(r.last_collision);
  CHECK(*r.last_collision == std::pair<Vertex, Vertex>{0, 1});
  cfg.max_restarts = 0;
  CHECK_THROWS_AS(label_dense(g, cfg), PreconditionError);
}

TEST_CASE("dense driver on random graphs returns verified labelings") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = random_min_degree(64, 30, seed);
    DenseConfig cfg;
    cfg.seed = seed;
    DenseResult r = label_dense(g, cfg);
    REQUIRE(r.labeling);
    CHECK(brute::is_antimagic(g, r.labeling->labels));
  }
}

TEST_CASE("matching fallback pairs what greedy pairing would") {
  Graph c6 = cycle(6);
  std::vector<EdgeId> all(6);
  std::iota(all.begin(), all.end(), 0);
  auto p = disjoint_edge_pairing_by_matching(c6, all);
  REQUIRE(p);
  CHECK(p->size() == 3);
  for (auto [a, b] : *p) CHECK_FALSE(share(c6, a, b));
  Graph star = Graph::from_edges(3, {{0, 1}, {0, 2}});
  CHECK_FALSE(disjoint_edge_pairing_by_matching(star, {0, 1}));
  CHECK_FALSE(disjoint_edge_pairing(star, {0, 1}));
}
