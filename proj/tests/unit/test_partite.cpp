#include <doctest.h>

#include <functional>

#include "antimagic/enumerate.hpp"
#include "antimagic/partite.hpp"
#include "brute.hpp"

using namespace antimagic;

namespace {

bool is_permutation_of_range(const LabelMatrix& a) {
  return brute::is_permutation_1_to_m(a.entries);
}

// Integer partitions of `total` into parts >= 1, non-decreasing.
void for_each_class_vector(int total, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int min_part) {
    if (left == 0) {
      f(cur);
      return;
    }
    for (int p = min_part; p <= left; ++p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(total, 1);
}

}  // namespace

TEST_CASE("matrix examples") {
  LabelMatrix a = antimagic_matrix(1, 2);
  CHECK(a.entries == std::vector<Label>{1, 2});

  LabelMatrix b = antimagic_matrix(3, 4);
  CHECK(b.entries == std::vector<Label>{1, 2, 3, 4, 8, 7, 6, 5, 9, 10, 11, 12});
  CHECK(b.row_sums() == std::vector<Weight>{10, 26, 42});
  CHECK(b.col_sums() == std::vector<Weight>{18, 19, 20, 21});

  LabelMatrix base = snake_fill(2, 4);
  CHECK(base.row_sums()[0] == 10);
  CHECK(base.col_sums()[2] == 10);
  LabelMatrix c = antimagic_matrix(2, 4);
  CHECK(c.entries == std::vector<Label>{1, 3, 5, 7, 2, 4, 6, 8});
  CHECK(c.row_sums() == std::vector<Weight>{16, 20});
  CHECK(c.col_sums() == std::vector<Weight>{3, 7, 11, 15});

  CHECK_THROWS_AS(antimagic_matrix(1, 1), NotAntimagicError);
}

TEST_CASE("transposed request keeps rows and columns of the caller") {
  LabelMatrix a = antimagic_matrix(5, 2);
  CHECK(a.rows == 5);
  CHECK(a.cols == 2);
  CHECK(a.transposed);
  CHECK(is_permutation_of_range(a));
  CHECK(matrix_sums_distinct(a));
}

TEST_CASE("matrix invariants for all 1 <= m <= n <= 30") {
  for (int m = 1; m <= 30; ++m) {
    for (int n = m; n <= 30; ++n) {
      if (m * n < 2) continue;
      const LabelMatrix base = snake_fill(m, n);
      const auto r = base.row_sums();
      const auto c = base.col_sums();
      for (int i = 1; i < m; ++i) REQUIRE(r[i] - r[i - 1] == static_cast<Weight>(n) * n);
      for (int j = 1; j < n; ++j) REQUIRE(c[j] - c[j - 1] == (m % 2 == 1 ? 1 : 2));
      REQUIRE(c[n - 1] - c[0] <= 2 * (n - 1));
      int hits = 0;
      for (auto x : r) hits += static_cast<int>(std::count(c.begin(), c.end(), x));
      REQUIRE(hits <= 1);
      const LabelMatrix a = antimagic_matrix(m, n);
      REQUIRE(is_permutation_of_range(a));
      REQUIRE(matrix_sums_distinct(a));
    }
  }
}

TEST_CASE("three-class example with classes of size two") {
  PartiteLabeling out = label_complete_multipartite(PartiteSpec{{2, 2, 2}});
  const Graph& g = out.graph;
  REQUIRE(g.m() == 12);
  // q = 4 edges inside B = {2,3,4,5}, canonical labels 1..4.
  CHECK(out.labeling.labels[*g.find_edge(2, 4)] == 1);
  CHECK(out.labeling.labels[*g.find_edge(2, 5)] == 2);
  CHECK(out.labeling.labels[*g.find_edge(3, 4)] == 3);
  CHECK(out.labeling.labels[*g.find_edge(3, 5)] == 4);
  // Initial weights 2:3, 3:7, 4:4, 5:6.
  CHECK(out.rest_sorted == std::vector<Vertex>{2, 4, 5, 3});
  const Vertex u[] = {2, 4, 5, 3};
  const Label row1[] = {5, 10, 7, 8};
  const Label row2[] = {9, 6, 11, 12};
  for (int j = 0; j < 4; ++j) {
    CHECK(out.labeling.labels[*g.find_edge(0, u[j])] == row1[j]);
    CHECK(out.labeling.labels[*g.find_edge(1, u[j])] == row2[j]);
  }
  CHECK(brute::sums(g, out.labeling.labels) == std::vector<std::int64_t>{30, 38, 17, 27, 20, 24});
  // Closed form (mB/2)(4i + 2q + n1(mB - 2) - 1) with mB = 4, q = 4, n1 = 2.
  for (int i = 1; i <= 2; ++i) CHECK(brute::sums(g, out.labeling.labels)[i - 1] == 2 * (4 * i + 8 + 4 - 1));
}

TEST_CASE("star and balanced three-class graphs") {
  PartiteLabeling star = label_complete_multipartite(PartiteSpec{{1, 3}});
  CHECK(brute::sums(star.graph, star.labeling.labels) == std::vector<std::int64_t>{6, 1, 2, 3});

  PartiteLabeling k333 = label_complete_multipartite(PartiteSpec{{3, 3, 3}});
  const auto w = brute::sums(k333.graph, k333.labeling.labels);
  REQUIRE(brute::is_antimagic(k333.graph, k333.labeling.labels));
  std::vector<std::int64_t> seq;
  for (Vertex v : k333.rest_sorted) seq.push_back(w[v]);
  for (Vertex v : k333.small_class) seq.push_back(w[v]);
  CHECK(seq.size() == 9);
  CHECK(std::is_sorted(seq.begin(), seq.end(), std::less_equal<>()));

  CHECK_THROWS_AS(label_complete_multipartite(PartiteSpec{{1, 1}}), NotAntimagicError);
}

TEST_CASE("every class-size vector up to 12 vertices") {
  for (int total = 2; total <= 12; ++total) {
    for_each_class_vector(total, [&](const std::vector<int>& sizes) {
      if (sizes.size() < 2 || total == 2) return;
      PartiteLabeling out = label_complete_multipartite(PartiteSpec{sizes});
      REQUIRE(brute::is_antimagic(out.graph, out.labeling.labels));
      if (sizes.size() >= 3 && sizes[0] >= 2) {
        const auto w = brute::sums(out.graph, out.labeling.labels);
        for (std::size_t j = 1; j < out.rest_sorted.size(); ++j) {
          REQUIRE(w[out.rest_sorted[j - 1]] < w[out.rest_sorted[j]]);
        }
        for (std::size_t i = 1; i < out.small_class.size(); ++i) {
          REQUIRE(w[out.small_class[i - 1]] < w[out.small_class[i]]);
        }
        REQUIRE(w[out.rest_sorted.back()] < w[out.small_class.front()]);
      }
    });
  }
}

TEST_CASE("multipartite recognition agrees with the definition up to 7 vertices") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : enumerate_graphs(n, false)) {
      REQUIRE(recognize_complete_multipartite(g).has_value() == brute::is_complete_multipartite(g));
    }
  }
}

TEST_CASE("labeling on a relabeled multipartite graph") {
  // K_{2,3} with interleaved vertex ids.
  Graph g = Graph::from_edges(5, {{0, 1}, {0, 3}, {0, 4}, {2, 1}, {2, 3}, {2, 4}});
  auto classes = recognize_complete_multipartite(g);
  REQUIRE(classes);
  PartiteLabeling out = label_complete_multipartite(g, *classes);
  CHECK(brute::is_antimagic(g, out.labeling.labels));
  CHECK_THROWS_AS(label_complete_multipartite(g, VertexClasses{{0, 1}, {2, 3, 4}}), PreconditionError);
}
