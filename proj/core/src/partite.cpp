#include "antimagic/partite.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "antimagic/special.hpp"

namespace antimagic {

std::vector<Weight> LabelMatrix::row_sums() const {
  std::vector<Weight> r(rows, 0);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) r[i] += at(i, j);
  }
  return r;
}

std::vector<Weight> LabelMatrix::col_sums() const {
  std::vector<Weight> c(cols, 0);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) c[j] += at(i, j);
  }
  return c;
}

bool matrix_sums_distinct(const LabelMatrix& a) {
  std::vector<Weight> all = a.row_sums();
  auto c = a.col_sums();
  all.insert(all.end(), c.begin(), c.end());
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

LabelMatrix snake_fill(int rows, int cols) {
  if (rows < 1 || cols < rows) throw PreconditionError("snake fill needs 1 <= rows <= cols");
  LabelMatrix a{rows, cols, std::vector<Label>(static_cast<std::size_t>(rows) * cols), false};
  for (int i = 0; i < rows; ++i) {
    const bool ascending = (i % 2 == 0) || i == rows - 1;
    for (int j = 0; j < cols; ++j) {
      const int offset = ascending ? j : cols - 1 - j;
      a.at(i, j) = static_cast<Label>(i) * cols + offset + 1;
    }
  }
  return a;
}

namespace {

LabelMatrix normalized_matrix(int m, int n) {
  LabelMatrix a = snake_fill(m, n);
  if (m == 1) return a;
  const auto r = a.row_sums();
  const auto c = a.col_sums();
  int hit_row = -1;
  int hits = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      if (r[i] == c[j]) {
        hit_row = i;
        ++hits;
      }
    }
  }
  if (hits == 0) return a;
  if (hits > 1) throw InvariantError("snake fill has more than one row/column collision");
  // 1-based row index of the collision, as in the construction.
  const int I = hit_row + 1;
  if (I == m) throw InvariantError("collision on the last row");
  if (I > 1) {
    const int col = (I % 2 == 0) ? 0 : n - 1;
    std::swap(a.at(I - 1, col), a.at(I - 2, col));
  } else if (m >= 3) {
    std::swap(a.at(0, 0), a.at(1, 0));
  } else {
    // m = 2: odd numbers on the first row, even numbers on the second.
    for (int j = 0; j < n; ++j) {
      a.at(0, j) = 2 * j + 1;
      a.at(1, j) = 2 * j + 2;
    }
  }
  return a;
}

}  // namespace

LabelMatrix antimagic_matrix(int rows, int cols) {
  if (rows < 1 || cols < 1) throw PreconditionError("matrix dimensions must be positive");
  if (static_cast<long long>(rows) * cols < 2) throw NotAntimagicError("a 1x1 matrix is K2, which is not antimagic");
  if (rows <= cols) {
    LabelMatrix a = normalized_matrix(rows, cols);
    if (!matrix_sums_distinct(a)) throw InvariantError("matrix construction left equal line sums");
    return a;
  }
  LabelMatrix t = normalized_matrix(cols, rows);
  LabelMatrix a{rows, cols, std::vector<Label>(t.entries.size()), true};
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) a.at(i, j) = t.at(j, i);
  }
  if (!matrix_sums_distinct(a)) throw InvariantError("matrix construction left equal line sums");
  return a;
}

VertexClasses consecutive_classes(std::span<const int> class_sizes) {
  VertexClasses classes;
  Vertex next = 0;
  for (int sz : class_sizes) {
    if (sz < 1) throw PreconditionError("class sizes must be positive");
    std::vector<Vertex> cls(sz);
    std::iota(cls.begin(), cls.end(), next);
    next += sz;
    classes.push_back(std::move(cls));
  }
  return classes;
}

Graph complete_multipartite_graph(std::span<const int> class_sizes) {
  VertexClasses classes = consecutive_classes(class_sizes);
  int n = 0;
  for (const auto& c : classes) n += static_cast<int>(c.size());
  std::vector<std::pair<int, int>> edges;
  for (std::size_t a = 0; a < classes.size(); ++a) {
    for (std::size_t b = a + 1; b < classes.size(); ++b) {
      for (Vertex u : classes[a]) {
        for (Vertex v : classes[b]) edges.emplace_back(u, v);
      }
    }
  }
  return Graph::from_edges(n, edges);
}

std::optional<VertexClasses> recognize_complete_multipartite(const Graph& g) {
  const int n = g.n();
  if (n < 2 || g.m() == 0) return std::nullopt;
  std::vector<int> cls(n, -1);
  VertexClasses classes;
  for (Vertex v = 0; v < n; ++v) {
    if (cls[v] >= 0) continue;
    const int id = static_cast<int>(classes.size());
    classes.push_back({v});
    cls[v] = id;
    for (Vertex u = v + 1; u < n; ++u) {
      if (!g.adjacent(u, v)) {
        if (cls[u] >= 0) return std::nullopt;
        cls[u] = id;
        classes.back().push_back(u);
      }
    }
  }
  // Non-adjacency must be transitive: same class <=> non-adjacent.
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if ((cls[u] == cls[v]) == g.adjacent(u, v)) return std::nullopt;
    }
  }
  if (classes.size() < 2) return std::nullopt;
  return classes;
}

PartiteLabeling label_complete_multipartite(const PartiteSpec& spec) {
  Graph g = complete_multipartite_graph(spec.class_sizes);
  return label_complete_multipartite(g, consecutive_classes(spec.class_sizes));
}

PartiteLabeling label_complete_multipartite(const Graph& g, const VertexClasses& classes) {
  const int n = g.n();
  if (classes.size() < 2) throw PreconditionError("need at least two vertex classes");
  std::vector<int> cls(n, -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw PreconditionError("empty vertex class");
    for (Vertex v : classes[c]) {
      if (v < 0 || v >= n || cls[v] >= 0) throw PreconditionError("classes do not partition the vertices");
      cls[v] = static_cast<int>(c);
    }
  }
  if (std::count(cls.begin(), cls.end(), -1) > 0) throw PreconditionError("classes do not partition the vertices");
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if ((cls[u] == cls[v]) == g.adjacent(u, v)) {
        throw PreconditionError("graph is not complete multipartite on the given classes");
      }
    }
  }
  if (n == 2) throw NotAntimagicError("K2 is not antimagic");

  PartiteLabeling out;
  out.graph = g;
  // First class of minimum size.
  std::size_t small = 0;
  for (std::size_t c = 1; c < classes.size(); ++c) {
    if (classes[c].size() < classes[small].size()) small = c;
  }
  std::vector<Vertex> a_class = classes[small];
  std::sort(a_class.begin(), a_class.end());
  const int n1 = static_cast<int>(a_class.size());

  if (n1 == 1) {
    out.labeling = label_universal_vertex(g, a_class[0]);
  } else if (classes.size() == 2) {
    std::vector<Vertex> b_class = classes[1 - small];
    std::sort(b_class.begin(), b_class.end());
    LabelMatrix mat = antimagic_matrix(n1, static_cast<int>(b_class.size()));
    out.labeling.labels.assign(g.m(), 0);
    for (int i = 0; i < mat.rows; ++i) {
      for (int j = 0; j < mat.cols; ++j) out.labeling.labels[*g.find_edge(a_class[i], b_class[j])] = mat.at(i, j);
    }
  } else {
    std::vector<char> in_a(n, 0);
    for (Vertex v : a_class) in_a[v] = 1;
    out.labeling.labels.assign(g.m(), 0);
    Label q = 0;
    WeightMap w(n, 0);
    for (EdgeId e = 0; e < g.m(); ++e) {
      const Edge& ed = g.edge(e);
      if (in_a[ed.u] || in_a[ed.v]) continue;
      out.labeling.labels[e] = ++q;
      w[ed.u] += q;
      w[ed.v] += q;
    }
    std::vector<Vertex> b;
    for (Vertex v = 0; v < n; ++v) {
      if (!in_a[v]) b.push_back(v);
    }
    std::sort(b.begin(), b.end(), [&](Vertex x, Vertex y) { return w[x] != w[y] ? w[x] < w[y] : x < y; });
    const Label mb = static_cast<Label>(b.size());
    for (int i = 1; i <= n1; ++i) {
      for (Label j = 1; j <= mb; ++j) {
        Label c = (j % 2 == 1) ? (i - 1) * mb + j + q : (n1 - i) * mb + j + q;
        if (mb % 2 == 0 && j == mb) c = i * mb + q;
        out.labeling.labels[*g.find_edge(a_class[i - 1], b[j - 1])] = c;
      }
    }
    out.small_class = a_class;
    out.rest_sorted = b;
  }
  auto rep = verify_antimagic(g, out.labeling);
  if (!rep.ok) throw InvariantError("complete multipartite construction failed: " + rep.reason);
  return out;
}

}  // namespace antimagic
