#pragma once

#include <optional>
#include <span>
#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

class NotAntimagicError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// rows x cols matrix of labels, row-major.
struct LabelMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Label> entries;
  bool transposed = false;  // built as cols x rows and flipped on output

  Label at(int i, int j) const { return entries[static_cast<std::size_t>(i) * cols + j]; }
  Label& at(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
  std::vector<Weight> row_sums() const;
  std::vector<Weight> col_sums() const;
};

// Row i holds i*cols+1 .. (i+1)*cols, ascending on even rows (0-based) and
// on the last row, descending otherwise. Requires rows <= cols.
LabelMatrix snake_fill(int rows, int cols);

// Permutation of 1..rows*cols with all rows+cols line sums distinct.
// Throws NotAntimagicError when rows*cols < 2.
LabelMatrix antimagic_matrix(int rows, int cols);

bool matrix_sums_distinct(const LabelMatrix& a);

struct PartiteSpec {
  std::vector<int> class_sizes;
};

using VertexClasses = std::vector<std::vector<Vertex>>;

// Classes occupy consecutive vertex ids in the given order.
Graph complete_multipartite_graph(std::span<const int> class_sizes);
VertexClasses consecutive_classes(std::span<const int> class_sizes);

// Classes of g if it is complete multipartite with at least two classes.
std::optional<VertexClasses> recognize_complete_multipartite(const Graph& g);

struct PartiteLabeling {
  Graph graph;
  Labeling labeling;
  // Vertices of the smallest class in label-row order, and the remaining
  // vertices sorted by initial weight. Filled on the k >= 3 route only.
  std::vector<Vertex> small_class;
  std::vector<Vertex> rest_sorted;
};

PartiteLabeling label_complete_multipartite(const PartiteSpec& spec);
PartiteLabeling label_complete_multipartite(const Graph& g, const VertexClasses& classes);

}  // namespace antimagic
