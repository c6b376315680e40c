#include "antimagic/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "antimagic/io.hpp"

namespace antimagic {

namespace {

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : n_(g.n()), adj_(g.n(), std::vector<char>(g.n(), 0)) {
    for (const Edge& e : g.edges()) adj_[e.u][e.v] = adj_[e.v][e.u] = 1;
  }

  std::vector<Vertex> run() {
    std::vector<int> colors(n_, 0);
    search(colors);
    return best_order_;
  }

 private:
  // Stable refinement by neighbor color counts; cells keep their relative order.
  int refine(std::vector<int>& colors) const {
    int k = n_ == 0 ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
    while (true) {
      std::vector<std::vector<int>> sig(n_);
      for (int v = 0; v < n_; ++v) {
        sig[v].assign(static_cast<std::size_t>(k) + 1, 0);
        sig[v][0] = colors[v];
        for (int u = 0; u < n_; ++u) {
          if (adj_[v][u]) ++sig[v][static_cast<std::size_t>(colors[u]) + 1];
        }
      }
      std::vector<int> order(n_);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
      std::vector<int> next(n_, 0);
      int c = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++c;
        next[order[i]] = c;
      }
      int nk = n_ == 0 ? 0 : c + 1;
      colors = std::move(next);
      if (nk == k) return k;
      k = nk;
    }
  }

  void search(std::vector<int> colors) {
    int k = refine(colors);
    if (k == n_) {
      std::vector<Vertex> order(n_);
      for (int v = 0; v < n_; ++v) order[colors[v]] = v;
      std::vector<char> code;
      code.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
      for (int j = 1; j < n_; ++j) {
        for (int i = 0; i < j; ++i) code.push_back(adj_[order[i]][order[j]]);
      }
      if (best_order_.empty() || code > best_code_) {
        best_code_ = std::move(code);
        best_order_ = std::move(order);
      }
      return;
    }
    std::vector<int> size(k, 0);
    for (int c : colors) ++size[c];
    int target = 0;
    while (size[target] == 1) ++target;
    for (int v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      std::vector<int> ind(n_);
      for (int u = 0; u < n_; ++u) ind[u] = 2 * colors[u] + (colors[u] == target && u != v ? 1 : 0);
      // Compress back to 0..k.
      std::vector<int> vals(ind);
      std::sort(vals.begin(), vals.end());
      vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
      for (int& x : ind) x = static_cast<int>(std::lower_bound(vals.begin(), vals.end(), x) - vals.begin());
      search(std::move(ind));
    }
  }

  int n_;
  std::vector<std::vector<char>> adj_;
  std::vector<char> best_code_;
  std::vector<Vertex> best_order_;
};

}  // namespace

Graph canonical_graph(const Graph& g) {
  if (g.n() == 0) return g;
  std::vector<Vertex> order = Canonizer(g).run();
  std::vector<int> pos(g.n());
  for (int i = 0; i < g.n(); ++i) pos[order[i]] = i;
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(pos[e.u], pos[e.v]);
  return Graph::from_edges(g.n(), edges);
}

std::string canonical_form(const Graph& g) { return to_graph6(canonical_graph(g)); }

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
  if (n < 0) throw PreconditionError("negative vertex count");
  if (n > 10) throw ResourceError("exhaustive enumeration is limited to n <= 10");
  std::set<std::string> level;
  level.insert(to_graph6(Graph::from_edges(std::min(n, 1), {})));
  for (int k = 2; k <= n; ++k) {
    std::set<std::string> next;
    for (const std::string& code : level) {
      Graph base = from_graph6(code);
      std::vector<std::pair<int, int>> edges;
      for (const Edge& e : base.edges()) edges.emplace_back(e.u, e.v);
      const std::size_t keep = edges.size();
      for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
        edges.resize(keep);
        for (int v = 0; v < k - 1; ++v) {
          if (mask & (1u << v)) edges.emplace_back(v, k - 1);
        }
        next.insert(canonical_form(Graph::from_edges(k, edges)));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (const std::string& code : level) {
    Graph g = from_graph6(code);
    if (!connected_only || g.connected()) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace antimagic
