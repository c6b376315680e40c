#include "antimagic/harness.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "antimagic/io.hpp"
#include "antimagic/partite.hpp"
#include "antimagic/special.hpp"

namespace antimagic {

const char* to_string(Method m) {
  switch (m) {
    case Method::automatic: return "auto";
    case Method::universal: return "universal";
    case Method::delta_n2: return "delta-n2";
    case Method::partite: return "partite";
    case Method::dense: return "dense";
    case Method::oracle: return "oracle";
  }
  return "unknown";
}

std::optional<Method> parse_method(const std::string& s) {
  for (Method m : {Method::automatic, Method::universal, Method::delta_n2, Method::partite, Method::dense,
                   Method::oracle}) {
    if (s == to_string(m)) return m;
  }
  return std::nullopt;
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::antimagic: return "antimagic";
    case Outcome::failed: return "failed";
    case Outcome::not_applicable: return "not_applicable";
  }
  return "unknown";
}

bool is_k2(const Graph& g) { return g.n() == 2 && g.m() == 1; }

namespace {

Method choose_route(const Graph& g, const DispatchConfig& cfg) {
  const int n = g.n();
  if (n >= 3 && g.max_degree() == n - 1) return Method::universal;
  if (n >= 4 && g.max_degree() == n - 2) return Method::delta_n2;
  if (n >= 3 && recognize_complete_multipartite(g)) return Method::partite;
  const int d = cfg.dense.d > 0 ? cfg.dense.d : default_min_degree_parameter(n);
  if (n >= 2 && g.m() >= 2 && g.min_degree() >= d) return Method::dense;
  return Method::oracle;
}

void run_route(const Graph& g, Method route, const DispatchConfig& cfg, RunReport& rep) {
  switch (route) {
    case Method::universal:
      rep.certificate = label_universal_vertex(g);
      return;
    case Method::delta_n2:
      rep.certificate = label_max_degree_n_minus_2(g);
      return;
    case Method::partite: {
      auto classes = recognize_complete_multipartite(g);
      if (!classes) throw PreconditionError("graph is not complete multipartite");
      rep.certificate = label_complete_multipartite(g, *classes).labeling;
      return;
    }
    case Method::dense: {
      DenseResult res = label_dense(g, cfg.dense);
      rep.restarts = res.restarts;
      if (res.labeling) {
        rep.certificate = std::move(res.labeling);
      } else {
        rep.note = "restart budget exhausted; best collision count " + std::to_string(res.best_collisions);
      }
      return;
    }
    case Method::oracle: {
      SearchBudget b = cfg.search;
      b.mode = SearchMode::heuristic;
      SearchResult res = heuristic_search(g, b);
      rep.restarts = res.restarts_used;
      if (res.outcome != SearchOutcome::found && g.m() <= cfg.exhaustive_max_edges) {
        b.mode = SearchMode::exhaustive;
        res = exhaustive_search(g, b);
      }
      rep.note = std::string("search ") + to_string(res.outcome);
      if (res.labeling) rep.certificate = std::move(res.labeling);
      return;
    }
    case Method::automatic:
      break;
  }
  throw InvariantError("unresolved labeling route");
}

}  // namespace

RunReport dispatch_label(const Graph& g, const DispatchConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  RunReport rep;
  rep.graph_id = to_graph6(g);
  const Method route = cfg.method == Method::automatic ? choose_route(g, cfg) : cfg.method;
  rep.method = to_string(route);
  if (is_k2(g)) {
    rep.outcome = Outcome::not_applicable;
    rep.note = "K2 exception: its two vertex sums always coincide";
    if (route == Method::oracle) {
      SearchBudget b = cfg.search;
      rep.note += "; exhaustive search ";
      rep.note += to_string(exhaustive_search(g, b).outcome);
    }
  } else {
    try {
      run_route(g, route, cfg, rep);
      rep.outcome = rep.certificate ? Outcome::antimagic : Outcome::failed;
    } catch (const InvariantError&) {
      throw;
    } catch (const PreconditionError& e) {
      rep.outcome = Outcome::not_applicable;
      rep.note = e.what();
    }
  }
  if (rep.certificate) {
    const VerifyReport v = verify_antimagic(g, *rep.certificate);
    if (!v.ok) throw InvariantError("certificate failed re-verification: " + v.reason);
  }
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<RunReport> sweep(const std::vector<Graph>& graphs, const SweepConfig& cfg) {
  std::vector<RunReport> out(graphs.size());
  int threads = cfg.threads > 0 ? cfg.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min<int>(threads, static_cast<int>(graphs.size())));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t i = next++; i < graphs.size() && !failed; i = next++) {
      try {
        out[i] = dispatch_label(graphs[i], cfg.dispatch);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace antimagic
