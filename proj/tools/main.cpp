#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "antimagic/enumerate.hpp"
#include "antimagic/generators.hpp"
#include "antimagic/harness.hpp"
#include "antimagic/io.hpp"
#include "antimagic/oracle.hpp"
#include "antimagic/problab.hpp"

namespace am = antimagic;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Output {
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file.open(path);
      if (!file) throw UsageError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file.is_open() ? static_cast<std::ostream&>(file) : std::cout; }
  std::ofstream file;
};

std::vector<am::Graph> load_graphs(const std::string& path, const std::string& format) {
  const std::string text = am::read_text(path);
  if (format == "g6line") return am::parse_graph6_lines(text);
  return {am::parse_graph(text)};
}

void write_graph(std::ostream& os, const am::Graph& g, const std::string& format) {
  if (format == "g6line") {
    os << am::to_graph6(g) << '\n';
  } else {
    os << am::emit_graph(g);
  }
}

std::string report_line(const am::RunReport& r) {
  std::ostringstream os;
  os << r.graph_id << " method=" << r.method << " outcome=" << am::to_string(r.outcome) << " restarts=" << r.restarts
     << " wall_ms=" << r.wall_ms;
  if (!r.note.empty()) os << " note=\"" << r.note << '"';
  return os.str();
}

std::vector<int> parse_sizes(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("bad class size '" + tok + "'");
    }
  }
  if (out.empty()) throw UsageError("--sizes needs at least one class size");
  return out;
}

struct GenOptions {
  std::string family;
  std::string sizes;
  int n = 0;
  int min_degree = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::string id;
};

void add_gen_options(CLI::App* cmd, GenOptions& o, bool family_required) {
  auto* fam = cmd->add_option("--family", o.family, "complete-partite | random-min-degree | named")
                  ->check(CLI::IsMember({"complete-partite", "random-min-degree", "named"}));
  if (family_required) fam->required();
  cmd->add_option("--sizes", o.sizes, "class sizes for complete-partite, e.g. 2,2,2");
  cmd->add_option("--n", o.n, "vertex count for random-min-degree");
  cmd->add_option("--min-degree", o.min_degree, "minimum degree for random-min-degree");
  cmd->add_option("--p", o.p, "initial edge probability for random-min-degree");
  cmd->add_option("--gen-seed", o.seed, "generator seed");
  cmd->add_option("--id", o.id, "named graph: cycle:N, path:N, star:N, complete:N, petersen");
}

am::Graph generate(const GenOptions& o) {
  if (o.family == "complete-partite") return am::complete_partite(parse_sizes(o.sizes));
  if (o.family == "random-min-degree") return am::random_min_degree(o.n, o.min_degree, o.seed, o.p);
  if (o.family == "named") return am::named_graph(o.id);
  throw UsageError("unknown family '" + o.family + "'");
}

struct LabelOptions {
  std::string method = "auto";
  int d = 0;
  std::uint64_t seed = 0;
  int max_restarts = 1000;
};

void add_label_options(CLI::App* cmd, LabelOptions& o) {
  cmd->add_option("--method", o.method, "auto | universal | delta-n2 | partite | dense | oracle")
      ->check(CLI::IsMember({"auto", "universal", "delta-n2", "partite", "dense", "oracle"}));
  cmd->add_option("--d", o.d, "minimum-degree parameter for the dense pipeline (default ceil(3 ln n))");
  cmd->add_option("--seed", o.seed, "seed for randomized methods");
  cmd->add_option("--max-restarts", o.max_restarts, "pairing redraw budget for the dense pipeline")
      ->check(CLI::PositiveNumber);
}

am::DispatchConfig dispatch_config(const LabelOptions& o) {
  am::DispatchConfig cfg;
  cfg.method = *am::parse_method(o.method);
  cfg.dense.d = o.d;
  cfg.dense.seed = o.seed;
  cfg.dense.max_restarts = o.max_restarts;
  cfg.search.seed = o.seed;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct and verify antimagic edge labelings"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string format = "edgelist";
  std::string out_path;
  auto add_io = [&](CLI::App* cmd, bool with_input) {
    if (with_input) cmd->add_option("input", input, "input file, '-' for stdin");
    cmd->add_option("--format", format, "edgelist | g6line")->check(CLI::IsMember({"edgelist", "g6line"}));
    cmd->add_option("--out", out_path, "output file (default stdout)");
  };

  // label
  auto* label = app.add_subcommand("label", "label a graph and print a certificate");
  LabelOptions lopt;
  GenOptions label_gen;
  add_io(label, true);
  add_label_options(label, lopt);
  add_gen_options(label, label_gen, false);

  // verify
  auto* verify = app.add_subcommand("verify", "re-check a certificate");
  std::string graph_path;
  verify->add_option("input", input, "certificate file, '-' for stdin");
  verify->add_option("--graph", graph_path, "edge-list graph the certificate must match");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "search for a certificate on a small graph");
  std::string mode = "exhaustive";
  am::SearchBudget budget;
  bool count = false;
  add_io(oracle, true);
  oracle->add_option("--mode", mode, "exhaustive | heuristic")->check(CLI::IsMember({"exhaustive", "heuristic"}));
  oracle->add_option("--max-nodes", budget.max_nodes, "exhaustive node budget")->check(CLI::PositiveNumber);
  oracle->add_option("--iters", budget.max_iters, "heuristic moves per restart")->check(CLI::PositiveNumber);
  oracle->add_option("--restarts", budget.restarts, "heuristic restarts")->check(CLI::PositiveNumber);
  oracle->add_option("--seed", budget.seed, "heuristic seed");
  oracle->add_flag("--count", count, "count all antimagic labelings (exhaustive)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "label every graph of a corpus");
  bool all_connected = false;
  int max_n = 6;
  int min_n = 2;
  int threads = 0;
  LabelOptions sopt;
  sopt.method = "oracle";
  std::string sweep_input;
  sweep->add_flag("--all-connected", all_connected, "enumerate all connected graphs up to isomorphism");
  sweep->add_option("--max-n", max_n, "largest vertex count for --all-connected")->check(CLI::Range(1, 10));
  sweep->add_option("--min-n", min_n, "smallest vertex count for --all-connected")->check(CLI::Range(1, 10));
  sweep->add_option("--input", sweep_input, "graph6 corpus file, one graph per line ('-' for stdin)");
  sweep->add_option("--threads", threads, "worker threads (default: hardware concurrency)");
  sweep->add_option("--out", out_path, "output file (default stdout)");
  add_label_options(sweep, sopt);

  // experiment
  auto* experiment = app.add_subcommand("experiment", "character-sum and point-probability experiments");
  std::string which;
  int t = 300, d = 30, trials = 1000;
  std::uint64_t eseed = 0;
  experiment->add_option("which", which, "character-bounds | point-probability (aliases lemma22 | lemma23)")
      ->required()
      ->check(CLI::IsMember({"character-bounds", "point-probability", "lemma22", "lemma23"}));
  experiment->add_option("--t", t, "label range size")->check(CLI::PositiveNumber);
  experiment->add_option("--d", d, "number of pairs")->check(CLI::PositiveNumber);
  experiment->add_option("--trials", trials, "random samples")->check(CLI::PositiveNumber);
  experiment->add_option("--seed", eseed, "seed");
  experiment->add_option("--out", out_path, "output file (default stdout)");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph");
  GenOptions gopt;
  add_gen_options(gen, gopt, true);
  add_io(gen, false);

  // bench
  auto* bench = app.add_subcommand("bench", "time the labelers on generated graphs");
  int bench_n = 128;
  int repeat = 5;
  bench->add_option("--n", bench_n, "vertex count")->check(CLI::Range(8, 2000));
  bench->add_option("--repeat", repeat, "runs per family")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*label) {
      Output out(out_path);
      std::vector<am::Graph> graphs =
          label_gen.family.empty() ? load_graphs(input, format) : std::vector<am::Graph>{generate(label_gen)};
      const am::DispatchConfig cfg = dispatch_config(lopt);
      bool all_ok = true;
      for (const am::Graph& g : graphs) {
        const am::RunReport r = am::dispatch_label(g, cfg);
        std::cerr << report_line(r) << '\n';
        if (graphs.size() > 1) out.stream() << "# " << report_line(r) << '\n';
        if (r.certificate) out.stream() << am::emit_certificate(g, *r.certificate);
        all_ok = all_ok && r.outcome == am::Outcome::antimagic;
      }
      return all_ok ? kExitOk : kExitFailed;
    }

    if (*verify) {
      const am::Certificate c = am::parse_certificate(am::read_text(input));
      if (!graph_path.empty() && !(am::parse_graph(am::read_text(graph_path)) == c.graph)) {
        std::cout << "MISMATCH certificate edges differ from the graph\n";
        return kExitFailed;
      }
      const am::VerifyReport rep = am::verify_antimagic(c.graph, c.labeling);
      const bool sums_match = am::vertex_sums(c.graph, c.labeling) == c.claimed_sums;
      if (rep.ok) {
        std::cout << "OK\n";
      } else if (rep.failure == am::VerifyReport::Failure::not_bijection) {
        std::cout << "NOT_BIJECTION " << rep.reason << '\n';
      } else {
        std::cout << "COLLISION " << rep.first_collision->first << ' ' << rep.first_collision->second << '\n';
      }
      if (!sums_match) std::cout << "CLAIMED_SUMS_WRONG\n";
      if (c.claimed_ok != rep.ok) std::cout << "CLAIMED_VERDICT_WRONG\n";
      return rep.ok && sums_match && c.claimed_ok ? kExitOk : kExitFailed;
    }

    if (*oracle) {
      Output out(out_path);
      bool any_found = true;
      for (const am::Graph& g : load_graphs(input, format)) {
        if (count) {
          auto c = am::count_antimagic_labelings(g, budget.max_nodes);
          if (c) {
            out.stream() << am::to_graph6(g) << " count=" << *c << '\n';
          } else {
            out.stream() << am::to_graph6(g) << " count=budget_exceeded\n";
          }
          any_found = any_found && c && *c > 0;
          continue;
        }
        budget.mode = mode == "heuristic" ? am::SearchMode::heuristic : am::SearchMode::exhaustive;
        const am::SearchResult r =
            mode == "heuristic" ? am::heuristic_search(g, budget) : am::exhaustive_search(g, budget);
        std::cerr << am::to_graph6(g) << " outcome=" << am::to_string(r.outcome) << " nodes=" << r.nodes
                  << " iterations=" << r.iterations << '\n';
        if (r.labeling) {
          out.stream() << am::emit_certificate(g, *r.labeling);
        } else {
          out.stream() << "# " << am::to_graph6(g) << ' ' << am::to_string(r.outcome) << '\n';
        }
        any_found = any_found && r.outcome == am::SearchOutcome::found;
      }
      return any_found ? kExitOk : kExitFailed;
    }

    if (*sweep) {
      std::vector<am::Graph> graphs;
      if (all_connected) {
        for (int n = min_n; n <= max_n; ++n) {
          auto part = am::enumerate_graphs(n, true);
          graphs.insert(graphs.end(), part.begin(), part.end());
        }
      } else if (!sweep_input.empty()) {
        graphs = am::parse_graph6_lines(am::read_text(sweep_input));
      } else {
        throw UsageError("sweep needs --all-connected or --input");
      }
      am::SweepConfig cfg;
      cfg.dispatch = dispatch_config(sopt);
      cfg.threads = threads;
      const auto start = std::chrono::steady_clock::now();
      const auto reports = am::sweep(graphs, cfg);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      Output out(out_path);
      int antimagic = 0, failed = 0, not_applicable = 0;
      for (const auto& r : reports) {
        out.stream() << report_line(r) << '\n';
        antimagic += r.outcome == am::Outcome::antimagic;
        failed += r.outcome == am::Outcome::failed;
        not_applicable += r.outcome == am::Outcome::not_applicable;
      }
      out.stream() << "# graphs=" << reports.size() << " antimagic=" << antimagic << " failed=" << failed
                   << " not_applicable=" << not_applicable << " seconds=" << secs << '\n';
      return failed == 0 ? kExitOk : kExitFailed;
    }

    if (*experiment) {
      Output out(out_path);
      auto& os = out.stream();
      if (which == "character-bounds" || which == "lemma22") {
        const auto s = am::run_character_bound_experiment(t, d, trials, eseed);
        os << "trial,ok_near,worst_near_x,near_ratio,ok_far,worst_far_x,far_ratio\n";
        for (std::size_t i = 0; i < s.per_trial.size(); ++i) {
          const auto& r = s.per_trial[i];
          os << i << ',' << r.ok_near << ',' << r.worst_near_x << ',' << r.near_ratio << ',' << r.ok_far << ','
             << r.worst_far_x << ',' << r.far_ratio << '\n';
        }
        os << "# t=" << t << " d=" << d << " p=" << am::modulus_for(t, d) << " trials=" << trials
           << " near_pass=" << s.near_pass << " far_pass=" << s.far_pass << " both_pass=" << s.both_pass
           << " worst_near_ratio=" << s.worst_near_ratio << " worst_far_ratio=" << s.worst_far_ratio << '\n';
      } else {
        const auto s = am::run_point_probability_experiment(t, d, trials, eseed);
        os << "trial,max_point_probability_times_t_sqrt_d\n";
        for (std::size_t i = 0; i < s.per_trial_scaled.size(); ++i) os << i << ',' << s.per_trial_scaled[i] << '\n';
        os << "# t=" << t << " d=" << d << " trials=" << trials << " worst=" << s.worst_scaled << '\n';
      }
      return kExitOk;
    }

    if (*gen) {
      Output out(out_path);
      write_graph(out.stream(), generate(gopt), format);
      return kExitOk;
    }

    if (*bench) {
      struct Case {
        std::string name;
        am::Graph graph;
      };
      const int dmin = 5 * static_cast<int>(std::ceil(std::log2(bench_n)));
      std::vector<Case> cases;
      cases.push_back({"dense random-min-degree", am::random_min_degree(bench_n, std::min(dmin, bench_n - 1), 1)});
      cases.push_back({"universal complete", am::named_graph("complete:" + std::to_string(std::min(bench_n, 200)))});
      cases.push_back({"partite 3 classes", am::complete_partite({bench_n / 4, bench_n / 4, bench_n / 2})});
      cases.push_back({"oracle petersen", am::named_graph("petersen")});
      for (const auto& c : cases) {
        double total = 0.0;
        std::string method;
        for (int i = 0; i < repeat; ++i) {
          am::DispatchConfig cfg;
          cfg.dense.seed = static_cast<std::uint64_t>(i);
          cfg.search.seed = static_cast<std::uint64_t>(i);
          const auto r = am::dispatch_label(c.graph, cfg);
          total += r.wall_ms;
          method = r.method;
        }
        std::cout << c.name << " n=" << c.graph.n() << " m=" << c.graph.m() << " method=" << method
                  << " mean_ms=" << total / repeat << '\n';
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const am::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const am::PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const am::StructuralError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}
