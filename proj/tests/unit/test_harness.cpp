#include <doctest.h>

#include "antimagic/enumerate.hpp"
#include "antimagic/generators.hpp"
#include "antimagic/harness.hpp"
#include "antimagic/io.hpp"
#include "brute.hpp"

using namespace antimagic;

TEST_CASE("generators") {
  CHECK(complete_partite({1, 3}).m() == 3);
  CHECK(complete_partite({2, 2, 2}).m() == 12);
  Graph a = random_min_degree(128, 15, 99);
  CHECK(a.min_degree() >= 15);
  CHECK(a == random_min_degree(128, 15, 99));
  CHECK_FALSE(a == random_min_degree(128, 15, 100));
  CHECK(random_min_degree(50, 10, 1, 0.3).min_degree() >= 10);
  CHECK_THROWS_AS(random_min_degree(5, 5, 1), PreconditionError);
  CHECK(named_graph("cycle:5").m() == 5);
  CHECK(named_graph("path:4").m() == 3);
  CHECK(named_graph("star:3").n() == 4);
  CHECK(named_graph("complete:5").m() == 10);
  Graph pet = named_graph("petersen");
  CHECK(pet.n() == 10);
  CHECK(pet.m() == 15);
  CHECK(pet.min_degree() == 3);
  CHECK(pet.max_degree() == 3);
  CHECK_THROWS_AS(named_graph("wheel:5"), PreconditionError);
  CHECK_THROWS_AS(named_graph("cycle:x"), PreconditionError);
}

TEST_CASE("method names") {
  CHECK(parse_method("delta-n2") == Method::delta_n2);
  CHECK(parse_method("auto") == Method::automatic);
  CHECK_FALSE(parse_method("magic"));
}

TEST_CASE("dispatch routes by structure") {
  DispatchConfig cfg;
  auto k33 = dispatch_label(complete_partite({3, 3}), cfg);
  CHECK(k33.method == "partite");
  CHECK(k33.outcome == Outcome::antimagic);

  auto c4 = dispatch_label(named_graph("cycle:4"), cfg);
  CHECK(c4.method == "delta-n2");
  CHECK(c4.outcome == Outcome::antimagic);

  auto k2 = dispatch_label(named_graph("complete:2"), cfg);
  CHECK(k2.outcome == Outcome::not_applicable);
  CHECK(k2.note.find("K2") != std::string::npos);
  CHECK_FALSE(k2.certificate);

  auto k5 = dispatch_label(named_graph("complete:5"), cfg);
  CHECK(k5.method == "universal");

  auto dense = dispatch_label(random_min_degree(128, 35, 4), cfg);
  CHECK(dense.method == "dense");
  CHECK(dense.outcome == Outcome::antimagic);

  auto pet = dispatch_label(named_graph("petersen"), cfg);
  CHECK(pet.method == "oracle");
  CHECK(pet.outcome == Outcome::antimagic);
  REQUIRE(pet.certificate);
  CHECK(brute::is_antimagic(named_graph("petersen"), pet.certificate->labels));

  DispatchConfig forced;
  forced.method = Method::universal;
  auto na = dispatch_label(named_graph("cycle:6"), forced);
  CHECK(na.outcome == Outcome::not_applicable);
  CHECK_FALSE(na.certificate);
}

TEST_CASE("sweep keeps input order") {
  auto graphs = enumerate_graphs(5, true);
  SweepConfig cfg;
  cfg.threads = 3;
  auto reports = sweep(graphs, cfg);
  REQUIRE(reports.size() == graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    CHECK(reports[i].graph_id == to_graph6(graphs[i]));
    CHECK(reports[i].outcome == Outcome::antimagic);
    REQUIRE(reports[i].certificate);
    CHECK(brute::is_antimagic(graphs[i], reports[i].certificate->labels));
  }
}
