#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diamondpaths/experiments.hpp"
#include "diamondpaths/serialize.hpp"

using namespace diamondpaths;

TEST_CASE("plant_paths_graph shapes") {
  // n = 5, k = 3, no extras: three length-2 paths (a K_{2,3}).
  PlantedInstance inst = plant_paths_graph(1, 5, 3, 0.0);
  CHECK(inst.graph.vertex_count() == 5);
  CHECK(inst.graph.edge_count() == 6);
  CHECK(inst.graph.degree("s") == 3);
  CHECK(inst.graph.degree("t") == 3);
  CHECK(max_edge_disjoint_paths(inst.graph, "s", "t").count() == 3);

  PlantedInstance sparse = plant_paths_graph(1, 20, 3, 0.1);
  CHECK(sparse.graph.vertex_count() == 20);
  CHECK(max_edge_disjoint_paths(sparse.graph, "s", "t").count() >= 3);

  CHECK_THROWS_AS(plant_paths_graph(1, 4, 3, 0.0), precondition_error);
  CHECK_THROWS_AS(plant_paths_graph(1, 5, 0, 0.0), precondition_error);
  CHECK_THROWS_AS(plant_paths_graph(1, 5, 3, 1.5), precondition_error);
}

TEST_CASE("plant_paths_graph determinism") {
  PlantedInstance a = plant_paths_graph(123, 30, 3, 0.2);
  PlantedInstance b = plant_paths_graph(123, 30, 3, 0.2);
  CHECK(a.graph == b.graph);
  PlantedInstance c = plant_paths_graph(124, 30, 3, 0.2);
  CHECK_FALSE(a.graph == c.graph);
}

TEST_CASE("random_graph determinism") {
  CHECK(random_graph(5, 8, 0.4) == random_graph(5, 8, 0.4));
  Graph g = random_graph(5, 8, 0.4);
  CHECK(g.vertex_count() == 8);
}

TEST_CASE("verify_lemma1 small run") {
  Lemma1Params params;
  params.trials = 60;
  params.seed = 11;
  params.n_max = 25;
  Report r = verify_lemma1(params, ScanMode::serial);
  CHECK(r.attempted == 60);
  CHECK(r.passed == 60);
  CHECK(r.ok());
  CHECK(r.max_observed == 3);
}

TEST_CASE("verify_two_path small run") {
  Lemma1Params params;
  params.trials = 40;
  params.seed = 12;
  params.n_max = 20;
  Report r = verify_two_path(params, ScanMode::serial);
  CHECK(r.attempted == 40);
  CHECK(r.passed == 40);
  CHECK(r.max_observed == 2);
}

TEST_CASE("verify_lemma2 maxima") {
  Report r1 = verify_lemma2(1, ScanMode::serial);
  CHECK(r1.ok());
  CHECK(r1.max_observed == 2);
  CHECK(r1.attempted == 6);  // 4 vertices
  CHECK(r1.fallbacks == 0);

  Report r2 = verify_lemma2(2, ScanMode::serial);
  CHECK(r2.ok());
  CHECK(r2.max_observed == 3);
  CHECK(r2.attempted == 66);  // 12 vertices
  CHECK(r2.fallbacks == 0);
  CHECK(r2.details.at("fallback_pairs").empty());

  CHECK_THROWS_AS(verify_lemma2(4), precondition_error);        // beyond default guard
  CHECK_THROWS_AS(verify_lemma2(5, ScanMode::serial, 5), precondition_error);
}

TEST_CASE("serial and parallel scans emit identical reports") {
  std::string serial = serialize_report(verify_lemma2(2, ScanMode::serial));
  std::string parallel = serialize_report(verify_lemma2(2, ScanMode::parallel));
  CHECK(serial == parallel);

  Lemma1Params params;
  params.trials = 30;
  params.seed = 5;
  params.n_max = 20;
  CHECK(serialize_report(verify_lemma1(params, ScanMode::serial)) ==
        serialize_report(verify_lemma1(params, ScanMode::parallel)));
}

TEST_CASE("report serialization round-trip and replay") {
  Report r = verify_lemma2(1, ScanMode::serial);
  std::string bytes = serialize_report(r);
  Report back = parse_report(bytes);
  CHECK(back.experiment == r.experiment);
  CHECK(back.attempted == r.attempted);
  CHECK(back.passed == r.passed);
  CHECK(back.max_observed == r.max_observed);
  CHECK(back.seed == r.seed);
  CHECK(serialize_report(back) == bytes);

  // Replaying the embedded parameters reproduces the identical report.
  Report replay = verify_lemma2(back.params.at("order").get<int>(), ScanMode::serial);
  CHECK(serialize_report(replay) == bytes);

  CHECK_THROWS_AS(parse_report("not json"), parse_error);
}

TEST_CASE("f_table rows") {
  Report r = f_table(4, ScanMode::serial);
  CHECK(r.ok());
  CHECK(r.attempted == 4);
  const auto& rows = r.details.at("rows");
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].at("f") == 1);
  CHECK(rows[1].at("f") == 2);
  CHECK(rows[2].at("f") == 3);
  CHECK(rows[3].at("f") == 3);
  CHECK(rows[2].at("order") == 2);
  CHECK(rows[3].at("order") == 2);
  CHECK(rows[3].at("upper_mode") == "flow-scan");
  CHECK(r.fallbacks == 0);
}

TEST_CASE("f_table beyond the flow-scan guard certifies structurally") {
  Report r = f_table(9, ScanMode::serial);
  CHECK(r.ok());
  const auto& rows = r.details.at("rows");
  CHECK(rows[8].at("k") == 9);
  CHECK(rows[8].at("order") == 4);
  CHECK(rows[8].at("upper_mode") == "structural-only");
  CHECK(rows[8].at("f") == 3);
  CHECK(r.fallbacks == 0);

  CHECK_THROWS_AS(f_table(33, ScanMode::serial), precondition_error);
}

TEST_CASE("verify_oracle_equivalence small run") {
  Report r = verify_oracle_equivalence(25, 7, 7, 0.4, ScanMode::serial);
  CHECK(r.ok());
  CHECK(r.attempted == 25);
  CHECK(r.details.at("pairs_checked").get<long long>() > 0);
  CHECK(r.details.at("menger_pairs_checked").get<long long>() > 0);
}

TEST_CASE("lemma1 report replays from its embedded parameters") {
  Lemma1Params params;
  params.trials = 25;
  params.seed = 77;
  params.n_max = 18;
  std::string bytes = serialize_report(verify_lemma1(params, ScanMode::serial));

  Report parsed = parse_report(bytes);
  Lemma1Params replay;
  replay.trials = parsed.params.at("trials").get<long long>();
  replay.seed = parsed.seed;
  replay.n_min = parsed.params.at("n_min").get<int>();
  replay.n_max = parsed.params.at("n_max").get<int>();
  replay.extra_fractions = parsed.params.at("extra_fractions").get<std::vector<double>>();
  CHECK(serialize_report(verify_lemma1(replay, ScanMode::serial)) == bytes);
}

TEST_CASE("scan_thread_count respects the environment variable") {
  int base = scan_thread_count();
  CHECK(base >= 1);

  setenv("DIAMONDPATHS_THREADS", "3", 1);
  CHECK(scan_thread_count() == 3);
  setenv("DIAMONDPATHS_THREADS", "junk", 1);
  CHECK(scan_thread_count() == base);
  unsetenv("DIAMONDPATHS_THREADS");
  CHECK(scan_thread_count() == base);
}
