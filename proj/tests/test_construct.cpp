#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "diamondpaths/construct.hpp"
#include "diamondpaths/diamond.hpp"
#include "diamondpaths/experiments.hpp"
#include "diamondpaths/rng.hpp"

using namespace diamondpaths;

TEST_CASE("find_two_independent on the 4-cycle") {
  Graph g = build_graph({{"s", "a"}, {"a", "t"}, {"t", "b"}, {"b", "s"}});
  IndependentWitness w = find_two_independent(g, "s", "t");
  CHECK(w.u == "s");
  CHECK(w.v == "t");
  REQUIRE(w.system.count() == 2);
  CHECK(w.system.paths[0].vertices == std::vector<VertexId>{"s", "a", "t"});
  CHECK(w.system.paths[1].vertices == std::vector<VertexId>{"s", "b", "t"});
  CHECK(check_path_system(g, w.system).ok());
}

TEST_CASE("find_two_independent stops at the first shared vertex") {
  Graph g = build_graph(
      {{"s", "a"}, {"a", "m"}, {"m", "b"}, {"b", "t"}, {"s", "c"}, {"c", "m"}, {"m", "d"}, {"d", "t"}});
  IndependentWitness w = find_two_independent(g, "s", "t");
  CHECK(w.u == "s");
  CHECK(w.v == "m");
  REQUIRE(w.system.count() == 2);
  CHECK(w.system.paths[0].vertices == std::vector<VertexId>{"s", "a", "m"});
  CHECK(w.system.paths[1].vertices == std::vector<VertexId>{"s", "c", "m"});
  CHECK(check_path_system(g, w.system).ok());
}

TEST_CASE("find_two_independent precondition") {
  Graph g = build_graph({{"s", "a"}, {"a", "t"}});
  CHECK_THROWS_WITH_AS(find_two_independent(g, "s", "t"), doctest::Contains("found 1"),
                       precondition_error);
}

TEST_CASE("tree_median examples") {
  // Star: all tree paths cross the center.
  Graph star = build_graph({{"c", "s1"}, {"c", "s2"}, {"c", "s3"}});
  SpanningTree t = bfs_tree(star, "c", {"c", "s1", "s2", "s3"});
  CHECK(tree_median(t, "s1", "s2", "s3") == "c");

  // Collinear: the middle vertex is the median.
  Graph line = build_graph({{"s1", "s2"}, {"s2", "s3"}});
  SpanningTree tl = bfs_tree(line, "s1", {"s1", "s2", "s3"});
  CHECK(tree_median(tl, "s1", "s2", "s3") == "s2");

  // s1 - a - s3 with s2 hanging off a.
  Graph y = build_graph({{"s1", "a"}, {"a", "s3"}, {"s2", "a"}});
  SpanningTree ty = bfs_tree(y, "a", {"a", "s1", "s2", "s3"});
  CHECK(tree_median(ty, "s1", "s2", "s3") == "a");

  CHECK_THROWS_AS(tree_median(ty, "s1", "s1", "s3"), precondition_error);
  CHECK_THROWS_AS(tree_median(ty, "s1", "s2", "zz"), precondition_error);
}

TEST_CASE("tree_median lies on all three pairwise paths") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    // Random connected graph, then its BFS tree.
    int n = 6 + static_cast<int>(rng.next_below(20));
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<VertexId> names;
    for (int i = 0; i < n; ++i) names.push_back("n" + std::to_string(100 + i));
    for (int i = 1; i < n; ++i) {
      edges.emplace_back(names[static_cast<size_t>(i)],
                         names[rng.next_below(static_cast<std::uint64_t>(i))]);
    }
    Graph g = build_graph(edges);
    std::set<VertexId> all(names.begin(), names.end());
    SpanningTree t = bfs_tree(g, names[0], all);

    VertexId s1 = names[1 + rng.next_below(static_cast<std::uint64_t>(n - 1))];
    VertexId s2, s3;
    do {
      s2 = names[rng.next_below(static_cast<std::uint64_t>(n))];
    } while (s2 == s1);
    do {
      s3 = names[rng.next_below(static_cast<std::uint64_t>(n))];
    } while (s3 == s1 || s3 == s2);

    VertexId v = tree_median(t, s1, s2, s3);
    auto contains = [](const std::vector<VertexId>& path, const VertexId& x) {
      return std::find(path.begin(), path.end(), x) != path.end();
    };
    CHECK(contains(t.tree_path(s1, s2), v));
    CHECK(contains(t.tree_path(s1, s3), v));
    CHECK(contains(t.tree_path(s2, s3), v));

    // The three s_i - v tree paths share only v.
    auto p1 = t.tree_path(s1, v);
    auto p2 = t.tree_path(s2, v);
    auto p3 = t.tree_path(s3, v);
    auto shared_only_v = [&](const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
      std::set<VertexId> sa(a.begin(), a.end());
      int common = 0;
      for (const auto& x : b) common += sa.count(x);
      return common == 1;
    };
    CHECK(shared_only_v(p1, p2));
    CHECK(shared_only_v(p1, p3));
    CHECK(shared_only_v(p2, p3));
  }
}

TEST_CASE("find_three_independent on K23") {
  Graph k23 = build_graph(
      {{"s", "m1"}, {"s", "m2"}, {"s", "m3"}, {"t", "m1"}, {"t", "m2"}, {"t", "m3"}});
  IndependentWitness w = find_three_independent(k23, "s", "t");
  CHECK(w.u == "s");
  CHECK(w.v == "t");
  REQUIRE(w.system.count() == 3);
  CHECK(w.system.paths[0].vertices == std::vector<VertexId>{"s", "m1", "t"});
  CHECK(w.system.paths[1].vertices == std::vector<VertexId>{"s", "m2", "t"});
  CHECK(w.system.paths[2].vertices == std::vector<VertexId>{"s", "m3", "t"});
  CHECK(check_path_system(k23, w.system).ok());
}

TEST_CASE("find_three_independent on G2") {
  Graph g2 = generate_diamond(2).graph;
  IndependentWitness w = find_three_independent(g2, "s", "t");
  CHECK(w.u == "s");
  CHECK(w.system.count() == 3);
  CHECK(w.system.kind == PathKind::independent);
  CHECK(check_path_system(g2, w.system).ok());

  IndependentWitness again = find_three_independent(g2, "s", "t");
  CHECK(again.v == w.v);
  for (int i = 0; i < 3; ++i) {
    CHECK(again.system.paths[static_cast<size_t>(i)].vertices ==
          w.system.paths[static_cast<size_t>(i)].vertices);
  }
}

TEST_CASE("find_three_independent on K4") {
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<VertexId> names{"a", "b", "s", "t"};
  for (size_t i = 0; i < names.size(); ++i) {
    for (size_t j = i + 1; j < names.size(); ++j) {
      edges.emplace_back(names[i], names[j]);
    }
  }
  Graph k4 = build_graph(edges);
  IndependentWitness w = find_three_independent(k4, "s", "t");
  CHECK(w.u == "s");
  CHECK(w.system.count() == 3);
  CHECK(check_path_system(k4, w.system).ok());
  CHECK(oracle_max_independent(k4, "s", "t") == 3);
}

TEST_CASE("find_three_independent degenerate median: v equals an anchor") {
  // BFS tree from t is t-s1, t-s3, t-w, s1-s2, so the median of the anchors
  // (s1, s2, s3) is s1 itself and the first path is the single edge s-s1.
  Graph g = build_graph({{"s", "s1"},
                         {"s", "s2"},
                         {"s", "s3"},
                         {"s1", "t"},
                         {"s3", "t"},
                         {"s2", "w"},
                         {"w", "t"},
                         {"s2", "s1"}});
  IndependentWitness w = find_three_independent(g, "s", "t");
  CHECK(w.u == "s");
  CHECK(w.v == "s1");
  REQUIRE(w.system.count() == 3);
  CHECK(w.system.paths[0].vertices == std::vector<VertexId>{"s", "s1"});
  CHECK(w.system.paths[1].vertices == std::vector<VertexId>{"s", "s2", "s1"});
  CHECK(w.system.paths[2].vertices == std::vector<VertexId>{"s", "s3", "t", "s1"});
  CHECK(check_path_system(g, w.system).ok());
}

TEST_CASE("find_three_independent precondition") {
  Graph g1 = generate_diamond(1).graph;
  CHECK_THROWS_WITH_AS(find_three_independent(g1, "s", "t"), doctest::Contains("found 2"),
                       precondition_error);
}

TEST_CASE("witnesses on planted instances") {
  SplitMix64 rng(512);
  for (int trial = 0; trial < 60; ++trial) {
    std::uint64_t seed = rng.next();
    int n = 5 + static_cast<int>(rng.next_below(40));
    double extra = (trial % 3) * 0.1;

    PlantedInstance three = plant_paths_graph(seed, std::max(n, 5), 3, extra);
    IndependentWitness w3 = find_three_independent(three.graph, three.s, three.t);
    CHECK(w3.u == three.s);
    CHECK(w3.system.count() == 3);
    CHECK(check_path_system(three.graph, w3.system).ok());

    PlantedInstance two = plant_paths_graph(seed, std::max(n, 4), 2, extra);
    IndependentWitness w2 = find_two_independent(two.graph, two.s, two.t);
    CHECK(w2.u == two.s);
    CHECK(w2.system.count() == 2);
    CHECK(check_path_system(two.graph, w2.system).ok());
  }
}
