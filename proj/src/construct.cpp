#include "diamondpaths/construct.hpp"

#include <algorithm>
#include <set>

namespace diamondpaths {

IndependentWitness find_two_independent(const Graph& g, const VertexId& s, const VertexId& t) {
  PathSystem disjoint = max_edge_disjoint_paths(g, s, t);
  if (disjoint.count() < 2) {
    throw precondition_error("find_two_independent: need 2 edge-disjoint paths, found " +
                             std::to_string(disjoint.count()));
  }
  const auto& p1 = disjoint.paths[0].vertices;
  const auto& p2 = disjoint.paths[1].vertices;

  std::set<VertexId> on_p2(p2.begin(), p2.end());
  // v = first vertex after s along P1 that also lies on P2 (t qualifies, so
  // the scan always terminates).
  VertexId v;
  for (size_t i = 1; i < p1.size(); ++i) {
    if (on_p2.count(p1[i])) {
      v = p1[i];
      break;
    }
  }

  auto prefix_to = [](const std::vector<VertexId>& path, const VertexId& stop) {
    std::vector<VertexId> out;
    for (const auto& x : path) {
      out.push_back(x);
      if (x == stop) break;
    }
    return out;
  };

  IndependentWitness w;
  w.u = s;
  w.v = v;
  w.system.source = s;
  w.system.sink = v;
  w.system.kind = PathKind::independent;
  w.system.paths.push_back(Path{prefix_to(p1, v)});
  w.system.paths.push_back(Path{prefix_to(p2, v)});
  return w;
}

VertexId tree_median(const SpanningTree& t, const VertexId& s1, const VertexId& s2,
                     const VertexId& s3) {
  if (s1 == s2 || s2 == s3 || s1 == s3) {
    throw precondition_error("tree_median: vertices must be distinct");
  }
  for (const VertexId* v : {&s1, &s2, &s3}) {
    if (!t.covered.count(*v)) {
      throw precondition_error("tree_median: vertex \"" + *v + "\" not covered by tree");
    }
  }
  std::vector<VertexId> p13 = t.tree_path(s1, s3);
  std::vector<VertexId> p23 = t.tree_path(s2, s3);
  std::set<VertexId> on_p13(p13.begin(), p13.end());
  for (const auto& x : p23) {  // from s2 towards s3
    if (on_p13.count(x)) return x;
  }
  throw std::logic_error("tree_median: paths to a common endpoint must intersect");
}

IndependentWitness find_three_independent(const Graph& g, const VertexId& s, const VertexId& t) {
  PathSystem disjoint = max_edge_disjoint_paths(g, s, t);
  if (disjoint.count() < 3) {
    throw precondition_error("find_three_independent: need 3 edge-disjoint paths, found " +
                             std::to_string(disjoint.count()));
  }

  // Neighbors of s on the first three paths; distinct because the paths use
  // distinct edges at s in a simple graph.
  std::vector<VertexId> anchors;
  for (int i = 0; i < 3; ++i) {
    anchors.push_back(disjoint.paths[static_cast<size_t>(i)].vertices[1]);
  }

  std::set<VertexId> comp = component_containing(g, {s}, t);
  SpanningTree tree = bfs_tree(g, t, comp);
  VertexId v = tree_median(tree, anchors[0], anchors[1], anchors[2]);

  IndependentWitness w;
  w.u = s;
  w.v = v;
  w.system.source = s;
  w.system.sink = v;
  w.system.kind = PathKind::independent;
  for (const auto& si : anchors) {
    Path p;
    p.vertices.push_back(s);
    for (const auto& x : tree.tree_path(si, v)) {
      p.vertices.push_back(x);
    }
    w.system.paths.push_back(std::move(p));
  }
  return w;
}

}  // namespace diamondpaths
