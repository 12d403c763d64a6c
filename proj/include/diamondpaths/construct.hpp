#pragma once

#include "diamondpaths/connectivity.hpp"
#include "diamondpaths/graph.hpp"

namespace diamondpaths {

/// A pair (u, v) together with an independent path system between them.
struct IndependentWitness {
  VertexId u;
  VertexId v;
  PathSystem system;  // kind independent, source u, sink v
};

/// Given 2 edge-disjoint s-t paths P1, P2, sets u := s and v := the vertex
/// common to P1 and P2 that is closest to s along P1 (excluding s); the s-v
/// prefixes of P1 and P2 are two independent u-v paths.
IndependentWitness find_two_independent(const Graph& g, const VertexId& s, const VertexId& t);

/// The vertex lying on all three pairwise tree paths between s1, s2, s3:
/// computed as the vertex on both the s1-s3 and s2-s3 tree paths that is
/// closest to s2 along the s2-s3 path. The three si-v tree paths share only v.
VertexId tree_median(const SpanningTree& t, const VertexId& s1, const VertexId& s2,
                     const VertexId& s3);

/// Turns 3 edge-disjoint s-t paths into 3 independent u-v paths: u := s,
/// s_i := the neighbor of s on path i, T := BFS tree of the component of
/// g minus s containing t, v := tree_median(T, s1, s2, s3); each returned
/// path is the edge u-s_i followed by the s_i-v tree path.
IndependentWitness find_three_independent(const Graph& g, const VertexId& s, const VertexId& t);

}  // namespace diamondpaths
