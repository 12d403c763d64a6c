#pragma once

#include <string>
#include <vector>

#include "diamondpaths/graph.hpp"

namespace diamondpaths {

enum class PathKind { edge_disjoint, independent };

struct Path {
  std::vector<VertexId> vertices;

  size_t size() const { return vertices.size(); }
  /// Vertices strictly between the endpoints.
  std::vector<VertexId> interior() const;
};

/// A set of s-t paths with a disjointness contract. kind=edge_disjoint means
/// no two paths share an edge; kind=independent means no path contains an
/// interior vertex of another (which implies edge-disjointness).
struct PathSystem {
  VertexId source;
  VertexId sink;
  PathKind kind = PathKind::edge_disjoint;
  std::vector<Path> paths;

  int count() const { return static_cast<int>(paths.size()); }
};

enum class CertVariant { vertex_cut, degree_bound };

/// Machine-checkable upper bound on the number of independent u-v paths:
/// either a vertex cut (bound = cut size, valid only for non-adjacent pairs)
/// or the degree of one endpoint of the edge uv.
struct UpperBoundCertificate {
  CertVariant variant = CertVariant::vertex_cut;
  std::vector<VertexId> cut;  // vertex_cut; sorted
  VertexId witness_vertex;    // degree_bound
  int bound = 0;
  bool fallback = false;  // set by diamond::structural_upper_bound when it
                          // had to fall back to the flow-derived cut
};

struct Verdict {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Maximum set of pairwise edge-disjoint s-t paths (the s-t edge
/// connectivity), via unit-capacity augmenting-path max flow and a
/// deterministic decomposition into simple paths.
PathSystem max_edge_disjoint_paths(const Graph& g, const VertexId& s, const VertexId& t);

struct IndependentResult {
  PathSystem system;
  UpperBoundCertificate certificate;
};

/// Maximum set of pairwise independent (internally vertex-disjoint) u-v
/// paths, with a certificate. Non-adjacent pairs get a vertex cut of size
/// equal to the path count (Menger equality); adjacent pairs get a
/// degree bound at the smaller-degree endpoint, and the count is
/// 1 + (max independent paths in g minus the edge uv).
IndependentResult max_independent_paths(const Graph& g, const VertexId& u, const VertexId& v);

/// The Menger reduction network: every vertex except u and v is split into
/// an in/out half joined by a unit arc; every edge becomes unit arcs both
/// ways. Max u->v flow equals the max independent path count.
struct SplitNetwork {
  std::vector<std::string> node_names;
  int source = -1;
  int sink = -1;
  struct Arc {
    int from;
    int to;
  };
  std::vector<Arc> arcs;  // all unit capacity

  int node_count() const { return static_cast<int>(node_names.size()); }
};

SplitNetwork split_vertices(const Graph& g, const VertexId& u, const VertexId& v);

/// Max flow value of a SplitNetwork (deterministic).
int split_network_max_flow(const SplitNetwork& net);

/// Checks every PathSystem invariant and lists all violations: non-path
/// sequences, wrong endpoints, shared edges, shared interior vertices.
Verdict check_path_system(const Graph& g, const PathSystem& ps);

/// Validates a certificate against the graph: vertex cuts must exclude u,v
/// and disconnect them; degree bounds must name an endpoint of the edge uv
/// with matching degree.
Verdict verify_cut(const Graph& g, const VertexId& u, const VertexId& v,
                   const UpperBoundCertificate& cert);

/// Brute-force maximum number of pairwise independent u-v paths, by
/// enumerating all simple u-v paths and exact set packing over interior
/// vertex sets. Only for graphs with at most 12 vertices.
int oracle_max_independent(const Graph& g, const VertexId& u, const VertexId& v);

}  // namespace diamondpaths
