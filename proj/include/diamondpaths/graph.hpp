#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace diamondpaths {

// Vertex identifiers are arbitrary text tokens: non-empty, no whitespace,
// no '#'. Their lexicographic order is the tie-breaking order used by every
// traversal and decomposition in this library.
using VertexId = std::string;

// Malformed textual input or invalid graph data (self-loop, duplicate edge
// in strict mode, bad identifier). The CLI maps this to exit code 2.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation's precondition does not hold (unknown vertex, source equals
// sink, too few edge-disjoint paths, size guard). CLI exit code 3.
struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool valid_vertex_id(const VertexId& id);

enum class GraphFormat { edge_list, structured, dot };

/// Simple undirected graph over string vertex ids, immutable once built.
/// Vertices are stored sorted, so vertex index order equals lexicographic
/// order and index-based loops are automatically deterministic.
class Graph {
public:
  Graph() = default;

  // Collapses duplicate edges (either orientation); rejects self-loops.
  static Graph build(const std::vector<std::pair<VertexId, VertexId>>& edge_list,
                     const std::vector<VertexId>& isolated = {});

  int vertex_count() const { return static_cast<int>(verts_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<VertexId>& vertices() const { return verts_; }
  /// Edges as (a, b) with a < b, sorted by pair.
  const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

  bool contains(const VertexId& v) const { return index_of(v) >= 0; }
  int index_of(const VertexId& v) const;  // -1 if absent
  const VertexId& id_of(int index) const { return verts_[static_cast<size_t>(index)]; }

  const std::vector<int>& neighbors_of(int index) const {
    return adj_[static_cast<size_t>(index)];
  }
  std::vector<VertexId> neighbors(const VertexId& v) const;
  bool adjacent(const VertexId& a, const VertexId& b) const;
  int degree(const VertexId& v) const;

  bool operator==(const Graph& other) const {
    return verts_ == other.verts_ && edges_ == other.edges_;
  }

private:
  std::vector<VertexId> verts_;                       // sorted
  std::vector<std::pair<VertexId, VertexId>> edges_;  // sorted, first < second
  std::vector<std::vector<int>> adj_;                 // sorted neighbor indices
};

Graph build_graph(const std::vector<std::pair<VertexId, VertexId>>& edge_list,
                  const std::vector<VertexId>& isolated = {});

// Strict mode (collapse_duplicates = false) rejects a repeated edge; the CLI
// exposes this via --collapse. Format dot is export-only.
Graph parse_graph(std::istream& in, GraphFormat format, bool collapse_duplicates = false);
Graph parse_graph(const std::string& text, GraphFormat format, bool collapse_duplicates = false);

std::string serialize_graph(const Graph& g, GraphFormat format);

/// BFS tree over a vertex subset. parent maps every covered non-root vertex
/// to its parent; parent edges exist in the source graph.
struct SpanningTree {
  VertexId root;
  std::map<VertexId, VertexId> parent;
  std::set<VertexId> covered;

  /// v, parent(v), ..., root. v must be covered.
  std::vector<VertexId> path_to_root(const VertexId& v) const;
  /// Unique tree path from a to b (inclusive).
  std::vector<VertexId> tree_path(const VertexId& a, const VertexId& b) const;
};

/// Vertices reachable from target after deleting `removed` (and incident
/// edges). Includes target. Entries of `removed` that are not in g are
/// ignored; a missing or removed target is an error.
std::set<VertexId> component_containing(const Graph& g, const std::set<VertexId>& removed,
                                        const VertexId& target);

/// Breadth-first spanning tree of the subgraph induced by restrict_to,
/// neighbors expanded in VertexId order. Errors if restrict_to is not
/// connected, naming an unreached vertex.
SpanningTree bfs_tree(const Graph& g, const VertexId& root, const std::set<VertexId>& restrict_to);

}  // namespace diamondpaths
