#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diamondpaths/connectivity.hpp"
#include "diamondpaths/graph.hpp"

namespace diamondpaths {

/// One node of the recursive 4-ary decomposition of a diamond graph. A node
/// of order r > 0 spans extremities (x, y) with middle vertices (p, q) and
/// has four children laid out cyclically: (x,p), (p,y), (y,q), (q,x).
/// Order-0 nodes are the graph's edges.
struct DiamondNode {
  std::vector<int> address;  // child indices in 1..4 from the root
  int order = 0;
  std::pair<VertexId, VertexId> extremities;
  std::optional<std::pair<VertexId, VertexId>> middles;  // set iff order > 0

  std::string address_string() const;  // '.'-joined; root is ""
};

/// Full decomposition tree of a generated diamond graph. Nodes live in a
/// flat 4-ary heap layout; vertex membership queries go through the
/// incidence index (vertex -> leaf nodes), since a node contains exactly
/// the vertices incident to the edges below it.
class DiamondHierarchy {
public:
  int order() const { return order_; }
  std::int64_t node_count() const { return static_cast<std::int64_t>(nodes_.size()); }

  DiamondNode root() const;
  DiamondNode node_at(const std::vector<int>& address) const;
  std::array<DiamondNode, 4> children(const DiamondNode& node) const;

  bool node_contains(const DiamondNode& node, const VertexId& v) const;

  /// Addresses of every node whose vertex set contains v, sorted.
  std::vector<std::string> nodes_containing(const VertexId& v) const;

  /// The unique order-0 node spanning the edge {a, b}.
  DiamondNode leaf_for_edge(const VertexId& a, const VertexId& b) const;

private:
  friend struct DiamondGenerator;
  friend DiamondNode smallest_enclosing(const DiamondHierarchy& h, const VertexId& u,
                                        const VertexId& v);
  friend UpperBoundCertificate structural_upper_bound(const DiamondHierarchy& h, const Graph& g,
                                                      const VertexId& u, const VertexId& v);

  DiamondNode make_node(std::int64_t id) const;
  bool contains_id(std::int64_t node_id, const VertexId& v) const;
  bool contains_slot(std::int64_t node_id, int slot) const;
  int vertex_slot(const VertexId& v) const;  // error if unknown

  int order_ = 0;
  std::vector<VertexId> names_;          // creation order: s, t, then middles
  std::map<VertexId, int> name_index_;
  struct Rec {
    int x, y;    // extremity name slots
    int mp, mq;  // middle name slots, -1 for leaves
  };
  std::vector<Rec> nodes_;                           // 4-ary heap layout
  std::vector<std::vector<std::int64_t>> leaves_;    // name slot -> leaf ids
};

struct DiamondGraph {
  Graph graph;
  DiamondHierarchy hierarchy;
};

/// Builds the recursive diamond graph of order p with its hierarchy. Root
/// extremities are named "s" and "t"; expanding the node at address A
/// creates middle vertices A + "/p" and A + "/q". Guarded at p <= 10.
DiamondGraph generate_diamond(int p);

/// Descends from the root while exactly one child contains both u and v;
/// returns the node where the descent stops.
DiamondNode smallest_enclosing(const DiamondHierarchy& h, const VertexId& u, const VertexId& v);

/// Cut certificate of size at most 3 for any vertex pair, derived from the
/// hierarchy: a degree bound when u and v are adjacent, otherwise the
/// extremities of the child sub-diamonds around the smallest enclosing
/// diamond, extended by one outside extremity when the corner vertex also
/// borders sub-diamonds outside it. Every candidate is validated with
/// verify_cut before being returned; if no structural candidate validates,
/// the flow-derived minimum cut is returned with fallback = true.
UpperBoundCertificate structural_upper_bound(const DiamondHierarchy& h, const Graph& g,
                                             const VertexId& u, const VertexId& v);

struct DiamondCounts {
  std::int64_t vertices = 0;
  std::int64_t edges = 0;
  std::int64_t edge_disjoint_st_paths = 0;
};

/// Closed forms ((2*4^p + 4)/3, 4^p, 2^p) without building the graph.
DiamondCounts diamond_counts(int p);

}  // namespace diamondpaths
