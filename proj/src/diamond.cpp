#include "diamondpaths/diamond.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace diamondpaths {

namespace {

// 4-ary heap layout: root is 0, children of i are 4i+1 .. 4i+4.
std::int64_t child_id(std::int64_t id, int c) { return 4 * id + c; }
std::int64_t parent_id(std::int64_t id) { return (id - 1) / 4; }

int depth_of(std::int64_t id) {
  int d = 0;
  while (id > 0) {
    id = parent_id(id);
    ++d;
  }
  return d;
}

std::vector<int> address_of(std::int64_t id) {
  std::vector<int> addr;
  while (id > 0) {
    addr.push_back(static_cast<int>((id - 1) % 4) + 1);
    id = parent_id(id);
  }
  std::reverse(addr.begin(), addr.end());
  return addr;
}

std::int64_t id_of_address(const std::vector<int>& addr) {
  std::int64_t id = 0;
  for (int c : addr) {
    if (c < 1 || c > 4) {
      throw precondition_error("diamond hierarchy: child indices must be 1..4");
    }
    id = child_id(id, c);
  }
  return id;
}

std::string join_address(const std::vector<int>& addr) {
  std::string out;
  for (size_t i = 0; i < addr.size(); ++i) {
    if (i) out += '.';
    out += static_cast<char>('0' + addr[i]);
  }
  return out;
}

bool is_ancestor_or_self(std::int64_t anc, int anc_depth, std::int64_t node, int node_depth) {
  if (node_depth < anc_depth) return false;
  while (node_depth > anc_depth) {
    node = parent_id(node);
    --node_depth;
  }
  return node == anc;
}

std::int64_t pow4(int p) { return std::int64_t{1} << (2 * p); }

}  // namespace

std::string DiamondNode::address_string() const { return join_address(address); }

DiamondNode DiamondHierarchy::make_node(std::int64_t id) const {
  const Rec& rec = nodes_[static_cast<size_t>(id)];
  DiamondNode node;
  node.address = address_of(id);
  node.order = order_ - depth_of(id);
  node.extremities = {names_[static_cast<size_t>(rec.x)], names_[static_cast<size_t>(rec.y)]};
  if (rec.mp >= 0) {
    node.middles = {names_[static_cast<size_t>(rec.mp)], names_[static_cast<size_t>(rec.mq)]};
  }
  return node;
}

DiamondNode DiamondHierarchy::root() const { return make_node(0); }

DiamondNode DiamondHierarchy::node_at(const std::vector<int>& address) const {
  std::int64_t id = id_of_address(address);
  if (id >= node_count() || static_cast<int>(address.size()) > order_) {
    throw precondition_error("node_at: address " + join_address(address) +
                             " is below the hierarchy depth");
  }
  return make_node(id);
}

std::array<DiamondNode, 4> DiamondHierarchy::children(const DiamondNode& node) const {
  if (node.order == 0) {
    throw precondition_error("children: order-0 nodes have no children");
  }
  std::int64_t id = id_of_address(node.address);
  return {make_node(child_id(id, 1)), make_node(child_id(id, 2)), make_node(child_id(id, 3)),
          make_node(child_id(id, 4))};
}

int DiamondHierarchy::vertex_slot(const VertexId& v) const {
  auto it = name_index_.find(v);
  if (it == name_index_.end()) {
    throw precondition_error("diamond hierarchy: unknown vertex \"" + v + "\"");
  }
  return it->second;
}

bool DiamondHierarchy::contains_id(std::int64_t node_id, const VertexId& v) const {
  return contains_slot(node_id, vertex_slot(v));
}

bool DiamondHierarchy::contains_slot(std::int64_t node_id, int slot) const {
  // A node's vertex set is exactly the set of endpoints of the leaf edges
  // below it, so membership reduces to an ancestor test on incident leaves.
  int node_depth = depth_of(node_id);
  for (std::int64_t leaf : leaves_[static_cast<size_t>(slot)]) {
    if (is_ancestor_or_self(node_id, node_depth, leaf, order_)) return true;
  }
  return false;
}

bool DiamondHierarchy::node_contains(const DiamondNode& node, const VertexId& v) const {
  return contains_id(id_of_address(node.address), v);
}

std::vector<std::string> DiamondHierarchy::nodes_containing(const VertexId& v) const {
  int slot = vertex_slot(v);
  std::set<std::int64_t> ids;
  for (std::int64_t leaf : leaves_[static_cast<size_t>(slot)]) {
    for (std::int64_t cur = leaf;; cur = parent_id(cur)) {
      ids.insert(cur);
      if (cur == 0) break;
    }
  }
  std::vector<std::vector<int>> addresses;
  for (std::int64_t id : ids) addresses.push_back(address_of(id));
  std::sort(addresses.begin(), addresses.end());
  std::vector<std::string> out;
  for (const auto& a : addresses) out.push_back(join_address(a));
  return out;
}

DiamondNode DiamondHierarchy::leaf_for_edge(const VertexId& a, const VertexId& b) const {
  int sa = vertex_slot(a);
  int sb = vertex_slot(b);
  const auto& la = leaves_[static_cast<size_t>(sa)];
  for (std::int64_t leaf : leaves_[static_cast<size_t>(sb)]) {
    if (std::find(la.begin(), la.end(), leaf) != la.end()) return make_node(leaf);
  }
  throw precondition_error("leaf_for_edge: " + a + " " + b + " is not an edge");
}

struct DiamondGenerator {
  static DiamondGraph run(int p) {
    DiamondHierarchy h;
    h.order_ = p;
    h.names_ = {"s", "t"};
    std::int64_t total = (pow4(p + 1) - 1) / 3;
    h.nodes_.resize(static_cast<size_t>(total), {-1, -1, -1, -1});
    h.nodes_[0].x = 0;
    h.nodes_[0].y = 1;

    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::int64_t id = 0; id < total; ++id) {
      auto& rec = h.nodes_[static_cast<size_t>(id)];
      int order = p - depth_of(id);
      if (order == 0) {
        edges.emplace_back(h.names_[static_cast<size_t>(rec.x)],
                           h.names_[static_cast<size_t>(rec.y)]);
        continue;
      }
      std::string addr = join_address(address_of(id));
      rec.mp = static_cast<int>(h.names_.size());
      h.names_.push_back(addr + "/p");
      rec.mq = static_cast<int>(h.names_.size());
      h.names_.push_back(addr + "/q");
      // Cyclic child layout: (x,p), (p,y), (y,q), (q,x); children 1 and 3
      // share no vertex.
      h.nodes_[static_cast<size_t>(child_id(id, 1))] = {rec.x, rec.mp, -1, -1};
      h.nodes_[static_cast<size_t>(child_id(id, 2))] = {rec.mp, rec.y, -1, -1};
      h.nodes_[static_cast<size_t>(child_id(id, 3))] = {rec.y, rec.mq, -1, -1};
      h.nodes_[static_cast<size_t>(child_id(id, 4))] = {rec.mq, rec.x, -1, -1};
    }

    for (size_t i = 0; i < h.names_.size(); ++i) {
      h.name_index_[h.names_[i]] = static_cast<int>(i);
    }
    h.leaves_.resize(h.names_.size());
    std::int64_t first_leaf = total - pow4(p);
    for (std::int64_t leaf = first_leaf; leaf < total; ++leaf) {
      const auto& rec = h.nodes_[static_cast<size_t>(leaf)];
      h.leaves_[static_cast<size_t>(rec.x)].push_back(leaf);
      h.leaves_[static_cast<size_t>(rec.y)].push_back(leaf);
    }

    DiamondGraph out;
    out.graph = Graph::build(edges);
    out.hierarchy = std::move(h);
    return out;
  }
};

DiamondGraph generate_diamond(int p) {
  if (p < 0) {
    throw precondition_error("generate_diamond: order must be non-negative");
  }
  if (p > 10) {
    throw precondition_error("generate_diamond: order " + std::to_string(p) +
                             " exceeds the size guard (10)");
  }
  return DiamondGenerator::run(p);
}

namespace {

// Descends while exactly one child contains both vertices. Two children
// share at most one vertex, so at most one child can contain both.
template <typename ContainsSlot>
std::int64_t enclosing_id(int order, int slot_u, int slot_v, ContainsSlot&& contains_slot) {
  std::int64_t cur = 0;
  while (order > 0) {
    std::int64_t next = -1;
    for (int c = 1; c <= 4; ++c) {
      std::int64_t kid = child_id(cur, c);
      if (contains_slot(kid, slot_u) && contains_slot(kid, slot_v)) {
        next = kid;
        break;
      }
    }
    if (next < 0) break;
    cur = next;
    --order;
  }
  return cur;
}

}  // namespace

DiamondNode smallest_enclosing(const DiamondHierarchy& h, const VertexId& u, const VertexId& v) {
  if (u == v) {
    throw precondition_error("smallest_enclosing: vertices must differ");
  }
  int su = h.vertex_slot(u);
  int sv = h.vertex_slot(v);
  std::int64_t id = enclosing_id(h.order_, su, sv, [&](std::int64_t node, int slot) {
    return h.contains_slot(node, slot);
  });
  return h.make_node(id);
}

UpperBoundCertificate structural_upper_bound(const DiamondHierarchy& h, const Graph& g,
                                             const VertexId& u, const VertexId& v) {
  if (u == v) {
    throw precondition_error("structural_upper_bound: vertices must differ");
  }
  if (!g.contains(u) || !g.contains(v)) {
    throw precondition_error("structural_upper_bound: unknown vertex");
  }
  int slot_u = h.vertex_slot(u);
  int slot_v = h.vertex_slot(v);
  auto contains = [&](std::int64_t node, int slot) { return h.contains_slot(node, slot); };

  std::int64_t q_id = enclosing_id(h.order_, slot_u, slot_v, contains);
  int q_order = h.order_ - depth_of(q_id);

  // Adjacent pair: the edge is an order-0 node and one endpoint was created
  // by the last expansion step, so it has degree 2 (degree 1 on the order-0
  // graph itself).
  if (q_order == 0) {
    UpperBoundCertificate cert;
    cert.variant = CertVariant::degree_bound;
    int du = g.degree(u);
    int dv = g.degree(v);
    if (du < dv || (du == dv && u < v)) {
      cert.witness_vertex = u;
      cert.bound = du;
    } else {
      cert.witness_vertex = v;
      cert.bound = dv;
    }
    return cert;
  }

  const auto& recs = h.nodes_;
  auto make_cut = [&](const std::set<int>& slots) {
    UpperBoundCertificate cert;
    cert.variant = CertVariant::vertex_cut;
    for (int s : slots) cert.cut.push_back(h.names_[static_cast<size_t>(s)]);
    std::sort(cert.cut.begin(), cert.cut.end());
    cert.bound = static_cast<int>(cert.cut.size());
    return cert;
  };
  auto other_extremity_slot = [&](std::int64_t node, int slot_w) {
    const auto& rec = recs[static_cast<size_t>(node)];
    return rec.x == slot_w ? rec.y : rec.x;
  };

  const std::pair<int, int> roles[2] = {{slot_u, slot_v}, {slot_v, slot_u}};

  // Case: an endpoint strictly inside one child. Its whole neighborhood
  // lies in that child, so the child's extremities cut it off from the
  // rest of the graph.
  for (const auto& [w, z] : roles) {
    std::vector<std::int64_t> in;
    for (int c = 1; c <= 4; ++c) {
      if (contains(child_id(q_id, c), w)) in.push_back(child_id(q_id, c));
    }
    if (in.size() == 1) {
      const auto& rec = recs[static_cast<size_t>(in[0])];
      UpperBoundCertificate cert = make_cut({rec.x, rec.y});
      if (verify_cut(g, u, v, cert).ok()) return cert;
    }
  }

  // Both endpoints are corners of q (each shared by two adjacent children):
  // the diagonal pairs {x,y} or {p,q}. The far extremities of the two
  // children around w cut w off inside q; when w is an extremity of q and q
  // is proper, paths may also run outside q, and one extremity of an
  // outside sub-diamond of the same order sharing w closes that route.
  for (const auto& [w, z] : roles) {
    std::vector<std::int64_t> in;
    for (int c = 1; c <= 4; ++c) {
      if (contains(child_id(q_id, c), w)) in.push_back(child_id(q_id, c));
    }
    if (in.size() != 2) continue;
    std::set<int> base;
    for (std::int64_t kid : in) {
      base.insert(other_extremity_slot(kid, w));
    }
    {
      UpperBoundCertificate cert = make_cut(base);
      if (verify_cut(g, u, v, cert).ok()) return cert;
    }
    const auto& q_rec = recs[static_cast<size_t>(q_id)];
    bool w_is_extremity = (q_rec.x == w || q_rec.y == w);
    if (w_is_extremity && q_order < h.order_) {
      // Nodes of order q_order, other than q, with w as an extremity, in
      // address order. Only containment chains of w can qualify.
      std::vector<std::int64_t> outside;
      auto collect = [&](auto&& self, std::int64_t node, int order) -> void {
        if (order < q_order || !contains(node, w)) return;
        const auto& rec = recs[static_cast<size_t>(node)];
        if (order == q_order) {
          if ((rec.x == w || rec.y == w) && node != q_id) outside.push_back(node);
          return;
        }
        for (int c = 1; c <= 4; ++c) self(self, child_id(node, c), order - 1);
      };
      collect(collect, 0, h.order_);
      for (std::int64_t j : outside) {
        std::set<int> cut = base;
        cut.insert(other_extremity_slot(j, w));
        UpperBoundCertificate cert = make_cut(cut);
        if (cert.bound <= 3 && verify_cut(g, u, v, cert).ok()) return cert;
      }
      // Remaining escape hatch: anything leaving q passes its other
      // extremity.
      std::set<int> cut = base;
      cut.insert(other_extremity_slot(q_id, w));
      UpperBoundCertificate cert = make_cut(cut);
      if (cert.bound <= 3 && verify_cut(g, u, v, cert).ok()) return cert;
    }
  }

  UpperBoundCertificate cert = max_independent_paths(g, u, v).certificate;
  cert.fallback = true;
  return cert;
}

DiamondCounts diamond_counts(int p) {
  if (p < 0) {
    throw precondition_error("diamond_counts: order must be non-negative");
  }
  if (p > 30) {
    throw precondition_error("diamond_counts: order " + std::to_string(p) +
                             " overflows 64-bit counts");
  }
  DiamondCounts c;
  c.edges = pow4(p);
  c.vertices = (2 * c.edges + 4) / 3;
  c.edge_disjoint_st_paths = std::int64_t{1} << p;
  return c;
}

}  // namespace diamondpaths
