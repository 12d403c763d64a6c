#include "diamondpaths/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace diamondpaths {

std::vector<VertexId> Path::interior() const {
  if (vertices.size() <= 2) return {};
  return std::vector<VertexId>(vertices.begin() + 1, vertices.end() - 1);
}

namespace {

void require_pair(const Graph& g, const VertexId& a, const VertexId& b, const char* op) {
  if (a == b) {
    throw precondition_error(std::string(op) + ": endpoints must differ, got \"" + a + "\" twice");
  }
  if (!g.contains(a)) {
    throw precondition_error(std::string(op) + ": unknown vertex \"" + a + "\"");
  }
  if (!g.contains(b)) {
    throw precondition_error(std::string(op) + ": unknown vertex \"" + b + "\"");
  }
}

// Small deterministic max-flow network. Arcs come in pairs (id, id^1); the
// flow invariant is arcs[id].flow == -arcs[id^1].flow. Adjacency lists are
// sorted by target node so BFS and path decomposition are reproducible.
struct FlowNet {
  struct Arc {
    int to;
    int cap;
    int flow;
  };

  int n;
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> adj;

  explicit FlowNet(int nodes) : n(nodes), adj(static_cast<size_t>(nodes)) {}

  void add_pair(int a, int b, int cap_ab, int cap_ba) {
    int id = static_cast<int>(arcs.size());
    arcs.push_back({b, cap_ab, 0});
    arcs.push_back({a, cap_ba, 0});
    adj[static_cast<size_t>(a)].push_back(id);
    adj[static_cast<size_t>(b)].push_back(id + 1);
  }

  void sort_adjacency() {
    for (auto& list : adj) {
      std::sort(list.begin(), list.end(), [&](int x, int y) {
        if (arcs[static_cast<size_t>(x)].to != arcs[static_cast<size_t>(y)].to) {
          return arcs[static_cast<size_t>(x)].to < arcs[static_cast<size_t>(y)].to;
        }
        return x < y;
      });
    }
  }

  int residual(int id) const {
    return arcs[static_cast<size_t>(id)].cap - arcs[static_cast<size_t>(id)].flow;
  }

  void push(int id, int amount) {
    arcs[static_cast<size_t>(id)].flow += amount;
    arcs[static_cast<size_t>(id ^ 1)].flow -= amount;
  }

  // Edmonds-Karp with neighbors scanned in sorted order.
  int max_flow(int s, int t) {
    int total = 0;
    std::vector<int> via(static_cast<size_t>(n));
    for (;;) {
      std::fill(via.begin(), via.end(), -1);
      via[static_cast<size_t>(s)] = -2;
      std::deque<int> queue{s};
      while (!queue.empty() && via[static_cast<size_t>(t)] == -1) {
        int cur = queue.front();
        queue.pop_front();
        for (int id : adj[static_cast<size_t>(cur)]) {
          int to = arcs[static_cast<size_t>(id)].to;
          if (via[static_cast<size_t>(to)] == -1 && residual(id) > 0) {
            via[static_cast<size_t>(to)] = id;
            queue.push_back(to);
          }
        }
      }
      if (via[static_cast<size_t>(t)] == -1) break;
      int bottleneck = residual(via[static_cast<size_t>(t)]);
      for (int cur = t; cur != s;) {
        int id = via[static_cast<size_t>(cur)];
        bottleneck = std::min(bottleneck, residual(id));
        cur = arcs[static_cast<size_t>(id ^ 1)].to;
      }
      for (int cur = t; cur != s;) {
        int id = via[static_cast<size_t>(cur)];
        push(id, bottleneck);
        cur = arcs[static_cast<size_t>(id ^ 1)].to;
      }
      total += bottleneck;
    }
    return total;
  }

  std::vector<char> residual_reachable(int s) const {
    std::vector<char> seen(static_cast<size_t>(n), 0);
    seen[static_cast<size_t>(s)] = 1;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int cur = queue.front();
      queue.pop_front();
      for (int id : adj[static_cast<size_t>(cur)]) {
        int to = arcs[static_cast<size_t>(id)].to;
        if (!seen[static_cast<size_t>(to)] && residual(id) > 0) {
          seen[static_cast<size_t>(to)] = 1;
          queue.push_back(to);
        }
      }
    }
    return seen;
  }

  // Repeatedly walks from s choosing the least out-arc with positive flow,
  // erasing flow as it goes. Any cycle the walk closes is excised from the
  // walk (removing one unit of flow around a closed walk keeps the flow
  // valid), so each returned walk is a simple s-t node sequence.
  std::vector<std::vector<int>> decompose(int s, int t, int count) {
    std::vector<std::vector<int>> walks;
    std::vector<int> pos(static_cast<size_t>(n));
    for (int k = 0; k < count; ++k) {
      std::fill(pos.begin(), pos.end(), -1);
      std::vector<int> walk{s};
      pos[static_cast<size_t>(s)] = 0;
      int cur = s;
      while (cur != t) {
        int chosen = -1;
        for (int id : adj[static_cast<size_t>(cur)]) {
          if (arcs[static_cast<size_t>(id)].flow > 0) {
            chosen = id;
            break;
          }
        }
        if (chosen < 0) {
          throw std::logic_error("flow decomposition: conservation violated");
        }
        push(chosen, -1);
        int next = arcs[static_cast<size_t>(chosen)].to;
        if (pos[static_cast<size_t>(next)] >= 0) {
          for (size_t i = static_cast<size_t>(pos[static_cast<size_t>(next)]) + 1;
               i < walk.size(); ++i) {
            pos[static_cast<size_t>(walk[i])] = -1;
          }
          walk.resize(static_cast<size_t>(pos[static_cast<size_t>(next)]) + 1);
        } else {
          pos[static_cast<size_t>(next)] = static_cast<int>(walk.size());
          walk.push_back(next);
        }
        cur = next;
      }
      walks.push_back(std::move(walk));
    }
    return walks;
  }
};

FlowNet edge_network(const Graph& g) {
  FlowNet net(g.vertex_count());
  // One arc pair per undirected edge with capacity 1 both ways; an integral
  // flow then uses each edge in at most one direction.
  for (const auto& [a, b] : g.edges()) {
    net.add_pair(g.index_of(a), g.index_of(b), 1, 1);
  }
  net.sort_adjacency();
  return net;
}

// Vertex-splitting network for independent paths. skip_uv drops the direct
// edge u-v (used for adjacent queries, where that edge is extracted as its
// own path first). Edge arcs get capacity 2: their flow never exceeds 1
// because the unit split arcs bound it, so the flow value is unchanged, but
// a minimum cut can then only cross split arcs, which makes the cut read
// directly as a vertex set.
struct SplitNet {
  FlowNet net;
  int source;
  int sink;
  std::vector<int> in_node;   // graph index -> in node (or single node)
  std::vector<int> out_node;  // graph index -> out node (or single node)
};

SplitNet split_network(const Graph& g, const VertexId& u, const VertexId& v, bool skip_uv,
                       int edge_cap) {
  int iu = g.index_of(u);
  int iv = g.index_of(v);
  int n = g.vertex_count();
  SplitNet s{FlowNet(2 * (n - 2) + 2), -1, -1, std::vector<int>(static_cast<size_t>(n)),
             std::vector<int>(static_cast<size_t>(n))};
  int next = 0;
  for (int i = 0; i < n; ++i) {
    if (i == iu || i == iv) {
      s.in_node[static_cast<size_t>(i)] = next;
      s.out_node[static_cast<size_t>(i)] = next;
      ++next;
    } else {
      s.in_node[static_cast<size_t>(i)] = next;
      s.out_node[static_cast<size_t>(i)] = next + 1;
      next += 2;
    }
  }
  s.source = s.in_node[static_cast<size_t>(iu)];
  s.sink = s.in_node[static_cast<size_t>(iv)];
  for (int i = 0; i < n; ++i) {
    if (i != iu && i != iv) {
      s.net.add_pair(s.in_node[static_cast<size_t>(i)], s.out_node[static_cast<size_t>(i)], 1, 0);
    }
  }
  for (const auto& [a, b] : g.edges()) {
    int ia = g.index_of(a);
    int ib = g.index_of(b);
    if (skip_uv && ((ia == iu && ib == iv) || (ia == iv && ib == iu))) continue;
    s.net.add_pair(s.out_node[static_cast<size_t>(ia)], s.in_node[static_cast<size_t>(ib)],
                   edge_cap, 0);
    s.net.add_pair(s.out_node[static_cast<size_t>(ib)], s.in_node[static_cast<size_t>(ia)],
                   edge_cap, 0);
  }
  s.net.sort_adjacency();
  return s;
}

}  // namespace

PathSystem max_edge_disjoint_paths(const Graph& g, const VertexId& s, const VertexId& t) {
  require_pair(g, s, t, "max_edge_disjoint_paths");
  FlowNet net = edge_network(g);
  int is = g.index_of(s);
  int it = g.index_of(t);
  int value = net.max_flow(is, it);

  PathSystem ps;
  ps.source = s;
  ps.sink = t;
  ps.kind = PathKind::edge_disjoint;
  for (const auto& walk : net.decompose(is, it, value)) {
    Path p;
    for (int node : walk) p.vertices.push_back(g.id_of(node));
    ps.paths.push_back(std::move(p));
  }
  return ps;
}

IndependentResult max_independent_paths(const Graph& g, const VertexId& u, const VertexId& v) {
  require_pair(g, u, v, "max_independent_paths");
  bool adj = g.adjacent(u, v);
  SplitNet sn = split_network(g, u, v, /*skip_uv=*/adj, /*edge_cap=*/2);
  int value = sn.net.max_flow(sn.source, sn.sink);

  IndependentResult result;

  // The cut has to be read off before decomposition erases the flow.
  UpperBoundCertificate& cert = result.certificate;
  if (adj) {
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
  } else {
    cert.variant = CertVariant::vertex_cut;
    std::vector<char> reach = sn.net.residual_reachable(sn.source);
    for (int i = 0; i < g.vertex_count(); ++i) {
      int in = sn.in_node[static_cast<size_t>(i)];
      int out = sn.out_node[static_cast<size_t>(i)];
      if (in == out) continue;
      if (reach[static_cast<size_t>(in)] && !reach[static_cast<size_t>(out)]) {
        cert.cut.push_back(g.id_of(i));
      }
    }
    cert.bound = static_cast<int>(cert.cut.size());
  }

  result.system.source = u;
  result.system.sink = v;
  result.system.kind = PathKind::independent;
  if (adj) {
    result.system.paths.push_back(Path{{u, v}});
  }
  // Map node walks back to vertex sequences: keep only in-halves (and the
  // endpoints, which are single nodes).
  std::vector<int> node_vertex(static_cast<size_t>(sn.net.n), -1);
  for (int i = 0; i < g.vertex_count(); ++i) {
    node_vertex[static_cast<size_t>(sn.in_node[static_cast<size_t>(i)])] = i;
  }
  for (const auto& walk : sn.net.decompose(sn.source, sn.sink, value)) {
    Path p;
    for (int node : walk) {
      int vert = node_vertex[static_cast<size_t>(node)];
      if (vert >= 0) p.vertices.push_back(g.id_of(vert));
    }
    result.system.paths.push_back(std::move(p));
  }
  return result;
}

SplitNetwork split_vertices(const Graph& g, const VertexId& u, const VertexId& v) {
  require_pair(g, u, v, "split_vertices");
  int iu = g.index_of(u);
  int iv = g.index_of(v);
  SplitNetwork out;
  std::vector<int> in_node(static_cast<size_t>(g.vertex_count()));
  std::vector<int> out_node(static_cast<size_t>(g.vertex_count()));
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (i == iu || i == iv) {
      in_node[static_cast<size_t>(i)] = out.node_count();
      out_node[static_cast<size_t>(i)] = out.node_count();
      out.node_names.push_back(g.id_of(i));
    } else {
      in_node[static_cast<size_t>(i)] = out.node_count();
      out_node[static_cast<size_t>(i)] = out.node_count() + 1;
      out.node_names.push_back(g.id_of(i) + ":in");
      out.node_names.push_back(g.id_of(i) + ":out");
    }
  }
  out.source = in_node[static_cast<size_t>(iu)];
  out.sink = in_node[static_cast<size_t>(iv)];
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (i != iu && i != iv) {
      out.arcs.push_back({in_node[static_cast<size_t>(i)], out_node[static_cast<size_t>(i)]});
    }
  }
  for (const auto& [a, b] : g.edges()) {
    int ia = g.index_of(a);
    int ib = g.index_of(b);
    out.arcs.push_back({out_node[static_cast<size_t>(ia)], in_node[static_cast<size_t>(ib)]});
    out.arcs.push_back({out_node[static_cast<size_t>(ib)], in_node[static_cast<size_t>(ia)]});
  }
  return out;
}

int split_network_max_flow(const SplitNetwork& net) {
  FlowNet fn(net.node_count());
  for (const auto& arc : net.arcs) {
    fn.add_pair(arc.from, arc.to, 1, 0);
  }
  fn.sort_adjacency();
  return fn.max_flow(net.source, net.sink);
}

Verdict check_path_system(const Graph& g, const PathSystem& ps) {
  Verdict verdict;
  auto fail = [&](const std::string& msg) { verdict.failures.push_back(msg); };

  for (size_t i = 0; i < ps.paths.size(); ++i) {
    const auto& verts = ps.paths[i].vertices;
    std::string tag = "path " + std::to_string(i);
    if (verts.size() < 2) {
      fail(tag + ": fewer than 2 vertices");
      continue;
    }
    if (verts.front() != ps.source) {
      fail(tag + ": starts at \"" + verts.front() + "\", expected source \"" + ps.source + "\"");
    }
    if (verts.back() != ps.sink) {
      fail(tag + ": ends at \"" + verts.back() + "\", expected sink \"" + ps.sink + "\"");
    }
    std::set<VertexId> seen;
    for (const auto& v : verts) {
      if (!g.contains(v)) fail(tag + ": vertex \"" + v + "\" not in graph");
      if (!seen.insert(v).second) fail(tag + ": repeated vertex \"" + v + "\"");
    }
    for (size_t j = 0; j + 1 < verts.size(); ++j) {
      if (!g.adjacent(verts[j], verts[j + 1])) {
        fail(tag + ": \"" + verts[j] + "\" and \"" + verts[j + 1] + "\" not adjacent");
      }
    }
  }

  // Pairwise disjointness. Independent systems are checked for interior
  // sharing and, since independence implies it, edge-disjointness too.
  for (size_t i = 0; i < ps.paths.size(); ++i) {
    for (size_t j = i + 1; j < ps.paths.size(); ++j) {
      const auto& pi = ps.paths[i].vertices;
      const auto& pj = ps.paths[j].vertices;
      std::set<std::pair<VertexId, VertexId>> edges_i;
      for (size_t k = 0; k + 1 < pi.size(); ++k) {
        edges_i.insert(pi[k] < pi[k + 1] ? std::make_pair(pi[k], pi[k + 1])
                                         : std::make_pair(pi[k + 1], pi[k]));
      }
      for (size_t k = 0; k + 1 < pj.size(); ++k) {
        auto e = pj[k] < pj[k + 1] ? std::make_pair(pj[k], pj[k + 1])
                                   : std::make_pair(pj[k + 1], pj[k]);
        if (edges_i.count(e)) {
          fail("paths " + std::to_string(i) + "," + std::to_string(j) + ": shared edge " +
               e.first + " " + e.second);
        }
      }
      if (ps.kind == PathKind::independent) {
        std::set<VertexId> interior_i(pi.begin() + 1, pi.end() - 1);
        std::set<VertexId> interior_j(pj.begin() + 1, pj.end() - 1);
        for (const auto& v : pj) {
          if (interior_i.count(v)) {
            fail("paths " + std::to_string(j) + "," + std::to_string(i) +
                 ": interior vertex \"" + v + "\" of one contained in the other");
            break;
          }
        }
        for (const auto& v : pi) {
          if (interior_j.count(v)) {
            fail("paths " + std::to_string(i) + "," + std::to_string(j) +
                 ": interior vertex \"" + v + "\" of one contained in the other");
            break;
          }
        }
      }
    }
  }
  return verdict;
}

Verdict verify_cut(const Graph& g, const VertexId& u, const VertexId& v,
                   const UpperBoundCertificate& cert) {
  Verdict verdict;
  auto fail = [&](const std::string& msg) { verdict.failures.push_back(msg); };
  if (u == v) {
    fail("endpoints equal");
    return verdict;
  }
  if (!g.contains(u) || !g.contains(v)) {
    fail("endpoint not in graph");
    return verdict;
  }
  if (cert.variant == CertVariant::vertex_cut) {
    std::set<VertexId> cut(cert.cut.begin(), cert.cut.end());
    if (cut.size() != cert.cut.size()) fail("cut has repeated vertices");
    if (cut.count(u)) fail("cut contains endpoint \"" + u + "\"");
    if (cut.count(v)) fail("cut contains endpoint \"" + v + "\"");
    for (const auto& c : cut) {
      if (!g.contains(c)) fail("cut vertex \"" + c + "\" not in graph");
    }
    if (cert.bound != static_cast<int>(cut.size())) {
      fail("bound " + std::to_string(cert.bound) + " does not equal cut size " +
           std::to_string(cut.size()));
    }
    if (verdict.ok()) {
      // Index-based reachability check (component_containing without the
      // string sets; this runs once per pair in the all-pairs scans).
      std::vector<char> blocked(static_cast<size_t>(g.vertex_count()), 0);
      for (const auto& c : cut) blocked[static_cast<size_t>(g.index_of(c))] = 1;
      std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
      std::vector<int> queue{g.index_of(u)};
      seen[static_cast<size_t>(g.index_of(u))] = 1;
      int goal = g.index_of(v);
      bool reached = false;
      for (size_t head = 0; head < queue.size() && !reached; ++head) {
        for (int n : g.neighbors_of(queue[head])) {
          if (seen[static_cast<size_t>(n)] || blocked[static_cast<size_t>(n)]) continue;
          if (n == goal) {
            reached = true;
            break;
          }
          seen[static_cast<size_t>(n)] = 1;
          queue.push_back(n);
        }
      }
      if (reached) {
        fail("removing the cut leaves \"" + u + "\" connected to \"" + v + "\"");
      }
    }
  } else {
    if (cert.witness_vertex != u && cert.witness_vertex != v) {
      fail("witness \"" + cert.witness_vertex + "\" is neither endpoint");
    }
    if (!g.adjacent(u, v)) {
      fail("degree bound requires adjacent endpoints");
    }
    if (verdict.ok() && cert.bound != g.degree(cert.witness_vertex)) {
      fail("bound " + std::to_string(cert.bound) + " does not equal degree " +
           std::to_string(g.degree(cert.witness_vertex)));
    }
  }
  return verdict;
}

int oracle_max_independent(const Graph& g, const VertexId& u, const VertexId& v) {
  require_pair(g, u, v, "oracle_max_independent");
  if (g.vertex_count() > 12) {
    throw precondition_error("oracle_max_independent: graph too large (" +
                             std::to_string(g.vertex_count()) + " vertices, limit 12)");
  }
  int iu = g.index_of(u);
  int iv = g.index_of(v);

  // Interior vertices get bit positions.
  std::vector<int> bit_of(static_cast<size_t>(g.vertex_count()), -1);
  int bits = 0;
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (i != iu && i != iv) bit_of[static_cast<size_t>(i)] = bits++;
  }

  // Enumerate all simple u-v paths, recording interior vertex sets.
  bool direct_edge = false;
  std::set<unsigned> interior_masks;
  std::vector<char> on_stack(static_cast<size_t>(g.vertex_count()), 0);
  on_stack[static_cast<size_t>(iu)] = 1;
  unsigned mask = 0;

  struct Frame {
    int vertex;
    size_t next_neighbor;
  };
  std::vector<Frame> frames{{iu, 0}};
  while (!frames.empty()) {
    Frame& f = frames.back();
    const auto& nbrs = g.neighbors_of(f.vertex);
    if (f.next_neighbor >= nbrs.size()) {
      if (f.vertex != iu) {
        mask &= ~(1u << bit_of[static_cast<size_t>(f.vertex)]);
      }
      on_stack[static_cast<size_t>(f.vertex)] = 0;
      frames.pop_back();
      continue;
    }
    int nxt = nbrs[f.next_neighbor++];
    if (nxt == iv) {
      if (f.vertex == iu) {
        direct_edge = true;
      } else {
        interior_masks.insert(mask);
      }
      continue;
    }
    if (on_stack[static_cast<size_t>(nxt)]) continue;
    on_stack[static_cast<size_t>(nxt)] = 1;
    mask |= 1u << bit_of[static_cast<size_t>(nxt)];
    frames.push_back({nxt, 0});
  }

  // Exact set packing over interior masks: best(S) = max number of pairwise
  // disjoint masks that fit inside S.
  std::vector<unsigned> masks(interior_masks.begin(), interior_masks.end());
  std::vector<int> memo(1u << bits, -1);
  auto best = [&](auto&& self, unsigned avail) -> int {
    int& slot = memo[avail];
    if (slot >= 0) return slot;
    int result = 0;
    for (unsigned m : masks) {
      if ((m & ~avail) == 0) {
        result = std::max(result, 1 + self(self, avail & ~m));
      }
    }
    slot = result;
    return result;
  };
  int packed = best(best, (1u << bits) - 1);
  return packed + (direct_edge ? 1 : 0);
}

}  // namespace diamondpaths
