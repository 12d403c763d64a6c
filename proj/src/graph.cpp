#include "diamondpaths/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

#include <json.hpp>

namespace diamondpaths {

bool valid_vertex_id(const VertexId& id) {
  if (id.empty()) return false;
  for (unsigned char c : id) {
    if (std::isspace(c) || c == '#') return false;
  }
  return true;
}

namespace {

void require_valid_id(const VertexId& id, const char* where) {
  if (!valid_vertex_id(id)) {
    throw parse_error(std::string(where) + ": invalid vertex id \"" + id + "\"");
  }
}

std::pair<VertexId, VertexId> ordered(const VertexId& a, const VertexId& b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace

Graph Graph::build(const std::vector<std::pair<VertexId, VertexId>>& edge_list,
                   const std::vector<VertexId>& isolated) {
  std::set<VertexId> verts;
  std::set<std::pair<VertexId, VertexId>> edges;
  for (const auto& [a, b] : edge_list) {
    require_valid_id(a, "build_graph");
    require_valid_id(b, "build_graph");
    if (a == b) {
      throw parse_error("build_graph: self-loop " + a + " " + b);
    }
    verts.insert(a);
    verts.insert(b);
    edges.insert(ordered(a, b));
  }
  for (const auto& v : isolated) {
    require_valid_id(v, "build_graph");
    verts.insert(v);
  }

  Graph g;
  g.verts_.assign(verts.begin(), verts.end());
  g.edges_.assign(edges.begin(), edges.end());
  g.adj_.resize(g.verts_.size());
  for (const auto& [a, b] : g.edges_) {
    int ia = g.index_of(a);
    int ib = g.index_of(b);
    g.adj_[static_cast<size_t>(ia)].push_back(ib);
    g.adj_[static_cast<size_t>(ib)].push_back(ia);
  }
  for (auto& list : g.adj_) {
    std::sort(list.begin(), list.end());
  }
  return g;
}

int Graph::index_of(const VertexId& v) const {
  auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
  if (it == verts_.end() || *it != v) return -1;
  return static_cast<int>(it - verts_.begin());
}

std::vector<VertexId> Graph::neighbors(const VertexId& v) const {
  int idx = index_of(v);
  if (idx < 0) {
    throw precondition_error("neighbors: unknown vertex \"" + v + "\"");
  }
  std::vector<VertexId> out;
  out.reserve(adj_[static_cast<size_t>(idx)].size());
  for (int n : adj_[static_cast<size_t>(idx)]) out.push_back(verts_[static_cast<size_t>(n)]);
  return out;
}

bool Graph::adjacent(const VertexId& a, const VertexId& b) const {
  int ia = index_of(a);
  int ib = index_of(b);
  if (ia < 0 || ib < 0) return false;
  const auto& list = adj_[static_cast<size_t>(ia)];
  return std::binary_search(list.begin(), list.end(), ib);
}

int Graph::degree(const VertexId& v) const {
  int idx = index_of(v);
  if (idx < 0) {
    throw precondition_error("degree: unknown vertex \"" + v + "\"");
  }
  return static_cast<int>(adj_[static_cast<size_t>(idx)].size());
}

Graph build_graph(const std::vector<std::pair<VertexId, VertexId>>& edge_list,
                  const std::vector<VertexId>& isolated) {
  return Graph::build(edge_list, isolated);
}

namespace {

Graph parse_edge_list(std::istream& in, bool collapse) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<VertexId> isolated;
  std::set<std::pair<VertexId, VertexId>> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string a, b, extra;
    ls >> a;
    if (a.empty()) continue;  // whitespace-only line
    if (a[0] == '#') continue;
    if (!(ls >> b)) {
      require_valid_id(a, "parse_graph");
      isolated.push_back(a);
      continue;
    }
    if (ls >> extra) {
      throw parse_error("parse_graph: line " + std::to_string(line_no) +
                        ": expected \"<id> <id>\", got extra token \"" + extra + "\"");
    }
    require_valid_id(a, "parse_graph");
    require_valid_id(b, "parse_graph");
    if (a == b) {
      throw parse_error("parse_graph: line " + std::to_string(line_no) + ": self-loop " + a +
                        " " + b);
    }
    auto key = ordered(a, b);
    if (!seen.insert(key).second && !collapse) {
      throw parse_error("parse_graph: line " + std::to_string(line_no) + ": duplicate edge " +
                        key.first + " " + key.second + " (use --collapse to merge)");
    }
    edges.emplace_back(a, b);
  }
  return Graph::build(edges, isolated);
}

Graph parse_structured(std::istream& in, bool collapse) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("parse_graph: invalid structured document: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
    throw parse_error("parse_graph: structured document needs \"vertices\" and \"edges\"");
  }
  std::vector<VertexId> isolated;
  for (const auto& v : j.at("vertices")) {
    if (!v.is_string()) throw parse_error("parse_graph: vertex ids must be strings");
    isolated.push_back(v.get<std::string>());
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw parse_error("parse_graph: each edge must be a 2-element id array");
    }
    VertexId a = e[0].get<std::string>();
    VertexId b = e[1].get<std::string>();
    if (a == b) throw parse_error("parse_graph: self-loop " + a + " " + b);
    if (!seen.insert(ordered(a, b)).second && !collapse) {
      throw parse_error("parse_graph: duplicate edge " + a + " " + b +
                        " (use --collapse to merge)");
    }
    edges.emplace_back(a, b);
  }
  return Graph::build(edges, isolated);
}

}  // namespace

Graph parse_graph(std::istream& in, GraphFormat format, bool collapse_duplicates) {
  switch (format) {
    case GraphFormat::edge_list:
      return parse_edge_list(in, collapse_duplicates);
    case GraphFormat::structured:
      return parse_structured(in, collapse_duplicates);
    case GraphFormat::dot:
      throw parse_error("parse_graph: DOT is export-only");
  }
  throw parse_error("parse_graph: unknown format");
}

Graph parse_graph(const std::string& text, GraphFormat format, bool collapse_duplicates) {
  std::istringstream in(text);
  return parse_graph(in, format, collapse_duplicates);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  std::ostringstream out;
  switch (format) {
    case GraphFormat::edge_list: {
      for (const auto& [a, b] : g.edges()) {
        out << a << ' ' << b << '\n';
      }
      for (const auto& v : g.vertices()) {
        if (g.degree(v) == 0) out << v << '\n';
      }
      return out.str();
    }
    case GraphFormat::structured: {
      nlohmann::json j;
      j["vertices"] = g.vertices();
      auto edges = nlohmann::json::array();
      for (const auto& [a, b] : g.edges()) {
        edges.push_back({a, b});
      }
      j["edges"] = std::move(edges);
      return j.dump(2) + "\n";
    }
    case GraphFormat::dot: {
      out << "graph G {\n";
      for (const auto& v : g.vertices()) {
        if (g.degree(v) == 0) out << "  \"" << v << "\";\n";
      }
      for (const auto& [a, b] : g.edges()) {
        out << "  \"" << a << "\" -- \"" << b << "\";\n";
      }
      out << "}\n";
      return out.str();
    }
  }
  throw parse_error("serialize_graph: unknown format");
}

std::vector<VertexId> SpanningTree::path_to_root(const VertexId& v) const {
  if (!covered.count(v)) {
    throw precondition_error("path_to_root: vertex \"" + v + "\" not covered by tree");
  }
  std::vector<VertexId> path{v};
  VertexId cur = v;
  while (cur != root) {
    cur = parent.at(cur);
    path.push_back(cur);
  }
  return path;
}

std::vector<VertexId> SpanningTree::tree_path(const VertexId& a, const VertexId& b) const {
  std::vector<VertexId> up_a = path_to_root(a);
  std::vector<VertexId> up_b = path_to_root(b);
  std::set<VertexId> on_a(up_a.begin(), up_a.end());
  // Lowest common ancestor: first vertex of b's root chain on a's chain.
  size_t meet_b = 0;
  while (!on_a.count(up_b[meet_b])) ++meet_b;
  const VertexId& lca = up_b[meet_b];
  std::vector<VertexId> path;
  for (const VertexId& v : up_a) {
    path.push_back(v);
    if (v == lca) break;
  }
  for (size_t i = meet_b; i-- > 0;) {
    path.push_back(up_b[i]);
  }
  return path;
}

std::set<VertexId> component_containing(const Graph& g, const std::set<VertexId>& removed,
                                        const VertexId& target) {
  int start = g.index_of(target);
  if (start < 0) {
    throw precondition_error("component_containing: unknown vertex \"" + target + "\"");
  }
  if (removed.count(target)) {
    throw precondition_error("component_containing: target \"" + target + "\" is removed");
  }
  std::vector<char> blocked(static_cast<size_t>(g.vertex_count()), 0);
  for (const auto& r : removed) {
    int idx = g.index_of(r);
    if (idx >= 0) blocked[static_cast<size_t>(idx)] = 1;
  }
  std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
  seen[static_cast<size_t>(start)] = 1;
  std::deque<int> queue{start};
  std::set<VertexId> out;
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    out.insert(g.id_of(cur));
    for (int n : g.neighbors_of(cur)) {
      if (!seen[static_cast<size_t>(n)] && !blocked[static_cast<size_t>(n)]) {
        seen[static_cast<size_t>(n)] = 1;
        queue.push_back(n);
      }
    }
  }
  return out;
}

SpanningTree bfs_tree(const Graph& g, const VertexId& root, const std::set<VertexId>& restrict_to) {
  int start = g.index_of(root);
  if (start < 0) {
    throw precondition_error("bfs_tree: unknown root \"" + root + "\"");
  }
  if (!restrict_to.count(root)) {
    throw precondition_error("bfs_tree: root \"" + root + "\" not in restrict_to");
  }
  std::vector<char> allowed(static_cast<size_t>(g.vertex_count()), 0);
  for (const auto& v : restrict_to) {
    int idx = g.index_of(v);
    if (idx < 0) {
      throw precondition_error("bfs_tree: restrict_to vertex \"" + v + "\" not in graph");
    }
    allowed[static_cast<size_t>(idx)] = 1;
  }

  SpanningTree tree;
  tree.root = root;
  tree.covered.insert(root);
  std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
  seen[static_cast<size_t>(start)] = 1;
  std::deque<int> queue{start};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int n : g.neighbors_of(cur)) {  // sorted: deterministic BFS
      if (!allowed[static_cast<size_t>(n)] || seen[static_cast<size_t>(n)]) continue;
      seen[static_cast<size_t>(n)] = 1;
      tree.parent[g.id_of(n)] = g.id_of(cur);
      tree.covered.insert(g.id_of(n));
      queue.push_back(n);
    }
  }
  for (const auto& v : restrict_to) {
    if (!tree.covered.count(v)) {
      throw precondition_error("bfs_tree: restrict_to not connected, vertex \"" + v +
                               "\" unreached from \"" + root + "\"");
    }
  }
  return tree;
}

}  // namespace diamondpaths
