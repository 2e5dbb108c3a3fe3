#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace levelable {

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by parse_graph; carries the 1-based line number of the offending line.
struct ParseError : GraphError {
  ParseError(const std::string& msg, int line_no)
      : GraphError("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
  int line;
};

// Finite simple graph on vertices 0..n-1. Adjacency lists are kept sorted and
// duplicate-free; self-loops are rejected at insertion.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(check_size(n)) {}

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int vertex_count() const { return static_cast<int>(adj_.size()); }

  int edge_count() const {
    std::size_t twice = 0;
    for (const auto& nb : adj_) twice += nb.size();
    return static_cast<int>(twice / 2);
  }

  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }

  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

  bool has_edge(int u, int v) const {
    const auto& nb = adj_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  // Inserts {u,v}, keeping lists sorted; duplicates are ignored.
  void add_edge(int u, int v) {
    const int n = vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n) throw GraphError("vertex index out of range");
    if (u == v) throw GraphError("self-loop rejected");
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
  }

  // All edges as (u,v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count(); ++u)
      for (int v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  // Optional display names; empty or of length n.
  std::vector<std::string> labels;

 private:
  static int check_size(int n) {
    if (n < 0) throw GraphError("negative vertex count");
    return n;
  }
  static void insert_sorted(std::vector<int>& nb, int v) {
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v) nb.insert(it, v);
  }
  std::vector<std::vector<int>> adj_;
};

// Edge-list format: first non-comment line "n m", then m lines "u v" with
// 0 <= u,v < n and u != v. Lines starting with '#' are ignored.
inline Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int n = -1;
  long long m = -1;

  auto next_content_line = [&](std::string& out) -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      std::size_t first = line.find_first_not_of(" \t\r\n");
      if (first == std::string::npos) continue;
      if (line[first] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };

  std::string content;
  if (!next_content_line(content)) throw ParseError("missing header \"n m\"", line_no == 0 ? 1 : line_no);
  {
    std::istringstream hs(content);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra)) throw ParseError("malformed header, expected \"n m\"", line_no);
    if (n < 0 || m < 0) throw ParseError("negative counts in header", line_no);
  }

  Graph g(n);
  for (long long k = 0; k < m; ++k) {
    if (!next_content_line(content)) throw ParseError("expected " + std::to_string(m) + " edges, got " + std::to_string(k), line_no);
    std::istringstream es(content);
    long long u, v;
    std::string extra;
    if (!(es >> u >> v) || (es >> extra)) throw ParseError("malformed edge, expected \"u v\"", line_no);
    if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError("vertex index out of range", line_no);
    if (u == v) throw ParseError("self-loop rejected", line_no);
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (next_content_line(content)) throw ParseError("unexpected content after edge list", line_no);
  return g;
}

// Byte-deterministic emitter: header then edges sorted lexicographically.
inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  auto es = g.edges();
  out << g.vertex_count() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) out << u << ' ' << v << '\n';
  return out.str();
}

inline Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  Graph c(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

// Vertices of h are shifted by g.vertex_count().
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  const int off = g.vertex_count();
  Graph u(off + h.vertex_count());
  for (auto [a, b] : g.edges()) u.add_edge(a, b);
  for (auto [a, b] : h.edges()) u.add_edge(a + off, b + off);
  return u;
}

// Partition of 0..n-1 into maximal connected sets, each sorted, ordered by
// minimum vertex.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{s}, members;
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int w : g.neighbors(v))
        if (comp[w] == -1) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

inline bool is_connected(const Graph& g) {
  return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

inline bool is_tree(const Graph& g) {
  return g.vertex_count() >= 1 && is_connected(g) && g.edge_count() == g.vertex_count() - 1;
}

// Subgraph induced on `vertices` (must be sorted, duplicate-free); vertex k of
// the result corresponds to vertices[k].
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  Graph s(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.has_edge(vertices[i], vertices[j])) s.add_edge(static_cast<int>(i), static_cast<int>(j));
  return s;
}

}  // namespace levelable
