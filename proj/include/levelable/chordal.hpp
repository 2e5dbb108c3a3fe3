#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "levelable/bitset.hpp"
#include "levelable/graph.hpp"

namespace levelable {

// Lexicographic BFS visit order; ties broken by smallest vertex so the order
// is deterministic. O(n^2) label bookkeeping, fine at this scale.
inline std::vector<int> lexbfs_order(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> label(n);
  std::vector<bool> visited(n, false);
  std::vector<int> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (visited[v]) continue;
      if (best == -1 || label[v] > label[best]) best = v;
    }
    visited[best] = true;
    order.push_back(best);
    for (int w : g.neighbors(best))
      if (!visited[w]) label[w].push_back(n - step);
  }
  return order;
}

// Checks that `elim` (first vertex eliminated first) is a perfect elimination
// order: the later neighbors of each vertex form a clique.
inline bool is_perfect_elimination_order(const Graph& g, const std::vector<int>& elim) {
  const int n = g.vertex_count();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[elim[i]] = i;
  for (int i = 0; i < n; ++i) {
    const int v = elim[i];
    int parent = -1;
    for (int w : g.neighbors(v))
      if (pos[w] > i && (parent == -1 || pos[w] < pos[parent])) parent = w;
    if (parent == -1) continue;
    for (int w : g.neighbors(v))
      if (pos[w] > i && w != parent && !g.has_edge(parent, w)) return false;
  }
  return true;
}

// Reverse LexBFS order is a perfect elimination order exactly for chordal
// graphs.
inline std::vector<int> chordal_elimination_order(const Graph& g) {
  auto order = lexbfs_order(g);
  std::reverse(order.begin(), order.end());
  return order;
}

inline bool is_chordal(const Graph& g) {
  return is_perfect_elimination_order(g, chordal_elimination_order(g));
}

// Maximal cliques of a chordal graph from a perfect elimination order: the
// candidates {v} | later-neighbors(v), with non-maximal ones dropped.
inline std::vector<std::vector<int>> chordal_max_cliques(const Graph& g, const std::vector<int>& elim) {
  const int n = g.vertex_count();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[elim[i]] = i;
  std::vector<VertexSet> cands;
  for (int i = 0; i < n; ++i) {
    const int v = elim[i];
    VertexSet c(n);
    c.insert(v);
    for (int w : g.neighbors(v))
      if (pos[w] > i) c.insert(w);
    cands.push_back(std::move(c));
  }
  // Candidates are pairwise distinct, so containment is always strict.
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < cands.size() && maximal; ++j)
      if (i != j && cands[i].is_subset_of(cands[j])) maximal = false;
    if (maximal) out.push_back(cands[i].to_vector());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Facets listed in an order where every facet is a leaf of the subcomplex of
// its predecessors; branch[i] is the index of a branch facet (-1 when facet i
// meets no earlier facet). Built by growing a maximum-weight spanning forest
// of the clique intersection graph, which for chordal graphs is a clique tree.
struct LeafOrder {
  std::vector<std::vector<int>> facets;
  std::vector<int> branch;
};

inline std::optional<LeafOrder> chordal_leaf_order(const Graph& g) {
  if (g.vertex_count() == 0) return std::nullopt;
  const auto elim = chordal_elimination_order(g);
  if (!is_perfect_elimination_order(g, elim)) return std::nullopt;
  const auto cliques = chordal_max_cliques(g, elim);
  const int s = static_cast<int>(cliques.size());
  const int n = g.vertex_count();

  std::vector<VertexSet> masks;
  for (const auto& c : cliques) {
    VertexSet m(n);
    for (int v : c) m.insert(v);
    masks.push_back(std::move(m));
  }

  LeafOrder lo;
  std::vector<bool> used(s, false);
  std::vector<int> attach_weight(s, -1), attach_to(s, -1);
  for (int step = 0; step < s; ++step) {
    int best = -1;
    for (int k = 0; k < s; ++k) {
      if (used[k]) continue;
      if (best == -1 || attach_weight[k] > attach_weight[best]) best = k;
    }
    used[best] = true;
    lo.facets.push_back(cliques[best]);
    lo.branch.push_back(attach_weight[best] > 0 ? attach_to[best] : -1);
    for (int k = 0; k < s; ++k) {
      if (used[k]) continue;
      const int w = (masks[best] & masks[k]).count();
      if (w > attach_weight[k]) {
        attach_weight[k] = w;
        attach_to[k] = step;
      }
    }
  }
  return lo;
}

}  // namespace levelable
