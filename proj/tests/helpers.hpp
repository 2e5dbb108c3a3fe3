#pragma once

// Test-only oracles and generators. Everything here is independent of the
// implementation paths it cross-checks: brute force over subsets, direct
// definition chasing, no reuse of the library's enumeration or elimination.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "levelable/graph.hpp"
#include "levelable/rational.hpp"

namespace testutil {

using levelable::BigInt;
using levelable::Graph;
using levelable::Rational;

// All maximal independent sets by filtering every subset of 2^n.
inline std::vector<std::vector<int>> brute_force_mis(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool independent = true;
    for (int i = 0; i < n && independent; ++i) {
      if (!((mask >> i) & 1)) continue;
      for (int j : g.neighbors(i))
        if (j > i && ((mask >> j) & 1)) {
          independent = false;
          break;
        }
    }
    if (!independent) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      if ((mask >> v) & 1) continue;
      bool blocked = false;
      for (int j : g.neighbors(v))
        if ((mask >> j) & 1) {
          blocked = true;
          break;
        }
      if (!blocked) maximal = false;
    }
    if (!maximal) continue;
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) s.push_back(i);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Chordality by definition: no induced cycle of length >= 4. Checks every
// vertex subset, so only for small n.
inline bool brute_force_chordal(const Graph& g) {
  const int n = g.vertex_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<int> verts;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) verts.push_back(i);
    if (verts.size() < 4) continue;
    // Induced subgraph is a cycle iff connected and 2-regular.
    bool two_regular = true;
    for (int v : verts) {
      int deg = 0;
      for (int w : verts)
        if (w != v && g.has_edge(v, w)) ++deg;
      if (deg != 2) {
        two_regular = false;
        break;
      }
    }
    if (!two_regular) continue;
    std::vector<int> seen{verts[0]};
    std::vector<int> stack{verts[0]};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : verts)
        if (w != v && g.has_edge(v, w) && std::find(seen.begin(), seen.end(), w) == seen.end()) {
          seen.push_back(w);
          stack.push_back(w);
        }
    }
    if (seen.size() == verts.size()) return false;  // induced chordless cycle
  }
  return true;
}

inline Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

// Uniform random labeled tree via a Pruefer sequence.
inline Graph random_tree(int n, std::mt19937& rng) {
  Graph g(n);
  if (n <= 1) return g;
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> pruefer(n - 2);
  for (auto& x : pruefer) x = pick(rng);
  std::vector<int> degree(n, 1);
  for (int x : pruefer) ++degree[x];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  for (int x : pruefer) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    g.add_edge(leaf, x);
    if (--degree[x] == 1) leaves.insert(x);
  }
  const int a = *leaves.begin();
  const int b = *std::next(leaves.begin());
  g.add_edge(a, b);
  return g;
}

// Whether two small graphs are isomorphic, by trying every permutation.
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  const int n = a.vertex_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (int i = 0; i < n && match; ++i)
      for (int j = i + 1; j < n && match; ++j)
        if (a.has_edge(i, j) != b.has_edge(perm[i], perm[j])) match = false;
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// One representative per isomorphism class of graphs on exactly n vertices.
inline std::vector<Graph> graph_isomorphism_classes(int n) {
  std::vector<Graph> reps;
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    Graph g(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++bit)
        if ((mask >> bit) & 1) g.add_edge(i, j);
    bool fresh = true;
    for (const auto& r : reps)
      if (isomorphic(g, r)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(std::move(g));
  }
  return reps;
}

// Direct definition check used against validate_weights and the certificates.
inline bool weights_make_well_covered(const Graph& g, const std::vector<BigInt>& w) {
  bool have = false;
  BigInt first = 0;
  for (const auto& s : brute_force_mis(g)) {
    BigInt sum = 0;
    for (int v : s) sum += w[v];
    if (!have) {
      first = sum;
      have = true;
    } else if (sum != first) {
      return false;
    }
  }
  return true;
}

}  // namespace testutil
