#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "levelable/decide.hpp"
#include "levelable/generators.hpp"
#include "levelable/graph.hpp"

namespace levelable {

// Each construction takes a graph with a validated weight function and
// returns the new graph together with weights that are re-validated before
// being handed back. Original vertices keep their indices; new vertices are
// appended in construction order.

// Adds y with the open neighborhood of x (y not adjacent to x). New weights:
// everything doubled except x, with weight(x) on both x and y.
inline std::pair<Graph, WeightFunction> duplicate_vertex(const Graph& g, int x, const WeightFunction& wf) {
  const int n = g.vertex_count();
  if (x < 0 || x >= n) throw GraphError("duplicate_vertex: vertex out of range");
  validate_weights(g, wf.weights);

  Graph out(n + 1);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (int v : g.neighbors(x)) out.add_edge(n, v);

  std::vector<BigInt> w(n + 1);
  for (int i = 0; i < n; ++i) w[i] = i == x ? wf.weights[i] : 2 * wf.weights[i];
  w[n] = wf.weights[x];
  return {out, validate_weights(out, w)};
}

// Adds y with the closed neighborhood of x (y adjacent to x as well). New
// weights: unchanged, with weight(x) repeated on y.
inline std::pair<Graph, WeightFunction> expand_vertex(const Graph& g, int x, const WeightFunction& wf) {
  const int n = g.vertex_count();
  if (x < 0 || x >= n) throw GraphError("expand_vertex: vertex out of range");
  validate_weights(g, wf.weights);

  Graph out(n + 1);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (int v : g.neighbors(x)) out.add_edge(n, v);
  out.add_edge(n, x);

  std::vector<BigInt> w = wf.weights;
  w.push_back(wf.weights[x]);
  return {out, validate_weights(out, w)};
}

// The raw attachment graph G(H_1..H_n): every vertex of H_i joined to
// vertex i of g. H blocks are appended in order.
inline Graph attach_structure(const Graph& g, const std::vector<Graph>& hs) {
  const int n = g.vertex_count();
  if (static_cast<int>(hs.size()) != n) throw GraphError("attach: need one graph per vertex");
  int total = n;
  for (const auto& h : hs) total += h.vertex_count();
  Graph out(total);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  int base = n;
  for (int i = 0; i < n; ++i) {
    for (auto [u, v] : hs[i].edges()) out.add_edge(base + u, base + v);
    for (int u = 0; u < hs[i].vertex_count(); ++u) out.add_edge(i, base + u);
    base += hs[i].vertex_count();
  }
  return out;
}

// Weighted attachment: vertex i of g takes the independence weight of H_i,
// the H_i weights are kept.
inline std::pair<Graph, WeightFunction> attach_graphs(const Graph& g,
                                                      const std::vector<std::pair<Graph, WeightFunction>>& hs) {
  const int n = g.vertex_count();
  if (static_cast<int>(hs.size()) != n) throw GraphError("attach: need one weighted graph per vertex");
  std::vector<Graph> parts;
  std::vector<BigInt> w(n);
  for (int i = 0; i < n; ++i) {
    if (hs[i].first.vertex_count() == 0) throw GraphError("attach: components must be nonempty");
    validate_weights(hs[i].first, hs[i].second.weights);
    parts.push_back(hs[i].first);
    w[i] = hs[i].second.independence_weight;
  }
  for (const auto& [h, hw] : hs)
    for (const auto& x : hw.weights) w.push_back(x);
  Graph out = attach_structure(g, parts);
  return {out, validate_weights(out, w)};
}

// Path skeleton with one clique attached per vertex: realizes the weight
// profile c_i repeated r_i times (each r_i >= 2).
inline std::pair<Graph, WeightFunction> realize_clique_profile(const std::vector<BigInt>& c,
                                                               const std::vector<int>& r) {
  if (c.empty() || c.size() != r.size()) throw GraphError("profile: need matching c and r sequences");
  const int n = static_cast<int>(c.size());
  std::vector<std::pair<Graph, WeightFunction>> hs;
  for (int i = 0; i < n; ++i) {
    if (r[i] < 2) throw GraphError("profile: multiplicities must be >= 2");
    if (c[i] < 1) throw GraphError("profile: weights must be >= 1");
    Graph k = make_complete(r[i] - 1);
    hs.emplace_back(k, validate_weights(k, std::vector<BigInt>(r[i] - 1, c[i])));
  }
  const Graph skeleton = n == 1 ? Graph(1) : make_path(n);
  return attach_graphs(skeleton, hs);
}

// Path skeleton with c_i pendant leaves per vertex: realizes the weight
// profile (c_1..c_n, 1, ..., 1) on n + sum(c_i) vertices.
inline std::pair<Graph, WeightFunction> realize_pendant_profile(const std::vector<BigInt>& c) {
  if (c.empty()) throw GraphError("profile: need at least one weight");
  const int n = static_cast<int>(c.size());
  std::vector<std::pair<Graph, WeightFunction>> hs;
  for (const auto& ci : c) {
    if (ci < 1) throw GraphError("profile: weights must be >= 1");
    if (ci > 1000000) throw GraphError("profile: pendant realization would be too large");
    const int leaves = static_cast<int>(ci);
    Graph h(leaves);
    hs.emplace_back(h, validate_weights(h, std::vector<BigInt>(leaves, BigInt(1))));
  }
  const Graph skeleton = n == 1 ? Graph(1) : make_path(n);
  return attach_graphs(skeleton, hs);
}

}  // namespace levelable
