#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "levelable/chordal.hpp"
#include "levelable/decide.hpp"
#include "levelable/generators.hpp"
#include "levelable/graph.hpp"
#include "levelable/mis.hpp"

namespace levelable {

struct NotATree : GraphError {
  NotATree() : GraphError("input is not a tree") {}
};

struct FamilyVerdict {
  std::string family;
  bool levelable = false;
  std::optional<WeightFunction> weights;
  std::string citation;
};

namespace detail {

// Attachment weighting for trees meeting the criterion: each leaf gets 1,
// each internal vertex the number of its leaf neighbors.
inline std::vector<BigInt> tree_attachment_weights(const Graph& g) {
  std::vector<BigInt> w(g.vertex_count(), BigInt(1));
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) < 2) continue;
    int leaves = 0;
    for (int u : g.neighbors(v))
      if (g.degree(u) == 1) ++leaves;
    w[v] = leaves;
  }
  return w;
}

}  // namespace detail

// A tree is levelable iff every non-free vertex is adjacent to a free vertex.
inline FamilyVerdict classify_tree(const Graph& g) {
  if (!is_tree(g)) throw NotATree();
  FamilyVerdict v;
  v.family = "tree";
  v.citation = "a tree is levelable iff every non-free vertex has a free neighbor";
  if (g.vertex_count() == 1) {
    v.levelable = true;
    v.weights = validate_weights(g, {BigInt(1)});
    return v;
  }
  for (int x = 0; x < g.vertex_count(); ++x) {
    if (g.degree(x) < 2) continue;
    bool has_free = false;
    for (int u : g.neighbors(x))
      if (g.degree(u) == 1) {
        has_free = true;
        break;
      }
    if (!has_free) {
      v.levelable = false;
      return v;
    }
  }
  v.levelable = true;
  v.weights = validate_weights(g, detail::tree_attachment_weights(g));
  return v;
}

// Operates on the constructor-supplied shape. End vertices of the central
// path without legs are folded into a shorter path first, matching the
// convention that each end of the central path carries a leg.
inline FamilyVerdict classify_caterpillar(const CaterpillarSpec& spec) {
  if (spec.legs.empty()) throw FamilyError("caterpillar needs spine length >= 1");
  for (int l : spec.legs)
    if (l < 0) throw FamilyError("leg counts must be >= 0");

  std::vector<int> legs = spec.legs;
  std::size_t lo = 0, hi = legs.size() - 1;
  while (hi > lo && legs[lo] == 0) legs[++lo] += 1;
  while (hi > lo && legs[hi] == 0) legs[--hi] += 1;

  bool levelable = true;
  if (hi > lo) {
    for (std::size_t i = lo; i <= hi; ++i)
      if (legs[i] == 0) levelable = false;
  }

  FamilyVerdict v;
  v.family = "caterpillar";
  v.citation = "a caterpillar is levelable iff every central-path vertex has a leg";
  v.levelable = levelable;
  if (levelable) {
    FamilyVerdict tree = classify_tree(make_caterpillar(spec.legs));
    if (!tree.levelable) throw std::logic_error("internal: caterpillar rule disagrees with tree rule");
    v.weights = tree.weights;
  }
  return v;
}

inline FamilyVerdict classify_big_star(const std::vector<int>& arms) {
  if (arms.size() < 3) throw FamilyError("big star needs q >= 3 arms");
  for (int a : arms)
    if (a < 1) throw FamilyError("arm lengths must be >= 1");
  FamilyVerdict v;
  v.family = "big_star";
  v.citation = "G(n_1..n_q) is levelable iff all n_i <= 2 and some n_j = 1";
  const int longest = *std::max_element(arms.begin(), arms.end());
  const bool has_unit = std::find(arms.begin(), arms.end(), 1) != arms.end();
  v.levelable = longest <= 2 && has_unit;
  if (v.levelable) {
    FamilyVerdict tree = classify_tree(make_big_star(arms));
    if (!tree.levelable) throw std::logic_error("internal: big star rule disagrees with tree rule");
    v.weights = tree.weights;
  }
  return v;
}

// Verdict for C_{2n}(a,n) through the decomposition into circulant copies:
// t = gcd(2n,a); if 2n/t is even the graph is t copies of C_{2n/t}(1,n/t),
// otherwise t/2 copies of C_{4n/t}(2,2n/t). A disjoint union is levelable
// iff every copy is.
inline FamilyVerdict classify_cubic_circulant(int n, int a) {
  if (n < 2 || a < 1 || a >= n) throw FamilyError("cubic circulant needs 1 <= a < n, n >= 2");
  FamilyVerdict v;
  v.family = "cubic_circulant";
  v.citation =
      "Davis-Domke decomposition; C_2n(1,n) levelable iff n in {2,3,4}, "
      "C_2n(2,n) with n odd iff n in {3,5}";
  const int t = std::gcd(2 * n, a);
  const int m = 2 * n / t;
  if (m % 2 == 0) {
    const int half = n / t;
    v.levelable = half == 2 || half == 3 || half == 4;
  } else {
    v.levelable = m == 3 || m == 5;
  }
  if (v.levelable) {
    // Every levelable case is well-covered, so all-ones weights validate.
    v.weights = validate_weights(make_cubic_circulant(n, a),
                                 std::vector<BigInt>(2 * n, BigInt(1)));
  }
  return v;
}

// lcm weighting for K_{a_1..a_d}: weight d/a_i on part i, independence
// weight d = lcm(a_1..a_d). Validated against the block-ordered realization.
inline WeightFunction multipartite_weights(const std::vector<int>& part_sizes) {
  if (part_sizes.empty()) throw FamilyError("multipartite needs at least one part");
  BigInt d = 1;
  for (int a : part_sizes) {
    if (a < 1) throw FamilyError("multipartite part sizes must be >= 1");
    d = big_lcm(d, BigInt(a));
  }
  std::vector<BigInt> w;
  for (int a : part_sizes)
    for (int k = 0; k < a; ++k) w.push_back(d / a);
  return validate_weights(make_complete_multipartite(part_sizes), w);
}

// Absent when alpha(G) >= 3. Weight 2 on vertices forming singleton maximal
// sets (the universal vertices) and 1 elsewhere; all-ones when alpha = 1.
inline std::optional<FamilyVerdict> classify_alpha_le2(const Graph& g) {
  const int n = g.vertex_count();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (g.has_edge(i, j)) continue;
      for (int k = j + 1; k < n; ++k)
        if (!g.has_edge(i, k) && !g.has_edge(j, k)) return std::nullopt;
    }
  FamilyVerdict v;
  v.family = "alpha_le_2";
  v.citation = "graphs with independence number at most 2 are levelable";
  v.levelable = true;
  bool complete = true;
  for (int i = 0; i < n && complete; ++i)
    if (g.degree(i) != n - 1) complete = false;
  std::vector<BigInt> w(n, BigInt(1));
  if (!complete)
    for (int i = 0; i < n; ++i)
      if (g.degree(i) == n - 1) w[i] = 2;
  v.weights = validate_weights(g, w);
  return v;
}

// Leaf-order weighting for graphs with chordal complement. The facets of the
// complement's clique complex are MaxInd(G); weights are grown facet by
// facet, rescaling the processed part so the new free vertices can absorb
// the remaining weight.
inline std::optional<WeightFunction> cochordal_weights(const Graph& g) {
  const Graph gc = complement(g);
  if (g.vertex_count() == 0) return std::nullopt;
  const auto lo = chordal_leaf_order(gc);
  if (!lo) return std::nullopt;

  const int n = g.vertex_count();
  std::vector<BigInt> w(n, BigInt(0));
  std::vector<bool> assigned(n, false);
  std::vector<int> assigned_list;
  BigInt c = 0;

  for (std::size_t i = 0; i < lo->facets.size(); ++i) {
    const auto& f = lo->facets[i];
    if (i == 0) {
      for (int v : f) {
        w[v] = 1;
        assigned[v] = true;
        assigned_list.push_back(v);
      }
      c = static_cast<int>(f.size());
      continue;
    }
    const int br = lo->branch[i];
    BigInt overlap_sum = 0;
    std::vector<int> free_vertices;
    for (int v : f) {
      if (assigned[v]) {
        overlap_sum += w[v];
        if (br < 0 || !std::binary_search(lo->facets[br].begin(), lo->facets[br].end(), v))
          throw std::logic_error("internal: leaf order branch does not cover the overlap");
      } else {
        free_vertices.push_back(v);
      }
    }
    if (free_vertices.empty())
      throw std::logic_error("internal: leaf facet fully covered by earlier facets");
    const BigInt gap = c - overlap_sum;
    if (gap <= 0) throw std::logic_error("internal: branch overlap weighs at least a full facet");
    const BigInt fcount = static_cast<int>(free_vertices.size());
    const BigInt d = fcount / gap + 1;  // minimal d with d*gap > fcount
    if (d > 1) {
      for (int v : assigned_list) w[v] *= d;
      c *= d;
      overlap_sum *= d;
    }
    BigInt rest = c - overlap_sum;
    for (std::size_t k = 0; k + 1 < free_vertices.size(); ++k) {
      w[free_vertices[k]] = 1;
      rest -= 1;
    }
    w[free_vertices.back()] = rest;
    for (int v : free_vertices) {
      assigned[v] = true;
      assigned_list.push_back(v);
    }
  }
  return validate_weights(g, w);
}

// Levelable iff no exceptional vertex; the constructive weights are the leg
// count on each U-vertex, the triangle count on each V-vertex, and 1 on all
// leaves and triangle vertices.
inline FamilyVerdict classify_cameron_walker(const CameronWalkerSpec& spec) {
  validate_cameron_walker_spec(spec);
  FamilyVerdict v;
  v.family = "cameron_walker";
  v.citation = "a Cameron-Walker graph is levelable iff it has no exceptional vertex";
  v.levelable = std::find(spec.triangle_counts.begin(), spec.triangle_counts.end(), 0) ==
                spec.triangle_counts.end();
  if (v.levelable) {
    const Graph g = realize_cameron_walker(spec);
    std::vector<BigInt> w(g.vertex_count(), BigInt(1));
    for (int i = 0; i < spec.a; ++i) w[i] = spec.leg_counts[i];
    for (int j = 0; j < spec.b; ++j) w[spec.a + j] = spec.triangle_counts[j];
    v.weights = validate_weights(g, w);
  }
  return v;
}

namespace detail {

inline bool is_path_graph(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2 || !is_tree(g)) return false;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

inline bool is_cycle_graph(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 3 || !is_connected(g)) return false;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

// Complete multipartite graphs are exactly those whose complement is a
// disjoint union of cliques.
inline std::optional<std::vector<int>> multipartite_parts(const Graph& g) {
  const Graph gc = complement(g);
  std::vector<int> sizes;
  for (const auto& comp : connected_components(gc)) {
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = i + 1; j < comp.size(); ++j)
        if (!gc.has_edge(comp[i], comp[j])) return std::nullopt;
    sizes.push_back(static_cast<int>(comp.size()));
  }
  return sizes;
}

}  // namespace detail

// Structural dispatcher: detects path / cycle / tree / complete multipartite
// / alpha<=2 / co-chordal in that order, falling back to the LP decision.
// Families it cannot verify structurally are never claimed.
inline FamilyVerdict classify(const Graph& g, const DecideOptions& opt = {}) {
  if (detail::is_path_graph(g)) {
    const int n = g.vertex_count();
    FamilyVerdict v;
    v.family = "path";
    v.citation = "P_n is levelable exactly for n in {2,3,4}";
    v.levelable = n >= 2 && n <= 4;
    if (v.levelable) v.weights = classify_tree(g).weights;
    return v;
  }
  if (detail::is_cycle_graph(g)) {
    const int n = g.vertex_count();
    FamilyVerdict v;
    v.family = "cycle";
    v.citation = "C_n is levelable exactly for n in {2,3,4,5,7}";
    v.levelable = n == 3 || n == 4 || n == 5 || n == 7;
    if (v.levelable) v.weights = validate_weights(g, std::vector<BigInt>(n, BigInt(1)));
    return v;
  }
  if (is_tree(g)) return classify_tree(g);
  if (auto parts = detail::multipartite_parts(g)) {
    FamilyVerdict v;
    v.family = "complete_multipartite";
    v.citation = "complete multipartite graphs are levelable (lcm weighting)";
    v.levelable = true;
    // Parts here follow the complement's component order, so weight by part
    // size per vertex instead of reusing the block-ordered construction.
    BigInt d = 1;
    for (int a : *parts) d = big_lcm(d, BigInt(a));
    std::vector<BigInt> w(g.vertex_count(), BigInt(1));
    const Graph gc = complement(g);
    for (const auto& comp : connected_components(gc))
      for (int v2 : comp) w[v2] = d / static_cast<int>(comp.size());
    v.weights = validate_weights(g, w);
    return v;
  }
  if (auto small = classify_alpha_le2(g)) return *small;
  if (auto w = cochordal_weights(g)) {
    FamilyVerdict v;
    v.family = "co_chordal";
    v.citation = "co-chordal graphs are levelable (leaf-order weighting)";
    v.levelable = true;
    v.weights = std::move(w);
    return v;
  }
  const LevelCertificate cert = decide_levelable(g, opt);
  FamilyVerdict v;
  v.family = "generic";
  v.citation = "exact LP feasibility of the difference system";
  v.levelable = cert.levelable;
  if (cert.weight_function) v.weights = cert.weight_function;
  return v;
}

}  // namespace levelable
