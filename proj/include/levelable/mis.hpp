#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "levelable/bitset.hpp"
#include "levelable/graph.hpp"

namespace levelable {

inline constexpr std::size_t kDefaultMaxSets = 1'000'000;

// Signals combinatorial blow-up; never silently truncates.
struct EnumerationCapExceeded : std::runtime_error {
  explicit EnumerationCapExceeded(std::size_t cap_)
      : std::runtime_error("maximal independent set cap of " + std::to_string(cap_) + " exceeded"),
        cap(cap_) {}
  std::size_t cap;
};

// The facets of Ind(G): sorted vertex sets, sorted lexicographically.
struct MaxIndFamily {
  std::vector<std::vector<int>> sets;
  int source_n = 0;

  std::size_t size() const { return sets.size(); }
  const std::vector<int>& operator[](std::size_t i) const { return sets[i]; }
};

namespace detail {

struct MisEnumerator {
  const Graph& g;
  std::size_t cap;
  std::vector<VertexSet> nbr;      // closed-neighborhood masks N(v)|{v}
  std::vector<VertexSet> non_nbr;  // complement of the closed neighborhood
  std::vector<std::vector<int>> out;
  std::vector<int> current;

  MisEnumerator(const Graph& graph, std::size_t cap_) : g(graph), cap(cap_) {
    const int n = g.vertex_count();
    nbr.assign(n, VertexSet(n));
    non_nbr.assign(n, VertexSet(n));
    for (int v = 0; v < n; ++v) {
      nbr[v].insert(v);
      for (int w : g.neighbors(v)) nbr[v].insert(w);
      non_nbr[v] = VertexSet::full(n);
      non_nbr[v].subtract(nbr[v]);
    }
  }

  // Pivot rule: the candidate of maximum degree, ties broken by smallest
  // index. Branch vertices are the candidates inside the pivot's closed
  // neighborhood; everything else survives into the pivot's own branch.
  int pivot(const VertexSet& cand) const {
    int best = -1, best_deg = -1;
    cand.for_each([&](int v) {
      if (g.degree(v) > best_deg) {
        best_deg = g.degree(v);
        best = v;
      }
    });
    return best;
  }

  void run(VertexSet cand, VertexSet excl) {
    if (cand.empty()) {
      if (excl.empty()) {
        if (out.size() >= cap) throw EnumerationCapExceeded(cap);
        out.push_back(current);
      }
      return;
    }
    const int u = pivot(cand);
    const VertexSet branch = cand & nbr[u];
    for (int v : branch.to_vector()) {
      current.push_back(v);
      run(cand & non_nbr[v], excl & non_nbr[v]);
      current.pop_back();
      cand.erase(v);
      excl.insert(v);
    }
  }
};

}  // namespace detail

// Every maximal independent set of g, canonically ordered. The empty set is
// maximal only in the empty graph.
inline MaxIndFamily enumerate_max_independent_sets(const Graph& g, std::size_t cap = kDefaultMaxSets) {
  const int n = g.vertex_count();
  detail::MisEnumerator e(g, cap);
  e.run(VertexSet::full(n), VertexSet(n));
  for (auto& s : e.out) std::sort(s.begin(), s.end());
  std::sort(e.out.begin(), e.out.end());
  return MaxIndFamily{std::move(e.out), n};
}

inline int independence_number(const Graph& g, std::size_t cap = kDefaultMaxSets) {
  std::size_t best = 0;
  for (const auto& s : enumerate_max_independent_sets(g, cap).sets) best = std::max(best, s.size());
  return static_cast<int>(best);
}

inline bool is_well_covered(const Graph& g, std::size_t cap = kDefaultMaxSets) {
  const auto fam = enumerate_max_independent_sets(g, cap);
  for (const auto& s : fam.sets)
    if (s.size() != fam.sets.front().size()) return false;
  return true;
}

}  // namespace levelable
