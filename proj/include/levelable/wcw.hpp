#pragma once

#include <stdexcept>
#include <vector>

#include "levelable/graph.hpp"
#include "levelable/linalg.hpp"
#include "levelable/mis.hpp"
#include "levelable/rational.hpp"

namespace levelable {

// Row k is the indicator vector of W_k minus that of W_{k+1}. The kernel of
// this (s-1) x n matrix is exactly WCW(G): consecutive differences already
// force all maximal independent sums equal.
inline RationalMatrix constraint_matrix(const MaxIndFamily& mis) {
  if (mis.sets.empty()) throw std::invalid_argument("constraint_matrix: empty family");
  RationalMatrix m;
  for (std::size_t k = 0; k + 1 < mis.sets.size(); ++k) {
    RationalVector row(mis.source_n, Rational(0));
    for (int v : mis.sets[k]) row[v] += 1;
    for (int v : mis.sets[k + 1]) row[v] -= 1;
    m.push_back(std::move(row));
  }
  return m;
}

// Exact rational basis of the vector space of well-covered weightings.
struct WcwBasis {
  int dim = 0;
  std::vector<RationalVector> basis;  // canonical: free columns ascending
  RationalMatrix constraint_rows;
};

inline WcwBasis wcw_basis_from_family(const MaxIndFamily& mis) {
  WcwBasis out;
  out.constraint_rows = constraint_matrix(mis);
  ReducedSystem sys = reduce_rows(out.constraint_rows, mis.source_n);
  out.basis = kernel_basis(sys);
  out.dim = static_cast<int>(out.basis.size());
  return out;
}

inline WcwBasis wcw_basis(const Graph& g, std::size_t cap = kDefaultMaxSets) {
  return wcw_basis_from_family(enumerate_max_independent_sets(g, cap));
}

// True iff every maximal independent set has the same w-sum.
inline bool is_wcw_weighting(const Graph& g, const RationalVector& w, std::size_t cap = kDefaultMaxSets) {
  if (static_cast<int>(w.size()) != g.vertex_count())
    throw std::invalid_argument("is_wcw_weighting: weight vector length mismatch");
  const auto fam = enumerate_max_independent_sets(g, cap);
  Rational first;
  bool have = false;
  for (const auto& s : fam.sets) {
    Rational sum(0);
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

// Membership of v in the span of the computed basis, by reducing v against it.
inline bool in_span(const std::vector<RationalVector>& basis, const RationalVector& v) {
  if (basis.empty()) {
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  }
  IncrementalReducer red(static_cast<int>(v.size()));
  for (const auto& b : basis) red.add_row(b);
  const int base_rank = red.rank();
  red.add_row(v);
  return red.rank() == base_rank;
}

}  // namespace levelable
