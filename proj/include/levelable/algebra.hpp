#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "levelable/graph.hpp"
#include "levelable/mis.hpp"

namespace levelable {

// The facets of Ind(G); its Stanley-Reisner ideal is the edge ideal of G.
struct FacetComplex {
  int n = 0;
  std::vector<std::vector<int>> facets;
};

inline FacetComplex independence_complex(const Graph& g, std::size_t cap = kDefaultMaxSets) {
  auto fam = enumerate_max_independent_sets(g, cap);
  return FacetComplex{fam.source_n, std::move(fam.sets)};
}

// Pure-power exponents a_i >= 2; a_i = 1 would collapse the variable away
// and is rejected at construction.
struct ExponentVector {
  explicit ExponentVector(std::vector<int> a_) : a(std::move(a_)) {
    for (int x : a)
      if (x < 2) throw std::invalid_argument("exponents must be >= 2");
  }
  std::vector<int> a;
};

struct MonomialCapExceeded : std::runtime_error {
  explicit MonomialCapExceeded(std::size_t cap_)
      : std::runtime_error("monomial enumeration cap of " + std::to_string(cap_) + " exceeded"),
        cap(cap_) {}
  std::size_t cap;
};

inline constexpr std::size_t kDefaultMonomialCap = 1'000'000;

// Vector-space basis of the artinian quotient by the edge ideal plus pure
// powers: all exponent tuples with e_i <= a_i - 1 and independent support,
// listed by total degree then lexicographically.
struct MonomialBasis {
  std::vector<long long> graded_dims;           // index = total degree
  std::vector<std::vector<int>> monomials;      // exponent tuples
};

inline MonomialBasis monomial_basis(const Graph& g, const ExponentVector& a,
                                    std::size_t cap = kDefaultMonomialCap) {
  const int n = g.vertex_count();
  if (static_cast<int>(a.a.size()) != n) throw std::invalid_argument("exponent vector length mismatch");
  std::size_t tuples = 1;
  for (int x : a.a) {
    if (tuples > cap / static_cast<std::size_t>(x)) throw MonomialCapExceeded(cap);
    tuples *= static_cast<std::size_t>(x);
  }

  MonomialBasis out;
  std::vector<int> e(n, 0);
  for (;;) {
    bool independent = true;
    for (int i = 0; i < n && independent; ++i) {
      if (e[i] == 0) continue;
      for (int j : g.neighbors(i))
        if (j > i && e[j] > 0) {
          independent = false;
          break;
        }
    }
    if (independent) {
      int deg = 0;
      for (int x : e) deg += x;
      if (static_cast<int>(out.graded_dims.size()) <= deg) out.graded_dims.resize(deg + 1, 0);
      ++out.graded_dims[deg];
      out.monomials.push_back(e);
    }
    int k = n - 1;
    while (k >= 0 && e[k] == a.a[k] - 1) e[k--] = 0;
    if (k < 0) break;
    ++e[k];
  }
  std::sort(out.monomials.begin(), out.monomials.end(), [](const auto& x, const auto& y) {
    int dx = 0, dy = 0;
    for (int v : x) dx += v;
    for (int v : y) dy += v;
    if (dx != dy) return dx < dy;
    return x < y;
  });
  return out;
}

// Graded dimensions of the annihilator of the maximal ideal.
struct SocleVector {
  std::vector<long long> s;  // s_0..s_e
  int e = 0;
};

inline SocleVector socle_vector(const Graph& g, const ExponentVector& a,
                                std::size_t cap = kDefaultMonomialCap) {
  const MonomialBasis basis = monomial_basis(g, a, cap);
  const int n = g.vertex_count();
  const int e_top = static_cast<int>(basis.graded_dims.size()) - 1;
  SocleVector out;
  out.e = e_top;
  out.s.assign(e_top + 1, 0);
  for (const auto& m : basis.monomials) {
    bool socle = true;
    for (int i = 0; i < n && socle; ++i) {
      // x_i * m survives unless the power bound trips or the support of the
      // product picks up an edge.
      if (m[i] + 1 > a.a[i] - 1) continue;
      bool edge = false;
      for (int j : g.neighbors(i))
        if (m[j] > 0) {
          edge = true;
          break;
        }
      if (!edge) socle = false;
    }
    if (socle) {
      int deg = 0;
      for (int x : m) deg += x;
      ++out.s[deg];
    }
  }
  return out;
}

// Level: socle concentrated in the top degree.
inline bool is_level_quotient(const Graph& g, const ExponentVector& a,
                              std::size_t cap = kDefaultMonomialCap) {
  const SocleVector sv = socle_vector(g, a, cap);
  for (int d = 0; d < sv.e; ++d)
    if (sv.s[d] != 0) return false;
  return true;
}

// The facet difference system: a is a solution iff the sums over consecutive
// facets differ exactly by the facet size difference, i.e. (a - 1) is a
// well-covered weighting.
inline bool vtz_feasible(const FacetComplex& fc, const ExponentVector& a) {
  if (static_cast<int>(a.a.size()) != fc.n) throw std::invalid_argument("exponent vector length mismatch");
  for (std::size_t k = 0; k + 1 < fc.facets.size(); ++k) {
    long long lhs = 0;
    for (int v : fc.facets[k]) lhs += a.a[v];
    for (int v : fc.facets[k + 1]) lhs -= a.a[v];
    const long long rhs = static_cast<long long>(fc.facets[k].size()) -
                          static_cast<long long>(fc.facets[k + 1].size());
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace levelable
