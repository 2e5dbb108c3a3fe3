#pragma once

#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "levelable/graph.hpp"

namespace levelable {

struct FamilyError : GraphError {
  using GraphError::GraphError;
};

struct PathSpec {
  int n;  // n >= 2 vertices
};
struct CycleSpec {
  int n;  // n >= 2; n = 2 realized as a single edge
};
struct CompleteMultipartiteSpec {
  std::vector<int> part_sizes;  // all >= 1
};
struct CirculantSpec {
  int n;
  std::vector<int> connection;  // subset of {1..n/2}
};
struct CaterpillarSpec {
  std::vector<int> legs;  // legs[i] = leaves at spine vertex i; spine = legs.size()
};
struct BigStarSpec {
  std::vector<int> arms;  // q >= 3 arm lengths, each >= 1
};
struct StarSpec {
  int leaves;  // K_{1,leaves}
};
struct RandomGnpSpec {
  int n;
  double p;  // 0 < p < 1
  std::uint64_t seed;
};

// Bipartite skeleton on U (size a) and V (size b) with at least one pendant
// leaf on every U-vertex and r_j >= 0 pendant triangles on each V-vertex.
// A V-vertex with r_j = 0 is exceptional and must see >= 2 U-vertices.
struct CameronWalkerSpec {
  int a = 0;
  int b = 0;
  std::vector<std::pair<int, int>> bipartite_edges;  // (u, v), u in [0,a), v in [0,b)
  std::vector<int> leg_counts;                       // size a, each >= 1
  std::vector<int> triangle_counts;                  // size b, each >= 0
};

using FamilySpec = std::variant<PathSpec, CycleSpec, CompleteMultipartiteSpec, CirculantSpec,
                                CaterpillarSpec, BigStarSpec, StarSpec, RandomGnpSpec,
                                CameronWalkerSpec>;

inline Graph make_path(int n) {
  if (n < 2) throw FamilyError("path needs n >= 2");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph make_cycle(int n) {
  if (n < 2) throw FamilyError("cycle needs n >= 2");
  if (n == 2) return make_path(2);  // single edge, so the n=2 case is representable
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph make_complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

// Parts occupy consecutive index blocks in declaration order.
inline Graph make_complete_multipartite(const std::vector<int>& parts) {
  int n = 0;
  for (int a : parts) {
    if (a < 1) throw FamilyError("multipartite part sizes must be >= 1");
    n += a;
  }
  Graph g(n);
  std::vector<int> part_of(n);
  int base = 0, idx = 0;
  for (int a : parts) {
    for (int k = 0; k < a; ++k) part_of[base + k] = idx;
    base += a;
    ++idx;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (part_of[i] != part_of[j]) g.add_edge(i, j);
  return g;
}

// C_n(S): {i,j} is an edge iff |i-j| in S or n-|i-j| in S.
inline Graph make_circulant(int n, const std::vector<int>& connection) {
  if (n < 1) throw FamilyError("circulant needs n >= 1");
  std::set<int> s;
  for (int d : connection) {
    if (d < 1 || d > n / 2) throw FamilyError("connection set must lie in {1..n/2}");
    s.insert(d);
  }
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int d = j - i;
      if (s.count(d) || s.count(n - d)) g.add_edge(i, j);
    }
  return g;
}

inline Graph make_star(int leaves) {
  if (leaves < 0) throw FamilyError("star needs leaves >= 0");
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

// Spine vertices 0..s-1, legs appended in spine order.
inline Graph make_caterpillar(const std::vector<int>& legs) {
  if (legs.empty()) throw FamilyError("caterpillar needs spine length >= 1");
  int extra = 0;
  for (int l : legs) {
    if (l < 0) throw FamilyError("leg counts must be >= 0");
    extra += l;
  }
  const int s = static_cast<int>(legs.size());
  Graph g(s + extra);
  for (int i = 0; i + 1 < s; ++i) g.add_edge(i, i + 1);
  int next = s;
  for (int i = 0; i < s; ++i)
    for (int k = 0; k < legs[i]; ++k) g.add_edge(i, next++);
  return g;
}

// q paths of lengths n_i glued at a shared center, vertex 0; arm i occupies
// the next n_i indices in declaration order.
inline Graph make_big_star(const std::vector<int>& arms) {
  if (arms.size() < 3) throw FamilyError("big star needs q >= 3 arms");
  int total = 1;
  for (int a : arms) {
    if (a < 1) throw FamilyError("arm lengths must be >= 1");
    total += a;
  }
  Graph g(total);
  int next = 1;
  for (int a : arms) {
    int prev = 0;
    for (int k = 0; k < a; ++k) {
      g.add_edge(prev, next);
      prev = next++;
    }
  }
  return g;
}

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace detail

// Counter-based: each pair (i,j) draws from a hash of (seed,i,j), so the
// output is independent of iteration order and bit-identical per seed.
inline Graph make_random_gnp(int n, double p, std::uint64_t seed) {
  if (n < 0) throw FamilyError("gnp needs n >= 0");
  if (!(p > 0.0 && p < 1.0)) throw FamilyError("gnp needs 0 < p < 1");
  const long double scale = 18446744073709551616.0L;  // 2^64
  const std::uint64_t threshold = static_cast<std::uint64_t>(static_cast<long double>(p) * scale);
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::uint64_t h = detail::mix64(detail::mix64(detail::mix64(seed) ^ static_cast<std::uint64_t>(i)) ^
                                      static_cast<std::uint64_t>(j));
      if (h < threshold) g.add_edge(i, j);
    }
  return g;
}

inline void validate_cameron_walker_spec(const CameronWalkerSpec& spec) {
  if (spec.a < 1 || spec.b < 1) throw FamilyError("Cameron-Walker skeleton needs both sides nonempty");
  if (static_cast<int>(spec.leg_counts.size()) != spec.a) throw FamilyError("leg_counts must have size a");
  if (static_cast<int>(spec.triangle_counts.size()) != spec.b)
    throw FamilyError("triangle_counts must have size b");
  for (int q : spec.leg_counts)
    if (q < 1) throw FamilyError("every U-vertex needs at least one leaf");
  for (int r : spec.triangle_counts)
    if (r < 0) throw FamilyError("triangle counts must be >= 0");
  Graph skel(spec.a + spec.b);
  std::vector<int> u_neighbors_of_v(spec.b, 0);
  for (auto [u, v] : spec.bipartite_edges) {
    if (u < 0 || u >= spec.a || v < 0 || v >= spec.b) throw FamilyError("bipartite edge out of range");
    if (!skel.has_edge(u, spec.a + v)) ++u_neighbors_of_v[v];
    skel.add_edge(u, spec.a + v);
  }
  if (!is_connected(skel)) throw FamilyError("bipartite skeleton must be connected");
  for (int j = 0; j < spec.b; ++j)
    if (spec.triangle_counts[j] == 0 && u_neighbors_of_v[j] < 2)
      throw FamilyError("exceptional vertex needs >= 2 neighbors in U");
}

// Numbering: U = 0..a-1, V = a..a+b-1, then leaves in U order, then triangle
// vertex pairs in V order.
inline Graph realize_cameron_walker(const CameronWalkerSpec& spec) {
  validate_cameron_walker_spec(spec);
  int n = spec.a + spec.b;
  for (int q : spec.leg_counts) n += q;
  for (int r : spec.triangle_counts) n += 2 * r;
  Graph g(n);
  for (auto [u, v] : spec.bipartite_edges) g.add_edge(u, spec.a + v);
  int next = spec.a + spec.b;
  for (int i = 0; i < spec.a; ++i)
    for (int k = 0; k < spec.leg_counts[i]; ++k) g.add_edge(i, next++);
  for (int j = 0; j < spec.b; ++j)
    for (int k = 0; k < spec.triangle_counts[j]; ++k) {
      int v1 = next++, v2 = next++;
      g.add_edge(spec.a + j, v1);
      g.add_edge(spec.a + j, v2);
      g.add_edge(v1, v2);
    }
  return g;
}

inline Graph generate_family(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> Graph {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PathSpec>) return make_path(s.n);
        else if constexpr (std::is_same_v<T, CycleSpec>) return make_cycle(s.n);
        else if constexpr (std::is_same_v<T, CompleteMultipartiteSpec>) return make_complete_multipartite(s.part_sizes);
        else if constexpr (std::is_same_v<T, CirculantSpec>) return make_circulant(s.n, s.connection);
        else if constexpr (std::is_same_v<T, CaterpillarSpec>) return make_caterpillar(s.legs);
        else if constexpr (std::is_same_v<T, BigStarSpec>) return make_big_star(s.arms);
        else if constexpr (std::is_same_v<T, StarSpec>) return make_star(s.leaves);
        else if constexpr (std::is_same_v<T, RandomGnpSpec>) return make_random_gnp(s.n, s.p, s.seed);
        else return realize_cameron_walker(s);
      },
      spec);
}

// The cubic circulant C_{2n}(a,n), the graph classified by the
// Davis-Domke decomposition.
inline Graph make_cubic_circulant(int n, int a) {
  if (n < 2 || a < 1 || a >= n) throw FamilyError("cubic circulant needs 1 <= a < n, n >= 2");
  return make_circulant(2 * n, {a, n});
}

}  // namespace levelable
