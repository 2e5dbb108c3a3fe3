#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "helpers.hpp"
#include "levelable/constructions.hpp"
#include "levelable/decide.hpp"
#include "levelable/generators.hpp"

using namespace levelable;

namespace {
std::vector<BigInt> bw(std::initializer_list<int> xs) {
  std::vector<BigInt> v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

WeightFunction wf(const Graph& g, std::initializer_list<int> xs) {
  return validate_weights(g, bw(xs));
}
}  // namespace

TEST_CASE("duplication fixtures") {
  const Graph c5 = make_cycle(5);
  const auto [g1, w1] = duplicate_vertex(c5, 4, wf(c5, {1, 1, 1, 1, 1}));
  REQUIRE(g1.vertex_count() == 6);
  REQUIRE_FALSE(g1.has_edge(4, 5));
  REQUIRE(w1.weights == bw({2, 2, 2, 2, 1, 1}));
  REQUIRE(w1.independence_weight == 4);

  const Graph k2 = make_path(2);
  const auto [g2, w2] = duplicate_vertex(k2, 1, wf(k2, {1, 1}));
  REQUIRE(g2.has_edge(0, 2));
  REQUIRE_FALSE(g2.has_edge(1, 2));
  REQUIRE(w2.weights == bw({2, 1, 1}));
  REQUIRE(w2.independence_weight == 2);

  const Graph k1(1);
  const auto [g3, w3] = duplicate_vertex(k1, 0, wf(k1, {1}));
  REQUIRE(g3.vertex_count() == 2);
  REQUIRE(g3.edge_count() == 0);
  REQUIRE(w3.weights == bw({1, 1}));
}

TEST_CASE("expansion fixtures") {
  const Graph p3 = make_path(3);
  const auto [g1, w1] = expand_vertex(p3, 1, wf(p3, {1, 2, 1}));
  REQUIRE(g1.vertex_count() == 4);
  REQUIRE(g1.has_edge(1, 3));
  REQUIRE(w1.weights == bw({1, 2, 1, 2}));
  REQUIRE(w1.independence_weight == 2);

  const Graph k1(1);
  const auto [g2, w2] = expand_vertex(k1, 0, wf(k1, {1}));
  REQUIRE(g2.edge_count() == 1);
  REQUIRE(w2.weights == bw({1, 1}));

  const Graph k3 = make_complete(3);
  const auto [g3, w3] = expand_vertex(k3, 0, wf(k3, {1, 1, 1}));
  REQUIRE(g3.edge_count() == 6);  // K4
  REQUIRE(w3.weights == bw({1, 1, 1, 1}));
  REQUIRE(w3.independence_weight == 1);
}

TEST_CASE("attachment fixtures") {
  // P5 with a pendant at every vertex is well-covered with unit weights.
  const Graph p5 = make_path(5);
  std::vector<std::pair<Graph, WeightFunction>> pendants;
  for (int i = 0; i < 5; ++i) pendants.emplace_back(Graph(1), wf(Graph(1), {1}));
  const auto [g1, w1] = attach_graphs(p5, pendants);
  REQUIRE(g1.vertex_count() == 10);
  REQUIRE(g1.edge_count() == 9);
  REQUIRE(w1.weights == std::vector<BigInt>(10, BigInt(1)));
  REQUIRE(w1.independence_weight == 5);

  const Graph p2 = make_path(2);
  std::vector<std::pair<Graph, WeightFunction>> parts;
  parts.emplace_back(make_path(2), wf(make_path(2), {1, 1}));
  parts.emplace_back(make_complete(3), wf(make_complete(3), {1, 1, 1}));
  const auto [g2, w2] = attach_graphs(p2, parts);
  REQUIRE(g2.vertex_count() == 7);
  REQUIRE(w2.weights[0] == 1);
  REQUIRE(w2.weights[1] == 1);
  REQUIRE(testutil::weights_make_well_covered(g2, w2.weights));

  const Graph k1(1);
  std::vector<std::pair<Graph, WeightFunction>> single;
  single.emplace_back(Graph(1), wf(Graph(1), {5}));
  const auto [g3, w3] = attach_graphs(k1, single);
  REQUIRE(g3.edge_count() == 1);
  REQUIRE(w3.weights == bw({5, 5}));

  REQUIRE_THROWS_AS(attach_graphs(p2, single), GraphError);  // arity mismatch
}

TEST_CASE("weight profile realizations") {
  const auto [gb, wb] = realize_pendant_profile(bw({2, 3}));
  REQUIRE(gb.vertex_count() == 7);  // N = n + sum c_i
  REQUIRE(wb.weights == bw({2, 3, 1, 1, 1, 1, 1}));
  REQUIRE(testutil::weights_make_well_covered(gb, wb.weights));

  const auto [ga, wa] = realize_clique_profile(bw({1, 1}), {2, 2});
  REQUIRE(ga.vertex_count() == 4);
  REQUIRE(wa.weights == bw({1, 1, 1, 1}));
  REQUIRE(is_well_covered(ga));

  const auto [gs, ws] = realize_pendant_profile(bw({1}));
  REQUIRE(gs.edge_count() == 1);
  REQUIRE(ws.weights == bw({1, 1}));

  REQUIRE_THROWS_AS(realize_clique_profile(bw({1}), {1}), GraphError);
  REQUIRE_THROWS_AS(realize_pendant_profile(bw({0})), GraphError);
}

TEST_CASE("clique profile weight multiset groups by attachment") {
  // c = (2,5), r = (3,2): weight 2 with multiplicity 3, weight 5 twice.
  const auto [g, w] = realize_clique_profile(bw({2, 5}), {3, 2});
  REQUIRE(g.vertex_count() == 5);
  std::multiset<int> got;
  for (const auto& x : w.weights) got.insert(static_cast<int>(x));
  REQUIRE(got == std::multiset<int>{2, 2, 2, 5, 5});
  REQUIRE(testutil::weights_make_well_covered(g, w.weights));
}

TEST_CASE("constructed graphs decide levelable") {
  const Graph c5 = make_cycle(5);
  auto current = std::make_pair(c5, wf(c5, {1, 1, 1, 1, 1}));
  std::mt19937 rng(31337);
  for (int step = 0; step < 3; ++step) {
    const int x = static_cast<int>(rng() % current.first.vertex_count());
    current = duplicate_vertex(current.first, x, current.second);
    REQUIRE(decide_levelable(current.first).levelable);
  }
  REQUIRE(current.first.vertex_count() == 8);
}

TEST_CASE("attachment with a non-levelable component fails to be levelable") {
  // Built structurally, without weights: G(H) where one H_i is P5.
  const Graph skeleton = make_path(2);
  const Graph built = attach_structure(skeleton, {make_path(5), Graph(1)});
  REQUIRE(built.vertex_count() == 8);
  REQUIRE_FALSE(decide_levelable(built).levelable);

  // Same construction with every H_i levelable decides levelable.
  const Graph good = attach_structure(skeleton, {make_path(2), Graph(1)});
  REQUIRE(decide_levelable(good).levelable);
}

TEST_CASE("constructions reject invalid input weights") {
  const Graph p5 = make_path(5);
  REQUIRE_THROWS_AS(duplicate_vertex(p5, 0, WeightFunction{bw({1, 1, 1, 1, 1}), 3}), WeightError);
  const Graph k2 = make_path(2);
  REQUIRE_THROWS_AS(duplicate_vertex(k2, 5, wf(k2, {1, 1})), GraphError);
  REQUIRE_THROWS_AS(expand_vertex(k2, -1, wf(k2, {1, 1})), GraphError);
}
