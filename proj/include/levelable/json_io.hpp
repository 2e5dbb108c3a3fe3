#pragma once

#include <json.hpp>

#include <limits>
#include <string>
#include <vector>

#include "levelable/algebra.hpp"
#include "levelable/classify.hpp"
#include "levelable/decide.hpp"
#include "levelable/graph.hpp"
#include "levelable/rational.hpp"
#include "levelable/wcw.hpp"

namespace levelable {

using nlohmann::json;

// Integers that fit in 64 bits are emitted as JSON numbers, anything larger
// as a decimal string.
inline json big_to_json(const BigInt& x) {
  static const BigInt lo = std::numeric_limits<long long>::min();
  static const BigInt hi = std::numeric_limits<long long>::max();
  if (x >= lo && x <= hi) return static_cast<long long>(x);
  return x.str();
}

inline json weights_to_json(const std::vector<BigInt>& w) {
  json arr = json::array();
  for (const auto& x : w) arr.push_back(big_to_json(x));
  return arr;
}

inline json rationals_to_json(const RationalVector& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(to_string(x));
  return arr;
}

inline json certificate_to_json(const LevelCertificate& cert) {
  json j;
  if (cert.levelable) {
    j["verdict"] = "levelable";
    j["weights"] = weights_to_json(cert.weight_function->weights);
    j["independence_weight"] = big_to_json(cert.weight_function->independence_weight);
  } else {
    j["verdict"] = "not_levelable";
    json w;
    w["component"] = cert.witness_component;
    if (cert.obstruction) {
      w["type"] = "obstruction";
      w["f1"] = cert.obstruction->f1;
      w["f2"] = cert.obstruction->f2;
      w["f3"] = cert.obstruction->f3;
      w["f4"] = cert.obstruction->f4;
    } else {
      w["type"] = "farkas";
      w["multipliers"] = rationals_to_json(cert.infeasibility->farkas_multipliers);
    }
    j["witness"] = w;
  }
  return j;
}

inline json verdict_to_json(const FamilyVerdict& v) {
  json j;
  j["family"] = v.family;
  j["levelable"] = v.levelable;
  j["citation"] = v.citation;
  if (v.weights) {
    j["weights"] = weights_to_json(v.weights->weights);
    j["independence_weight"] = big_to_json(v.weights->independence_weight);
  }
  return j;
}

inline json wcw_to_json(const WcwBasis& b, int n) {
  json j;
  j["n"] = n;
  j["dim"] = b.dim;
  j["rank"] = n - b.dim;
  json basis = json::array();
  for (const auto& vec : b.basis) basis.push_back(rationals_to_json(vec));
  j["basis"] = basis;
  return j;
}

inline json mis_to_json(const MaxIndFamily& fam) {
  json j;
  j["n"] = fam.source_n;
  j["count"] = fam.sets.size();
  j["sets"] = fam.sets;
  return j;
}

inline json socle_to_json(const SocleVector& sv, const MonomialBasis& basis, bool level) {
  json j;
  j["socle"] = sv.s;
  j["e"] = sv.e;
  j["level"] = level;
  j["graded_dims"] = basis.graded_dims;
  return j;
}

inline json graph_to_json(const Graph& g) {
  json j;
  j["n"] = g.vertex_count();
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  j["edges"] = edges;
  return j;
}

inline json graph_weights_to_json(const Graph& g, const WeightFunction& wf) {
  json j;
  j["graph"] = graph_to_json(g);
  j["weights"] = weights_to_json(wf.weights);
  j["independence_weight"] = big_to_json(wf.independence_weight);
  return j;
}

inline json error_to_json(const std::string& kind, const std::string& message) {
  json j;
  j["error"] = kind;
  j["message"] = message;
  return j;
}

}  // namespace levelable
