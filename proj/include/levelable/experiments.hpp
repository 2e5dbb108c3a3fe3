#pragma once

#include <cstdint>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "levelable/decide.hpp"
#include "levelable/generators.hpp"
#include "levelable/graph.hpp"
#include "levelable/rational.hpp"
#include "levelable/wcw.hpp"

namespace levelable {

struct TrialRecord {
  long long trial = 0;
  int n = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
  int dim = -1;           // -1 when the enumeration cap tripped
  bool levelable = false;
  bool capped = false;
};

struct DimZeroStats {
  Rational fraction;                     // dim-0 share of completed trials
  std::map<int, long long> histogram;    // dim -> count
  long long levelable_count = 0;
  long long capped_count = 0;
  long long completed = 0;
  std::vector<TrialRecord> records;
};

// Samples `trials` graphs from G(n,p) with per-trial seeds seed+k and records
// the dimension of WCW per sample. With trials = 0 and n <= 5 every labeled
// graph on n vertices is enumerated instead. Capped trials are counted and
// reported, never dropped.
inline DimZeroStats wcw_dim_zero_fraction(int n, double p, long long trials, std::uint64_t seed,
                                          const DecideOptions& opt = {}) {
  const bool exhaustive = trials == 0 && n <= 5;
  if (!exhaustive && trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must be in (0,1)");

  DimZeroStats stats;
  stats.fraction = 0;

  auto run_one = [&](long long trial, std::uint64_t trial_seed, const Graph& g) {
    TrialRecord rec;
    rec.trial = trial;
    rec.n = n;
    rec.p = p;
    rec.seed = trial_seed;
    try {
      rec.dim = wcw_basis(g, opt.max_sets).dim;
      rec.levelable = decide_levelable(g, opt).levelable;
    } catch (const EnumerationCapExceeded&) {
      rec.capped = true;
      rec.dim = -1;
    }
    if (rec.capped) {
      ++stats.capped_count;
    } else {
      ++stats.completed;
      ++stats.histogram[rec.dim];
      if (rec.levelable) ++stats.levelable_count;
    }
    stats.records.push_back(rec);
  };

  if (exhaustive) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      Graph g(n);
      int bit = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
          if ((mask >> bit) & 1) g.add_edge(i, j);
      run_one(static_cast<long long>(mask), seed, g);
    }
  } else {
    for (long long k = 0; k < trials; ++k) {
      const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(k);
      run_one(k, trial_seed, make_random_gnp(n, p, trial_seed));
    }
  }

  if (stats.completed > 0)
    stats.fraction = Rational(stats.histogram.count(0) ? stats.histogram[0] : 0, stats.completed);
  return stats;
}

// CSV: one row per trial; capped trials carry dim -1 and levelable "cap".
inline std::string stats_to_csv(const DimZeroStats& stats) {
  std::ostringstream out;
  out << "trial,n,p,seed,dim,levelable\n";
  char pbuf[32];
  for (const auto& r : stats.records) {
    std::snprintf(pbuf, sizeof(pbuf), "%g", r.p);
    out << r.trial << ',' << r.n << ',' << pbuf << ',' << r.seed << ',' << r.dim << ','
        << (r.capped ? "cap" : (r.levelable ? "true" : "false")) << '\n';
  }
  return out.str();
}

}  // namespace levelable
