#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "levelable/rational.hpp"

namespace levelable {

// One RREF row expressed as a combination of the source rows that were fed to
// the reducer: row = sum coef * source_row[index].
using RowCombination = std::vector<std::pair<long long, Rational>>;

struct ReducedSystem {
  int cols = 0;
  long long source_rows = 0;
  RationalMatrix rref;               // rank x cols, canonical reduced echelon form
  std::vector<int> pivot_cols;       // increasing
  std::vector<RowCombination> combos;  // one per rref row

  int rank() const { return static_cast<int>(rref.size()); }
};

// Incremental fraction-free row reduction. Working rows are kept as primitive
// integer vectors (content removed after every combination step), so no entry
// ever carries a denominator until the final normalization to RREF.
class IncrementalReducer {
 public:
  explicit IncrementalReducer(int cols) : cols_(cols) {}

  void add_row(const RationalVector& row) {
    if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("row width mismatch");
    const long long index = fed_++;

    // Clear denominators, then reduce against the kept rows.
    BigInt scale = 1;
    for (const auto& x : row) scale = big_lcm(scale, denominator(x));
    std::vector<BigInt> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = numerator(row[j]) * (scale / denominator(row[j]));
    RowCombination combo{{index, Rational(scale)}};

    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const int p = pivots_[k];
      if (r[p] == 0) continue;
      eliminate(r, combo, rows_[k], combos_[k], p);
    }
    int lead = first_nonzero(r);
    if (lead < 0) return;  // dependent row
    if (r[lead] < 0) negate(r, combo);
    normalize_content(r, combo);
    rows_.push_back(std::move(r));
    combos_.push_back(std::move(combo));
    pivots_.push_back(lead);
  }

  // Back-eliminates, scales leading entries to 1, and orders rows by pivot
  // column. Combinations undergo the identical operations.
  ReducedSystem finalize() const {
    std::vector<std::vector<BigInt>> rows = rows_;
    std::vector<RowCombination> combos = combos_;
    std::vector<int> pivots = pivots_;

    std::vector<std::size_t> order(rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });

    ReducedSystem out;
    out.cols = cols_;
    out.source_rows = fed_;
    for (std::size_t oi : order) out.pivot_cols.push_back(pivots[oi]);

    // Back-elimination over the integral rows.
    for (std::size_t a = 0; a < order.size(); ++a)
      for (std::size_t b = a + 1; b < order.size(); ++b) {
        const std::size_t ia = order[a], ib = order[b];
        const int p = pivots[ib];
        if (rows[ia][p] == 0) continue;
        eliminate(rows[ia], combos[ia], rows[ib], combos[ib], p);
        normalize_content(rows[ia], combos[ia]);
      }

    for (std::size_t oi : order) {
      const BigInt& lead = rows[oi][pivots[oi]];
      RationalVector rr(cols_);
      for (int j = 0; j < cols_; ++j) rr[j] = Rational(rows[oi][j], lead);
      RowCombination c = combos[oi];
      for (auto& [idx, coef] : c) coef /= Rational(lead);
      out.rref.push_back(std::move(rr));
      out.combos.push_back(std::move(c));
    }
    return out;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  static int first_nonzero(const std::vector<BigInt>& r) {
    for (std::size_t j = 0; j < r.size(); ++j)
      if (r[j] != 0) return static_cast<int>(j);
    return -1;
  }

  static void negate(std::vector<BigInt>& r, RowCombination& c) {
    for (auto& x : r) x = -x;
    for (auto& [idx, coef] : c) coef = -coef;
  }

  // r <- lead_k * r - r[p] * kept, combination updated identically.
  static void eliminate(std::vector<BigInt>& r, RowCombination& c, const std::vector<BigInt>& kept,
                        const RowCombination& kept_combo, int p) {
    const BigInt lead = kept[p];
    const BigInt factor = r[p];
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = lead * r[j] - factor * kept[j];
    const Rational rl(lead), rf(factor);
    RowCombination merged;
    merged.reserve(c.size() + kept_combo.size());
    std::size_t i = 0, k = 0;
    while (i < c.size() || k < kept_combo.size()) {
      if (k == kept_combo.size() || (i < c.size() && c[i].first < kept_combo[k].first)) {
        merged.emplace_back(c[i].first, rl * c[i].second);
        ++i;
      } else if (i == c.size() || kept_combo[k].first < c[i].first) {
        merged.emplace_back(kept_combo[k].first, -rf * kept_combo[k].second);
        ++k;
      } else {
        Rational v = rl * c[i].second - rf * kept_combo[k].second;
        if (v != 0) merged.emplace_back(c[i].first, std::move(v));
        ++i;
        ++k;
      }
    }
    c = std::move(merged);
  }

  static void normalize_content(std::vector<BigInt>& r, RowCombination& c) {
    BigInt g = 0;
    for (const auto& x : r) g = big_gcd(g, x);
    if (g <= 1) return;
    for (auto& x : r) x /= g;
    const Rational rg(g);
    for (auto& [idx, coef] : c) coef /= rg;
  }

  int cols_;
  long long fed_ = 0;
  std::vector<std::vector<BigInt>> rows_;
  std::vector<RowCombination> combos_;
  std::vector<int> pivots_;
};

inline ReducedSystem reduce_rows(const RationalMatrix& m, int cols) {
  IncrementalReducer red(cols);
  for (const auto& row : m) red.add_row(row);
  return red.finalize();
}

// Kernel basis from the RREF: one vector per free column, free columns in
// increasing index order; entry 1 at the free column.
inline std::vector<RationalVector> kernel_basis(const ReducedSystem& sys) {
  std::vector<bool> is_pivot(sys.cols, false);
  for (int p : sys.pivot_cols) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (int f = 0; f < sys.cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(sys.cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < sys.rref.size(); ++i) v[sys.pivot_cols[i]] = -sys.rref[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace levelable
