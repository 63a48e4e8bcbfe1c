// Copyright 2026 The floquetkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "floquetkit/bits.hpp"

namespace floquetkit::gf2 {

/// Incrementally built echelon basis over GF(2). Each stored row remembers
/// which inserted vectors it is a combination of, so reductions can report
/// coefficients in terms of the original inputs.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return inserted_; }

  /// Reduces v against the basis. Returns the remainder and the set of
  /// inserted vectors whose sum was XORed in.
  std::pair<BitVector, std::vector<std::size_t>> reduce(BitVector v) const {
    BitVector used(inserted_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (v.get(pivots_[r])) {
        v ^= rows_[r];
        used ^= resize(combos_[r], inserted_);
      }
    }
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < inserted_; ++i) {
      if (used.get(i)) idx.push_back(i);
    }
    return {std::move(v), std::move(idx)};
  }

  bool in_span(const BitVector& v) const { return reduce(v).first.none(); }

  /// Inserts v; returns true when it was independent of the current rows.
  /// Dependent vectors still count towards inserted().
  bool insert(const BitVector& v) {
    if (v.size() != cols_) throw std::invalid_argument("echelon basis: column count mismatch");
    const std::size_t id = inserted_++;
    BitVector combo(inserted_);
    combo.set(id, true);
    BitVector w = v;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (w.get(pivots_[r])) {
        w ^= rows_[r];
        combo ^= resize(combos_[r], inserted_);
      }
    }
    if (w.none()) return false;
    const std::size_t p = w.first_set();
    // Keep rows fully reduced on pivot columns.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r].get(p)) {
        rows_[r] ^= w;
        combos_[r] = resize(combos_[r], inserted_) ^ combo;
      }
    }
    rows_.push_back(std::move(w));
    pivots_.push_back(p);
    combos_.push_back(std::move(combo));
    return true;
  }

  /// Basis rows in reduced echelon form, sorted by pivot column.
  std::vector<BitVector> reduced_rows() const {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    std::vector<BitVector> out;
    for (auto i : order) out.push_back(rows_[i]);
    return out;
  }

 private:
  static BitVector resize(const BitVector& v, std::size_t n) {
    if (v.size() == n) return v;
    BitVector r(n);
    for (std::size_t i = 0; i < v.size() && i < n; ++i) {
      if (v.get(i)) r.set(i, true);
    }
    return r;
  }

  std::size_t cols_;
  std::size_t inserted_ = 0;
  std::vector<BitVector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<BitVector> combos_;
};

inline std::size_t rank(const std::vector<BitVector>& rows, std::size_t cols) {
  EchelonBasis b(cols);
  for (const auto& r : rows) b.insert(r);
  return b.rank();
}

/// Basis of {v : <row, v> = 0 for every row} (ordinary dot product).
inline std::vector<BitVector> kernel(const std::vector<BitVector>& rows, std::size_t cols) {
  EchelonBasis b(cols);
  for (const auto& r : rows) b.insert(r);
  const auto reduced = b.reduced_rows();
  std::vector<std::size_t> pivot_of_row;
  std::vector<bool> is_pivot(cols, false);
  for (const auto& r : reduced) {
    const std::size_t p = r.first_set();
    pivot_of_row.push_back(p);
    is_pivot[p] = true;
  }
  std::vector<BitVector> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    BitVector v(cols);
    v.set(f, true);
    for (std::size_t r = 0; r < reduced.size(); ++r) {
      if (reduced[r].get(f)) v.set(pivot_of_row[r], true);
    }
    out.push_back(std::move(v));
  }
  return out;
}

/// Square matrix as rows; returns the inverse or nullopt when singular.
inline std::optional<std::vector<BitVector>> inverse(const std::vector<BitVector>& m) {
  const std::size_t n = m.size();
  std::vector<BitVector> a = m;
  std::vector<BitVector> inv;
  for (std::size_t i = 0; i < n; ++i) inv.push_back(BitVector::unit(n, i));
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t r = c; r < n; ++r) {
      if (a[r].get(c)) {
        piv = r;
        break;
      }
    }
    if (piv == n) return std::nullopt;
    std::swap(a[c], a[piv]);
    std::swap(inv[c], inv[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != c && a[r].get(c)) {
        a[r] ^= a[c];
        inv[r] ^= inv[c];
      }
    }
  }
  return inv;
}

/// Row-vector times matrix: (v M)_j = sum_i v_i M_ij.
inline BitVector row_times(const BitVector& v, const std::vector<BitVector>& m, std::size_t cols) {
  BitVector out(cols);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (v.get(i)) out ^= m[i];
  }
  return out;
}

inline std::vector<BitVector> multiply(const std::vector<BitVector>& a, const std::vector<BitVector>& b, std::size_t cols) {
  std::vector<BitVector> out;
  for (const auto& row : a) out.push_back(row_times(row, b, cols));
  return out;
}

inline std::vector<BitVector> transpose(const std::vector<BitVector>& m, std::size_t cols) {
  std::vector<BitVector> t(cols, BitVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (m[i].get(j)) t[j].set(i, true);
    }
  }
  return t;
}

/// Basis of the intersection of two row spaces (Zassenhaus).
inline std::vector<BitVector> intersection(const std::vector<BitVector>& u, const std::vector<BitVector>& v, std::size_t cols) {
  EchelonBasis b(2 * cols);
  for (const auto& r : u) b.insert(r.concat(r));
  for (const auto& r : v) b.insert(r.concat(BitVector(cols)));
  std::vector<BitVector> out;
  for (const auto& row : b.reduced_rows()) {
    if (row.slice(0, cols).none()) out.push_back(row.slice(cols, cols));
  }
  return out;
}

}  // namespace floquetkit::gf2
