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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace floquetkit {

/// Fixed-length bit vector packed into 64-bit words. Bits past `size()` are
/// always zero, so word-wise comparisons and popcounts are exact.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  static BitVector from_string(const std::string& s) {
    BitVector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1') {
        v.set(i, true);
      } else if (s[i] != '0') {
        throw std::invalid_argument("bit string may only contain 0 and 1");
      }
    }
    return v;
  }

  static BitVector unit(std::size_t n, std::size_t i) {
    BitVector v(n);
    v.set(i, true);
    return v;
  }

  std::size_t size() const { return n_; }
  std::size_t num_words() const { return words_.size(); }
  const std::vector<std::uint64_t>& words() const { return words_; }
  std::uint64_t word(std::size_t w) const { return words_[w]; }
  std::uint64_t& word(std::size_t w) { return words_[w]; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  bool any() const {
    for (auto w : words_) {
      if (w != 0) return true;
    }
    return false;
  }
  bool none() const { return !any(); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Index of the lowest set bit, or size() when empty.
  std::size_t first_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
    return n_;
  }

  BitVector& operator^=(const BitVector& o) {
    check_same(o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  BitVector& operator&=(const BitVector& o) {
    check_same(o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  BitVector& operator|=(const BitVector& o) {
    check_same(o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

  /// Parity of the bitwise AND.
  bool dot(const BitVector& o) const {
    check_same(o);
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
    return std::popcount(acc) & 1;
  }

  /// Concatenation [this | o].
  BitVector concat(const BitVector& o) const {
    BitVector r(n_ + o.n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (get(i)) r.set(i, true);
    }
    for (std::size_t i = 0; i < o.n_; ++i) {
      if (o.get(i)) r.set(n_ + i, true);
    }
    return r;
  }

  BitVector slice(std::size_t begin, std::size_t len) const {
    BitVector r(len);
    for (std::size_t i = 0; i < len; ++i) {
      if (get(begin + i)) r.set(i, true);
    }
    return r;
  }

  std::string to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i) {
      if (get(i)) s[i] = '1';
    }
    return s;
  }

  /// Integer value with bit i as the 2^i digit; requires size() <= 64.
  std::uint64_t to_uint() const {
    if (n_ > 64) throw std::length_error("bit vector too long for integer conversion");
    return words_.empty() ? 0 : words_[0];
  }
  static BitVector from_uint(std::size_t n, std::uint64_t value) {
    BitVector v(n);
    for (std::size_t i = 0; i < n && i < 64; ++i) {
      if ((value >> i) & 1u) v.set(i, true);
    }
    return v;
  }

  friend bool operator==(const BitVector& a, const BitVector& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }
  friend bool operator<(const BitVector& a, const BitVector& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.words_ < b.words_;
  }

 private:
  void check_same(const BitVector& o) const {
    if (o.n_ != n_) throw std::invalid_argument("bit vector length mismatch");
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace floquetkit
