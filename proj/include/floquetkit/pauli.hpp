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

#include "floquetkit/bits.hpp"

namespace floquetkit {

/// Raised when two operands act on different numbers of qubits.
class LengthMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// i^phase * sigma_0 (x) ... (x) sigma_{n-1}, sigma_j chosen by (x_j, z_j):
/// (0,0)=I, (1,0)=X, (0,1)=Z, (1,1)=Y. Convention: X Z = -i Y.
class PauliOperator {
 public:
  PauliOperator() = default;
  explicit PauliOperator(std::size_t n) : x_(n), z_(n) {}
  PauliOperator(BitVector x, BitVector z, unsigned phase = 0) : x_(std::move(x)), z_(std::move(z)), phase_(phase & 3u) {
    if (x_.size() != z_.size()) throw LengthMismatch("x and z parts differ in length");
  }

  static PauliOperator identity(std::size_t n) { return PauliOperator(n); }

  /// Single-qubit factor `c` in {I,X,Y,Z} on qubit q.
  static PauliOperator single(std::size_t n, std::size_t q, char c) {
    PauliOperator p(n);
    p.set_factor(q, c);
    return p;
  }

  std::size_t n() const { return x_.size(); }
  const BitVector& x() const { return x_; }
  const BitVector& z() const { return z_; }
  unsigned phase() const { return phase_; }
  void set_phase(unsigned phase) { phase_ = phase & 3u; }

  bool is_hermitian() const { return (phase_ & 1u) == 0; }
  bool is_identity_up_to_phase() const { return x_.none() && z_.none(); }
  /// +1 or -1 for Hermitian operators.
  int sign() const {
    if (!is_hermitian()) throw std::domain_error("sign of a non-Hermitian Pauli operator");
    return phase_ == 0 ? 1 : -1;
  }

  char factor(std::size_t q) const {
    const bool xb = x_.get(q), zb = z_.get(q);
    if (xb && zb) return 'Y';
    if (xb) return 'X';
    if (zb) return 'Z';
    return 'I';
  }
  void set_factor(std::size_t q, char c) {
    switch (c) {
      case 'I': x_.set(q, false); z_.set(q, false); break;
      case 'X': x_.set(q, true); z_.set(q, false); break;
      case 'Y': x_.set(q, true); z_.set(q, true); break;
      case 'Z': x_.set(q, false); z_.set(q, true); break;
      default: throw ParseError(std::string("invalid Pauli character '") + c + "'");
    }
  }

  std::size_t weight() const { return (x_ | z_).count(); }

  /// Sorted qubit indices with a non-identity factor.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    const BitVector u = x_ | z_;
    for (std::size_t w = 0; w < u.num_words(); ++w) {
      std::uint64_t bits = u.word(w);
      while (bits) {
        s.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return s;
  }

  /// Symplectic vector [x | z] of length 2n.
  BitVector symplectic() const { return x_.concat(z_); }
  static PauliOperator from_symplectic(const BitVector& v, unsigned phase = 0) {
    const std::size_t n = v.size() / 2;
    return PauliOperator(v.slice(0, n), v.slice(n, n), phase);
  }

  /// Same bits with phase 0, i.e. the Hermitian tensor product of factors.
  PauliOperator unsigned_part() const { return PauliOperator(x_, z_, 0); }

  PauliOperator negated() const { return PauliOperator(x_, z_, phase_ + 2); }

  /// Hermitian observable with sign +1 / -1.
  static PauliOperator observable(const BitVector& x, const BitVector& z, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("observable sign must be +1 or -1");
    return PauliOperator(x, z, sign == 1 ? 0 : 2);
  }

  friend bool operator==(const PauliOperator& a, const PauliOperator& b) {
    return a.phase_ == b.phase_ && a.x_ == b.x_ && a.z_ == b.z_;
  }

 private:
  BitVector x_, z_;
  unsigned phase_ = 0;
};

/// Exact product p*q.
inline PauliOperator multiply(const PauliOperator& p, const PauliOperator& q) {
  if (p.n() != q.n()) throw LengthMismatch("multiply: qubit counts differ");
  // Per site, sigma(a) sigma(b) = i^e sigma(a^b) with e = +1 on the cyclic
  // pairs XY, YZ, ZX and -1 on the reversed ones.
  int plus = 0, minus = 0;
  const std::size_t words = p.x().num_words();
  for (std::size_t w = 0; w < words; ++w) {
    const std::uint64_t x1 = p.x().word(w), z1 = p.z().word(w);
    const std::uint64_t x2 = q.x().word(w), z2 = q.z().word(w);
    const std::uint64_t pl = (x1 & ~z1 & x2 & z2) | (x1 & z1 & ~x2 & z2) | (~x1 & z1 & x2 & ~z2);
    const std::uint64_t mi = (x1 & z1 & x2 & ~z2) | (~x1 & z1 & x2 & z2) | (x1 & ~z1 & ~x2 & z2);
    plus += std::popcount(pl);
    minus += std::popcount(mi);
  }
  const int phase = static_cast<int>(p.phase()) + static_cast<int>(q.phase()) + plus - minus;
  return PauliOperator(p.x() ^ q.x(), p.z() ^ q.z(), static_cast<unsigned>(((phase % 4) + 4) % 4));
}

/// 0 if p and q commute, 1 if they anticommute.
inline int commutes(const PauliOperator& p, const PauliOperator& q) {
  if (p.n() != q.n()) throw LengthMismatch("commutes: qubit counts differ");
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < p.x().num_words(); ++w) {
    acc ^= (p.x().word(w) & q.z().word(w)) ^ (p.z().word(w) & q.x().word(w));
  }
  return std::popcount(acc) & 1;
}

/// Symplectic form on [x|z] vectors of length 2n.
inline int symplectic_product(const BitVector& u, const BitVector& v) {
  const std::size_t n = u.size() / 2;
  int acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    acc ^= (u.get(i) & v.get(n + i)) ^ (u.get(n + i) & v.get(i));
  }
  return acc;
}

/// Parses `[+-]?i?[IXYZ]+`. Qubit j is character j of the operator body.
inline PauliOperator parse_pauli(const std::string& text) {
  std::size_t pos = 0;
  unsigned phase = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') phase = 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase += 1;
    ++pos;
  }
  if (pos >= text.size()) throw ParseError("empty Pauli string");
  PauliOperator p(text.size() - pos);
  for (std::size_t q = 0; pos < text.size(); ++pos, ++q) p.set_factor(q, text[pos]);
  p.set_phase(phase);
  return p;
}

/// Canonical text: explicit sign, then 'i' for odd phases, then factors.
inline std::string format_pauli(const PauliOperator& p) {
  std::string s;
  s += (p.phase() >= 2) ? '-' : '+';
  if (p.phase() & 1u) s += 'i';
  for (std::size_t q = 0; q < p.n(); ++q) s += p.factor(q);
  return s;
}

/// Factor string without sign, e.g. "XZI".
inline std::string format_pauli_body(const PauliOperator& p) {
  std::string s;
  s.reserve(p.n());
  for (std::size_t q = 0; q < p.n(); ++q) s += p.factor(q);
  return s;
}

}  // namespace floquetkit
