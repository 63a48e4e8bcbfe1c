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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "floquetkit/gf2.hpp"
#include "floquetkit/outcome_source.hpp"
#include "floquetkit/pauli.hpp"

namespace floquetkit {

class InvalidGroup : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Result of a membership query. When `member`, p = i^relative_phase * g for
/// the unique signed group element g with the same bits as p.
struct Membership {
  bool member = false;
  unsigned relative_phase = 0;
  /// Indices of stored generators whose product has the bits of p.
  std::vector<std::size_t> combination;

  bool sign_matches() const { return member && relative_phase == 0; }
  bool sign_conflicts() const { return member && relative_phase == 2; }
};

/// Signed abelian Pauli group, stored as an independent, commuting list of
/// Hermitian generators in user order.
class StabiliserGroup {
 public:
  StabiliserGroup() : basis_(0) {}

  /// Empty group on n qubits.
  explicit StabiliserGroup(std::size_t n) : n_(n), basis_(2 * n) {}

  /// Generators must be Hermitian, commuting and independent.
  StabiliserGroup(std::size_t n, std::vector<PauliOperator> generators) : n_(n), basis_(2 * n) {
    for (auto& g : generators) {
      if (g.n() != n) throw LengthMismatch("generator qubit count differs from group");
      if (!g.is_hermitian()) throw InvalidGroup("generator " + format_pauli(g) + " is not Hermitian");
      for (const auto& h : gens_) {
        if (commutes(g, h)) throw InvalidGroup("generators " + format_pauli(h) + " and " + format_pauli(g) + " anticommute");
      }
      if (g.is_identity_up_to_phase()) throw InvalidGroup("identity is not a valid generator");
      if (!basis_.insert(g.symplectic())) throw InvalidGroup("generator " + format_pauli(g) + " is dependent on earlier generators");
      gens_.push_back(std::move(g));
    }
  }

  /// Group generated by a possibly redundant list; dependent entries are
  /// dropped after checking their signs are consistent.
  static StabiliserGroup generated_by(std::size_t n, const std::vector<PauliOperator>& list) {
    StabiliserGroup g(n);
    for (const auto& p : list) {
      if (p.n() != n) throw LengthMismatch("generator qubit count differs from group");
      if (!p.is_hermitian()) throw InvalidGroup("generator " + format_pauli(p) + " is not Hermitian");
      if (p.is_identity_up_to_phase()) {
        if (p.phase() != 0) throw InvalidGroup("-I in generating set");
        continue;
      }
      for (const auto& h : g.gens_) {
        if (commutes(p, h)) throw InvalidGroup("generators " + format_pauli(h) + " and " + format_pauli(p) + " anticommute");
      }
      const auto m = g.contains(p);
      if (m.member) {
        if (m.relative_phase != 0) throw InvalidGroup("inconsistent signs: " + format_pauli(p) + " and its negation both generated (-I in group)");
        continue;
      }
      g.basis_.insert(p.symplectic());
      g.gens_.push_back(p);
    }
    return g;
  }

  static StabiliserGroup from_strings(const std::vector<std::string>& gens) {
    if (gens.empty()) throw InvalidGroup("from_strings needs at least one generator to fix n");
    std::vector<PauliOperator> ps;
    for (const auto& s : gens) ps.push_back(parse_pauli(s));
    const std::size_t n = ps.front().n();
    return StabiliserGroup(n, std::move(ps));
  }

  std::size_t n() const { return n_; }
  std::size_t rank() const { return gens_.size(); }
  const std::vector<PauliOperator>& generators() const { return gens_; }
  const PauliOperator& generator(std::size_t i) const { return gens_[i]; }

  /// Signed membership test by GF(2) solve.
  Membership contains(const PauliOperator& p) const {
    if (p.n() != n_) throw LengthMismatch("contains: qubit count differs from group");
    Membership out;
    auto [rem, idx] = basis_.reduce(p.symplectic());
    if (rem.any()) return out;
    PauliOperator prod = PauliOperator::identity(n_);
    for (auto i : idx) prod = multiply(prod, gens_[i]);
    out.member = true;
    out.relative_phase = (p.phase() + 4 - prod.phase()) & 3u;
    out.combination = std::move(idx);
    return out;
  }

  /// Unsigned membership.
  bool contains_unsigned(const PauliOperator& p) const { return basis_.in_span(p.symplectic()); }

  /// True when both groups have the same unsigned span.
  bool same_unsigned(const StabiliserGroup& o) const {
    if (o.n_ != n_ || o.rank() != rank()) return false;
    for (const auto& g : o.gens_) {
      if (!contains_unsigned(g)) return false;
    }
    return true;
  }

  /// Same signed group.
  bool same_signed(const StabiliserGroup& o) const {
    if (!same_unsigned(o)) return false;
    for (const auto& g : o.gens_) {
      if (!contains(g).sign_matches()) return false;
    }
    return true;
  }

  /// Product of generators selected by `bits` (length rank()).
  PauliOperator element(const BitVector& bits) const {
    PauliOperator prod = PauliOperator::identity(n_);
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (bits.get(i)) prod = multiply(prod, gens_[i]);
    }
    return prod;
  }

  /// Sign bits: 1 where the stored generator has sign -1.
  BitVector sign_bits() const {
    BitVector s(gens_.size());
    for (std::size_t i = 0; i < gens_.size(); ++i) s.set(i, gens_[i].phase() == 2);
    return s;
  }

 private:
  std::size_t n_ = 0;
  std::vector<PauliOperator> gens_;
  gf2::EchelonBasis basis_;
};

/// Reduced echelon generating set (columns ordered x_0..x_{n-1}, z_0..z_{n-1}).
inline StabiliserGroup canonicalise(const StabiliserGroup& g) {
  gf2::EchelonBasis b(2 * g.n());
  for (const auto& p : g.generators()) b.insert(p.symplectic());
  std::vector<PauliOperator> out;
  for (const auto& row : b.reduced_rows()) {
    const auto m = g.contains(PauliOperator::from_symplectic(row));
    PauliOperator signed_row = PauliOperator::identity(g.n());
    for (auto i : m.combination) signed_row = multiply(signed_row, g.generator(i));
    out.push_back(signed_row);
  }
  return StabiliserGroup(g.n(), std::move(out));
}

/// Symplectic pairs (X_i, Z_i) of logical representatives.
struct LogicalBasis {
  std::vector<std::pair<PauliOperator, PauliOperator>> pairs;

  std::size_t k() const { return pairs.size(); }
  const PauliOperator& x(std::size_t i) const { return pairs[i].first; }
  const PauliOperator& z(std::size_t i) const { return pairs[i].second; }
  PauliOperator& x(std::size_t i) { return pairs[i].first; }
  PauliOperator& z(std::size_t i) { return pairs[i].second; }

  /// Flattened as [X_0..X_{k-1}, Z_0..Z_{k-1}].
  std::vector<PauliOperator> flat() const {
    std::vector<PauliOperator> out;
    for (const auto& p : pairs) out.push_back(p.first);
    for (const auto& p : pairs) out.push_back(p.second);
    return out;
  }
};

/// Symplectic basis of N(g)/g by symplectic Gram-Schmidt.
inline LogicalBasis normaliser_logicals(const StabiliserGroup& g) {
  const std::size_t n = g.n();
  // v commutes with p iff <swap(p), v> = 0 under the ordinary dot product.
  std::vector<BitVector> rows;
  for (const auto& p : g.generators()) rows.push_back(p.z().concat(p.x()));
  const auto normaliser = gf2::kernel(rows, 2 * n);

  gf2::EchelonBasis span(2 * n);
  for (const auto& p : g.generators()) span.insert(p.symplectic());
  std::vector<BitVector> pool;
  for (const auto& v : normaliser) {
    if (span.insert(v)) pool.push_back(v);
  }

  LogicalBasis out;
  while (!pool.empty()) {
    BitVector v = pool.front();
    pool.erase(pool.begin());
    std::size_t partner = pool.size();
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (symplectic_product(v, pool[j])) {
        partner = j;
        break;
      }
    }
    if (partner == pool.size()) throw std::logic_error("normaliser_logicals: degenerate symplectic form");
    BitVector w = pool[partner];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(partner));
    for (auto& u : pool) {
      const int uw = symplectic_product(u, w);
      const int uv = symplectic_product(u, v);
      if (uw) u ^= v;
      if (uv) u ^= w;
    }
    out.pairs.emplace_back(PauliOperator::from_symplectic(v), PauliOperator::from_symplectic(w));
  }
  return out;
}

struct MeasurementResult {
  StabiliserGroup group;
  int outcome = 1;
  bool deterministic = false;
  /// b commuted with the group without being a member; the group grew.
  bool non_stabiliser = false;
};

/// Projective measurement of a Hermitian Pauli b.
inline MeasurementResult measure_pauli(const StabiliserGroup& g, const PauliOperator& b, OutcomeSource& source) {
  if (b.n() != g.n()) throw LengthMismatch("measure_pauli: qubit count differs from group");
  if (!b.is_hermitian()) throw std::invalid_argument("measure_pauli: observable " + format_pauli(b) + " is not Hermitian");
  if (b.is_identity_up_to_phase()) return {g, b.sign(), true, false};
  const auto& gens = g.generators();
  std::size_t pivot = gens.size();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (commutes(gens[i], b)) {
      pivot = i;
      break;
    }
  }
  MeasurementResult r;
  if (pivot < gens.size()) {
    const std::uint8_t bit = source.next();
    std::vector<PauliOperator> next = gens;
    for (std::size_t i = pivot + 1; i < gens.size(); ++i) {
      if (commutes(gens[i], b)) next[i] = multiply(gens[i], gens[pivot]);
    }
    next[pivot] = bit ? b.negated() : b;
    r.group = StabiliserGroup(g.n(), std::move(next));
    r.outcome = bit ? -1 : 1;
    return r;
  }
  const auto m = g.contains(b);
  if (m.member) {
    r.group = g;
    r.outcome = m.relative_phase == 0 ? 1 : -1;
    r.deterministic = true;
    return r;
  }
  const std::uint8_t bit = source.next();
  std::vector<PauliOperator> next = gens;
  next.push_back(bit ? b.negated() : b);
  r.group = StabiliserGroup(g.n(), std::move(next));
  r.outcome = bit ? -1 : 1;
  r.non_stabiliser = true;
  return r;
}

}  // namespace floquetkit
