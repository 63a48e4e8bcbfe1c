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
#include "floquetkit/pauli.hpp"
#include "floquetkit/stabiliser_group.hpp"

namespace floquetkit {

class SignConflict : public std::runtime_error {
 public:
  SignConflict(const PauliOperator& element)
      : std::runtime_error("sign conflict on " + format_pauli_body(element) + ": the groups stabilise opposite eigenspaces"),
        element_(element) {}
  const PauliOperator& element() const { return element_; }

 private:
  PauliOperator element_;
};

class RankMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Signed intersection, with signs taken from `a`.
inline StabiliserGroup group_intersection(const StabiliserGroup& a, const StabiliserGroup& b) {
  if (a.n() != b.n()) throw LengthMismatch("group_intersection: qubit counts differ");
  std::vector<BitVector> ra, rb;
  for (const auto& g : a.generators()) ra.push_back(g.symplectic());
  for (const auto& g : b.generators()) rb.push_back(g.symplectic());
  std::vector<PauliOperator> gens;
  for (const auto& v : gf2::intersection(ra, rb, 2 * a.n())) {
    PauliOperator p = PauliOperator::from_symplectic(v);
    const auto ma = a.contains(p);
    const auto mb = b.contains(p);
    if (ma.relative_phase != mb.relative_phase) throw SignConflict(p);
    if (ma.relative_phase != 0) p = p.negated();
    gens.push_back(std::move(p));
  }
  return StabiliserGroup(a.n(), std::move(gens));
}

/// Square GF(2) matrix M_ij = commutes(a_i, b_j).
inline std::vector<BitVector> commutation_matrix(const std::vector<PauliOperator>& a, const std::vector<PauliOperator>& b) {
  std::vector<BitVector> m;
  for (const auto& ai : a) {
    BitVector row(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) row.set(j, commutes(ai, b[j]));
    m.push_back(std::move(row));
  }
  return m;
}

/// Validated reversible pair with biorthogonal conjugate bases.
struct ConjugatePair {
  StabiliserGroup group_a;
  StabiliserGroup group_b;
  StabiliserGroup intersection;
  std::vector<PauliOperator> basis_a;
  std::vector<PauliOperator> basis_b;
  /// Commutation matrix of the quotient bases before re-basing.
  std::vector<BitVector> m_before;

  std::size_t n() const { return group_a.n(); }
  std::size_t n_m() const { return basis_a.size(); }

  std::vector<BitVector> m_after() const { return commutation_matrix(basis_a, basis_b); }
};

/// Failure certificate: an element of one quotient commuting with every
/// basis element of the other.
struct ReversibilityWitness {
  PauliOperator element;
  char side = 'b';
  BitVector commutation;
  std::vector<BitVector> m;
};

struct ReversibilityResult {
  std::optional<ConjugatePair> pair;
  std::optional<ReversibilityWitness> witness;
  bool reversible() const { return pair.has_value(); }
};

namespace detail {

/// Greedy transversal of g above s, scanning generators in stored order.
inline std::vector<PauliOperator> quotient_basis(const StabiliserGroup& g, const StabiliserGroup& s) {
  gf2::EchelonBasis span(2 * g.n());
  for (const auto& p : s.generators()) span.insert(p.symplectic());
  std::vector<PauliOperator> out;
  for (const auto& p : g.generators()) {
    if (span.insert(p.symplectic())) out.push_back(p);
  }
  return out;
}

inline PauliOperator ordered_product(const std::vector<PauliOperator>& ops, const BitVector& subset, std::size_t n) {
  PauliOperator prod = PauliOperator::identity(n);
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (subset.get(i)) prod = multiply(prod, ops[i]);
  }
  return prod;
}

}  // namespace detail

inline ReversibilityResult check_reversible(const StabiliserGroup& a, const StabiliserGroup& b) {
  if (a.n() != b.n()) throw LengthMismatch("check_reversible: qubit counts differ");
  if (a.rank() != b.rank()) {
    throw RankMismatch("check_reversible: ranks differ (" + std::to_string(a.rank()) + " vs " + std::to_string(b.rank()) + ")");
  }
  const std::size_t n = a.n();
  StabiliserGroup s = group_intersection(a, b);
  auto qa = detail::quotient_basis(a, s);
  auto qb = detail::quotient_basis(b, s);
  const std::size_t nm = qa.size();
  const auto m = commutation_matrix(qa, qb);
  const auto inv = gf2::inverse(m);
  ReversibilityResult r;
  if (!inv) {
    // Right null vector v of M: the b-side product commutes with every a_i.
    const auto null = gf2::kernel(m, nm);
    ReversibilityWitness w;
    w.element = detail::ordered_product(qb, null.front(), n);
    if (w.element.phase() & 1u) w.element.set_phase(w.element.phase() + 1);
    w.side = 'b';
    w.commutation = BitVector(nm);
    for (std::size_t i = 0; i < nm; ++i) w.commutation.set(i, commutes(qa[i], w.element));
    w.m = m;
    r.witness = std::move(w);
    return r;
  }
  // New b_j = prod_k b_k^{T_kj} with T = M^{-1}, so commutes(a_i, b_j) = (M T)_ij = delta_ij.
  const auto t_cols = gf2::transpose(*inv, nm);
  std::vector<PauliOperator> rebased;
  for (std::size_t j = 0; j < nm; ++j) rebased.push_back(detail::ordered_product(qb, t_cols[j], n));
  ConjugatePair pair{a, b, std::move(s), std::move(qa), std::move(rebased), m};
  r.pair = std::move(pair);
  return r;
}

/// prod_i b_i^{subset_i} in ascending index order.
inline PauliOperator rebased_products(const ConjugatePair& pair, const BitVector& subset) {
  if (subset.size() != pair.n_m()) throw std::invalid_argument("rebased_products: subset length must equal n_m");
  return detail::ordered_product(pair.basis_b, subset, pair.n());
}

}  // namespace floquetkit
