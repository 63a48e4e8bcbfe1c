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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "floquetkit/conjugacy.hpp"
#include "floquetkit/floquet.hpp"
#include "floquetkit/parallel.hpp"
#include "floquetkit/stabiliser_group.hpp"

namespace floquetkit {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

inline constexpr std::size_t kMaxMatrixQubits = 12;
inline constexpr std::size_t kMaxStateQubits = 20;
/// Residuals of operators up to this dimension are computed exactly
/// (Frobenius norm, an upper bound on the spectral norm); larger ones use
/// power iteration.
inline constexpr std::size_t kExactNormDim = 128;

class DimensionGuard : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline void require_matrix_qubits(std::size_t n) {
  if (n > kMaxMatrixQubits) throw DimensionGuard("dense matrix operations are limited to " + std::to_string(kMaxMatrixQubits) + " qubits");
}
inline void require_state_qubits(std::size_t n) {
  if (n > kMaxStateQubits) throw DimensionGuard("dense state operations are limited to " + std::to_string(kMaxStateQubits) + " qubits");
}

/// Basis index b has qubit j in state |bit j of b>.
inline std::size_t dimension(std::size_t n) { return std::size_t{1} << n; }

struct DenseOperator {
  std::size_t n = 0;
  Matrix m;

  std::size_t dim() const { return static_cast<std::size_t>(m.rows()); }
  double unitarity_residual() const { return (m.adjoint() * m - Matrix::Identity(m.rows(), m.cols())).norm(); }
  bool is_unitary(double tol = 1e-10) const { return unitarity_residual() <= tol; }
  bool is_hermitian(double tol = 1e-10) const { return (m - m.adjoint()).norm() <= tol; }
};

struct DenseState {
  std::size_t n = 0;
  Vector v;

  DenseState() = default;
  DenseState(std::size_t n_, Vector v_) : n(n_), v(std::move(v_)) {
    if (static_cast<std::size_t>(v.size()) != dimension(n)) throw std::invalid_argument("state vector has wrong dimension");
    if (std::abs(v.norm() - 1.0) > 1e-12) throw std::invalid_argument("state vector is not normalised");
  }
};

namespace detail {

inline Complex i_pow(unsigned k) {
  switch (k & 3u) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

}  // namespace detail

/// out = P in, in O(2^n).
inline void apply_pauli(const PauliOperator& p, const Complex* in, Complex* out) {
  const std::size_t n = p.n();
  require_state_qubits(n);
  const std::uint64_t xm = n ? p.x().word(0) : 0;
  const std::uint64_t zm = n ? p.z().word(0) : 0;
  const Complex base = detail::i_pow(p.phase() + static_cast<unsigned>(std::popcount(xm & zm)));
  const std::size_t dim = dimension(n);
  for (std::size_t b = 0; b < dim; ++b) {
    const bool odd = std::popcount(static_cast<std::uint64_t>(b) & zm) & 1;
    out[b ^ xm] = odd ? -base * in[b] : base * in[b];
  }
}

inline Vector apply_pauli(const PauliOperator& p, const Vector& v) {
  Vector out(v.size());
  apply_pauli(p, v.data(), out.data());
  return out;
}

/// v <- (I + s g)/2 v for s = (-1)^bit.
inline void apply_half_projector(const PauliOperator& g, bool bit, Vector& v) {
  Vector gv = apply_pauli(g, v);
  if (bit) {
    v = 0.5 * (v - gv);
  } else {
    v = 0.5 * (v + gv);
  }
}

/// Applies prod_j (I + (-1)^{m_j} g_j)/2 for the listed generators.
inline void apply_projector(const std::vector<PauliOperator>& gens, const BitVector& m, Vector& v) {
  for (std::size_t j = 0; j < gens.size(); ++j) apply_half_projector(gens[j], m.get(j), v);
}

inline void apply_projector(const StabiliserGroup& g, const BitVector& m, Vector& v) { apply_projector(g.generators(), m, v); }

/// Projector onto the +1 codespace of the signed group.
inline void apply_codespace_projector(const StabiliserGroup& g, Vector& v) { apply_projector(g, BitVector(g.rank()), v); }

inline DenseOperator pauli_matrix(const PauliOperator& p) {
  require_matrix_qubits(p.n());
  const std::size_t dim = dimension(p.n());
  DenseOperator op{p.n(), Matrix::Zero(dim, dim)};
  Vector e = Vector::Zero(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    e.setZero();
    e[c] = 1.0;
    op.m.col(c) = apply_pauli(p, e);
  }
  return op;
}

inline DenseOperator projector(const std::vector<PauliOperator>& gens, std::size_t n, const BitVector& m) {
  require_matrix_qubits(n);
  if (m.size() != gens.size()) throw std::invalid_argument("projector: outcome vector length must equal the number of generators");
  const std::size_t dim = dimension(n);
  DenseOperator op{n, Matrix::Zero(dim, dim)};
  Vector e(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    e.setZero();
    e[c] = 1.0;
    apply_projector(gens, m, e);
    op.m.col(c) = e;
  }
  return op;
}

inline DenseOperator projector(const StabiliserGroup& g, const BitVector& m) { return projector(g.generators(), g.n(), m); }

/// Matrix-free linear map with its adjoint.
struct LinearMap {
  std::size_t dim = 0;
  std::function<Vector(const Vector&)> apply;
  std::function<Vector(const Vector&)> adjoint;
};

inline Matrix materialise(const LinearMap& map) {
  Matrix m(map.dim, map.dim);
  Vector e = Vector::Zero(map.dim);
  for (std::size_t c = 0; c < map.dim; ++c) {
    e.setZero();
    e[c] = 1.0;
    m.col(c) = map.apply(e);
  }
  return m;
}

/// Operator norm of `map`: exact Frobenius bound for small dimensions,
/// power iteration on A^dagger A otherwise.
inline double operator_norm(const LinearMap& map, std::uint64_t seed = 0x5eed) {
  if (map.dim <= kExactNormDim) return materialise(map).norm();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  Vector v(map.dim);
  for (auto& c : v) c = Complex(gauss(rng), gauss(rng));
  v.normalize();
  double est = 0.0;
  for (int it = 0; it < 60; ++it) {
    Vector w = map.adjoint(map.apply(v));
    const double nw = w.norm();
    if (nw == 0.0) return std::sqrt(est);
    const double next = nw;
    v = w / nw;
    if (it > 5 && std::abs(next - est) <= 1e-3 * next) {
      est = next;
      break;
    }
    est = next;
  }
  return std::sqrt(est);
}

/// Random unit vector in the +1 codespace of g.
inline Vector random_codespace_vector(const StabiliserGroup& g, std::mt19937_64& rng) {
  require_state_qubits(g.n());
  std::normal_distribution<double> gauss;
  const std::size_t dim = dimension(g.n());
  for (int attempt = 0; attempt < 64; ++attempt) {
    Vector v(dim);
    for (auto& c : v) c = Complex(gauss(rng), gauss(rng));
    apply_codespace_projector(g, v);
    const double nv = v.norm();
    if (nv > 1e-6) return v / nv;
  }
  throw std::runtime_error("random_codespace_vector: projection repeatedly vanished");
}

inline Complex expectation(const PauliOperator& p, const Vector& v) { return v.dot(apply_pauli(p, v)); }

/// Signed a_i as elements of group_a, b_i as stored.
inline std::vector<PauliOperator> signed_basis_a(const ConjugatePair& pair) {
  std::vector<PauliOperator> out;
  for (const auto& a : pair.basis_a) out.push_back(stabiliser_with_sign(pair.group_a, a));
  return out;
}

inline std::vector<BitVector> all_outcomes(std::size_t n_m) {
  if (n_m > 30) throw DimensionGuard("too many measured operators to enumerate outcomes");
  std::vector<BitVector> out;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n_m); ++v) out.push_back(BitVector::from_uint(n_m, v));
  return out;
}

struct IdentityReport {
  bool pass = true;
  double tol = 0.0;
  double max_residual_b = 0.0;
  double max_residual_a = 0.0;
  std::size_t outcome_pairs = 0;
};

/// ||P_b P_a P_b - 2^{-n_m} P_b|| and the mirrored identity over every pair of
/// outcome vectors, for given (not necessarily conjugate) bases.
inline IdentityReport verify_basis_identities(const std::vector<PauliOperator>& basis_a, const std::vector<PauliOperator>& basis_b,
                                              std::size_t n, double tol, unsigned threads = 1) {
  require_matrix_qubits(n);
  const std::size_t nm = basis_a.size();
  const double c = std::ldexp(1.0, -static_cast<int>(nm));
  const auto outs = all_outcomes(nm);
  const std::size_t dim = dimension(n);
  auto sandwich = [&](const std::vector<PauliOperator>& outer, const BitVector& mo, const std::vector<PauliOperator>& inner,
                      const BitVector& mi) {
    LinearMap r;
    r.dim = dim;
    r.apply = [&, mo, mi](const Vector& v) {
      Vector w = v;
      apply_projector(outer, mo, w);
      Vector base = w;
      apply_projector(inner, mi, w);
      apply_projector(outer, mo, w);
      return Vector(w - c * base);
    };
    r.adjoint = r.apply;
    return operator_norm(r);
  };
  const std::size_t total = outs.size() * outs.size();
  auto res = parallel_map(total, threads, [&](std::size_t idx) {
    const auto& ma = outs[idx / outs.size()];
    const auto& mb = outs[idx % outs.size()];
    return std::pair<double, double>(sandwich(basis_b, mb, basis_a, ma), sandwich(basis_a, ma, basis_b, mb));
  });
  IdentityReport rep;
  rep.tol = tol;
  rep.outcome_pairs = total;
  for (const auto& [rb, ra] : res) {
    rep.max_residual_b = std::max(rep.max_residual_b, rb);
    rep.max_residual_a = std::max(rep.max_residual_a, ra);
  }
  rep.pass = rep.max_residual_a <= tol && rep.max_residual_b <= tol;
  return rep;
}

inline IdentityReport verify_pair_identities(const ConjugatePair& pair, double tol, unsigned threads = 1) {
  return verify_basis_identities(pair.basis_a, pair.basis_b, pair.n(), tol, threads);
}

/// Same identities for two raw groups using greedy quotient bases; used to
/// show the identities fail for non-conjugate pairs.
inline IdentityReport verify_group_identities(const StabiliserGroup& a, const StabiliserGroup& b, double tol) {
  StabiliserGroup s = group_intersection(a, b);
  return verify_basis_identities(detail::quotient_basis(a, s), detail::quotient_basis(b, s), a.n(), tol);
}

struct ProbabilityReport {
  bool pass = true;
  double expected = 0.0;
  double max_deviation = 0.0;
  std::vector<double> probabilities;
};

inline double codespace_residual(const StabiliserGroup& g, const Vector& v) {
  Vector w = v;
  apply_codespace_projector(g, w);
  return (w - v).norm();
}

inline ProbabilityReport uniform_probability_check(const ConjugatePair& pair, const Vector& state, double tol) {
  require_state_qubits(pair.n());
  if (codespace_residual(pair.group_a, state) > tol) throw std::invalid_argument("uniform_probability_check: state is not in the codespace");
  ProbabilityReport rep;
  rep.expected = std::ldexp(1.0, -static_cast<int>(pair.n_m()));
  for (const auto& m : all_outcomes(pair.n_m())) {
    Vector w = state;
    apply_projector(pair.basis_b, m, w);
    const double p = w.squaredNorm();
    rep.probabilities.push_back(p);
    rep.max_deviation = std::max(rep.max_deviation, std::abs(p - rep.expected));
  }
  rep.pass = rep.max_deviation <= tol;
  return rep;
}

/// 2^{n_m/2} P_bbar(m) P_A as a full-space matrix.
inline DenseOperator transition_K(const ConjugatePair& pair, const BitVector& m) {
  require_matrix_qubits(pair.n());
  const double c = std::ldexp(1.0, static_cast<int>(pair.n_m()));
  const double s = std::sqrt(c);
  LinearMap k;
  k.dim = dimension(pair.n());
  k.apply = [&](const Vector& v) {
    Vector w = v;
    apply_codespace_projector(pair.group_a, w);
    apply_projector(pair.basis_b, m, w);
    return Vector(s * w);
  };
  return {pair.n(), materialise(k)};
}

/// V = prod_i (a_i + b_i)/sqrt(2) applied to a vector.
inline Vector apply_transition_V(const ConjugatePair& pair, const Vector& v) {
  const auto sa = signed_basis_a(pair);
  Vector w = v;
  for (std::size_t i = 0; i < pair.n_m(); ++i) w = (apply_pauli(sa[i], w) + apply_pauli(pair.basis_b[i], w)) / std::sqrt(2.0);
  return w;
}

inline DenseOperator transition_V(const ConjugatePair& pair) {
  require_matrix_qubits(pair.n());
  LinearMap v;
  v.dim = dimension(pair.n());
  v.apply = [&](const Vector& x) { return apply_transition_V(pair, x); };
  return {pair.n(), materialise(v)};
}

struct TransitionIdentityReport {
  bool pass = true;
  double tol = 0.0;
  double unitary_tol = 0.0;
  double isometry = 0.0;       // max_m ||K^dag K - P_A||
  double round_trip = 0.0;     // max_m ||K_BA K_AB - P_A||
  double v_implements_k = 0.0; // ||V P_A - 2^{n_m/2} P_bbar(0) P_A||
  double v_unitarity = 0.0;    // ||V^dag V - I||
  bool factors_commute = true;
};

inline TransitionIdentityReport verify_transition_identities(const ConjugatePair& pair, double tol, double unitary_tol, unsigned threads = 1) {
  require_matrix_qubits(pair.n());
  const std::size_t nm = pair.n_m();
  const double c = std::ldexp(1.0, static_cast<int>(nm));
  const double s = std::sqrt(c);
  const std::size_t dim = dimension(pair.n());
  const auto sa = signed_basis_a(pair);
  const BitVector zero_a(nm);
  const auto& gb = pair.intersection.generators();
  const BitVector zero_s(gb.size());
  auto proj_a = [&](Vector& w) { apply_codespace_projector(pair.group_a, w); };

  TransitionIdentityReport rep;
  rep.tol = tol;
  rep.unitary_tol = unitary_tol;
  const auto outs = all_outcomes(nm);
  auto res = parallel_map(outs.size(), threads, [&](std::size_t idx) {
    const BitVector m = outs[idx];
    LinearMap iso;
    iso.dim = dim;
    iso.apply = [&, m](const Vector& v) {
      Vector w = v;
      proj_a(w);
      Vector base = w;
      apply_projector(pair.basis_b, m, w);
      proj_a(w);
      return Vector(c * w - base);
    };
    iso.adjoint = iso.apply;
    LinearMap rt;
    rt.dim = dim;
    // K_BA K_AB = c P_abar(0) P_S P_bbar(m) P_bbar(m) P_A; P_bbar idempotent.
    rt.apply = [&, m](const Vector& v) {
      Vector w = v;
      proj_a(w);
      Vector base = w;
      apply_projector(pair.basis_b, m, w);
      apply_projector(gb, zero_s, w);
      apply_projector(sa, zero_a, w);
      return Vector(c * w - base);
    };
    rt.adjoint = [&, m](const Vector& v) {
      Vector w = v;
      Vector base = v;
      proj_a(base);
      apply_projector(sa, zero_a, w);
      apply_projector(gb, zero_s, w);
      apply_projector(pair.basis_b, m, w);
      proj_a(w);
      return Vector(c * w - base);
    };
    return std::pair<double, double>(operator_norm(iso), operator_norm(rt));
  });
  for (const auto& [i, r] : res) {
    rep.isometry = std::max(rep.isometry, i);
    rep.round_trip = std::max(rep.round_trip, r);
  }

  LinearMap vk;
  vk.dim = dim;
  vk.apply = [&](const Vector& v) {
    Vector w = v;
    proj_a(w);
    Vector k = w;
    apply_projector(pair.basis_b, zero_a, k);
    return Vector(apply_transition_V(pair, w) - s * k);
  };
  vk.adjoint = [&](const Vector& v) {
    // V is Hermitian: its factors are Hermitian and commute.
    Vector k = v;
    apply_projector(pair.basis_b, zero_a, k);
    Vector w = apply_transition_V(pair, v) - s * k;
    proj_a(w);
    return w;
  };
  rep.v_implements_k = operator_norm(vk);

  LinearMap vu;
  vu.dim = dim;
  vu.apply = [&](const Vector& v) { return Vector(apply_transition_V(pair, apply_transition_V(pair, v)) - v); };
  vu.adjoint = vu.apply;
  rep.v_unitarity = operator_norm(vu);

  for (std::size_t i = 0; i < nm; ++i) {
    for (std::size_t j = 0; j < nm; ++j) {
      if (i == j) continue;
      if (commutes(sa[i], sa[j]) || commutes(sa[i], pair.basis_b[j]) || commutes(pair.basis_b[i], pair.basis_b[j])) rep.factors_commute = false;
    }
  }
  rep.pass = rep.isometry <= tol && rep.round_trip <= tol && rep.v_implements_k <= tol && rep.v_unitarity <= unitary_tol && rep.factors_commute;
  return rep;
}

struct ExpectationReport {
  bool pass = true;
  double before = 0.0;
  double max_deviation = 0.0;
  std::vector<double> after;
};

/// <Q> before the transition against <Q'> after it, for every outcome vector,
/// where Q' is the rewritten representative.
inline ExpectationReport logical_expectation_check(const ConjugatePair& pair, const Vector& state, const PauliOperator& q, double tol) {
  require_state_qubits(pair.n());
  if (!q.is_hermitian()) throw std::invalid_argument("logical_expectation_check: logical must be Hermitian");
  for (const auto& g : pair.group_a.generators()) {
    if (commutes(g, q)) throw std::invalid_argument("logical_expectation_check: " + format_pauli(q) + " is not in the normaliser");
  }
  if (codespace_residual(pair.group_a, state) > tol) throw std::invalid_argument("logical_expectation_check: state is not in the codespace");
  LogicalBasis lb;
  lb.pairs.emplace_back(q, q);
  const PauliOperator qp = rewrite_logicals(lb, pair).x(0);
  ExpectationReport rep;
  rep.before = expectation(q, state).real();
  for (const auto& m : all_outcomes(pair.n_m())) {
    Vector w = state;
    apply_projector(pair.basis_b, m, w);
    w.normalize();
    const double after = expectation(qp, w).real();
    rep.after.push_back(after);
    rep.max_deviation = std::max(rep.max_deviation, std::abs(after - rep.before));
  }
  rep.pass = rep.max_deviation <= tol;
  return rep;
}

/// Embeds a 2^|qubits| local operator; qubits[j] carries bit j of the local index.
inline DenseOperator embed(const Matrix& local, const std::vector<std::size_t>& qubits, std::size_t n) {
  require_matrix_qubits(n);
  const std::size_t dim = dimension(n);
  const std::size_t ld = dimension(qubits.size());
  if (static_cast<std::size_t>(local.rows()) != ld || static_cast<std::size_t>(local.cols()) != ld) throw std::invalid_argument("embed: local operator has wrong size");
  std::uint64_t mask = 0;
  for (auto q : qubits) mask |= std::uint64_t{1} << q;
  auto local_index = [&](std::size_t b) {
    std::size_t li = 0;
    for (std::size_t j = 0; j < qubits.size(); ++j) li |= ((b >> qubits[j]) & 1u) << j;
    return li;
  };
  auto scatter = [&](std::size_t rest, std::size_t li) {
    std::size_t b = rest;
    for (std::size_t j = 0; j < qubits.size(); ++j) b |= ((li >> j) & 1u) << qubits[j];
    return b;
  };
  DenseOperator op{n, Matrix::Zero(dim, dim)};
  for (std::size_t col = 0; col < dim; ++col) {
    const std::size_t rest = col & ~mask;
    const std::size_t lc = local_index(col);
    for (std::size_t lr = 0; lr < ld; ++lr) op.m(scatter(rest, lr), col) = local(lr, lc);
  }
  return op;
}

}  // namespace floquetkit
