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
#include <cmath>
#include <complex>
#include <limits>
#include <algorithm>
#include <cstddef>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "floquetkit/conjugacy.hpp"
#include "floquetkit/dense.hpp"
#include "floquetkit/floquet.hpp"
#include "floquetkit/gf2.hpp"
#include "floquetkit/locality.hpp"

namespace floquetkit {

/// One factor exp(i phi b_s) with b_s the product of rebased b's in `subset`.
struct UnitaryTerm {
  BitVector subset;
  double phi = 0.0;
  /// phi is a multiple of pi/2, so the factor is a Pauli up to phase.
  bool transversal = false;
};

struct LogicalGate {
  std::string name;
  std::vector<std::size_t> qubits;
};

struct LogicalPart {
  enum class Kind { identity, clifford, dense };
  Kind kind = Kind::identity;
  std::vector<LogicalGate> gates;
  /// For Kind::dense: the operator's action on the codespace (U_A P_A).
  std::optional<DenseOperator> matrix;
};

struct GeneralisedUnitarySpec {
  ConjugatePair pair;
  std::vector<UnitaryTerm> terms;
  LogicalPart logical;
};

inline constexpr double kTransversalSlack = 1e-9;

inline bool is_transversal_angle(double phi) {
  const double q = phi / (std::numbers::pi / 2);
  return std::abs(q - std::round(q)) * (std::numbers::pi / 2) <= kTransversalSlack;
}

inline PauliOperator term_operator(const ConjugatePair& pair, const UnitaryTerm& t) {
  if (t.subset.none()) throw std::invalid_argument("unitary term subsets must be nonzero");
  return rebased_products(pair, t.subset);
}

/// Full-space matrix of a logical gate built from logical representatives.
inline Matrix logical_gate_matrix(const LogicalBasis& lb, const LogicalGate& gate, std::size_t n) {
  const std::size_t dim = dimension(n);
  const Matrix id = Matrix::Identity(dim, dim);
  auto need = [&](std::size_t count) {
    if (gate.qubits.size() != count) throw std::invalid_argument("gate " + gate.name + " expects " + std::to_string(count) + " logical qubit(s)");
    for (auto q : gate.qubits) {
      if (q >= lb.k()) throw std::invalid_argument("gate " + gate.name + " addresses logical qubit " + std::to_string(q) + " but k = " + std::to_string(lb.k()));
    }
    if (count == 2 && gate.qubits[0] == gate.qubits[1]) throw std::invalid_argument("gate " + gate.name + " needs distinct qubits");
  };
  auto X = [&](std::size_t q) { return pauli_matrix(lb.x(q)).m; };
  auto Z = [&](std::size_t q) { return pauli_matrix(lb.z(q)).m; };
  const Complex i(0, 1);
  const std::string& g = gate.name;
  if (g == "I") {
    need(1);
    return id;
  }
  if (g == "X") {
    need(1);
    return X(gate.qubits[0]);
  }
  if (g == "Z") {
    need(1);
    return Z(gate.qubits[0]);
  }
  if (g == "Y") {
    need(1);
    return i * X(gate.qubits[0]) * Z(gate.qubits[0]);
  }
  if (g == "H") {
    need(1);
    return (X(gate.qubits[0]) + Z(gate.qubits[0])) / std::sqrt(2.0);
  }
  if (g == "S" || g == "SDG") {
    need(1);
    const Complex ph = g == "S" ? i : -i;
    const Matrix z = Z(gate.qubits[0]);
    return 0.5 * (id + z) + ph * 0.5 * (id - z);
  }
  if (g == "CNOT" || g == "CX" || g == "CZ") {
    need(2);
    const Matrix zc = Z(gate.qubits[0]);
    const Matrix t = g == "CZ" ? Z(gate.qubits[1]) : X(gate.qubits[1]);
    return 0.5 * (id + zc) + 0.5 * (id - zc) * t;
  }
  throw std::invalid_argument("unknown logical gate '" + g + "'");
}

/// Materialised logical part. Identity and Clifford parts are unitary on the
/// whole space; dense parts are returned as given.
inline DenseOperator logical_unitary(const GeneralisedUnitarySpec& spec) {
  const std::size_t n = spec.pair.n();
  require_matrix_qubits(n);
  const std::size_t dim = dimension(n);
  switch (spec.logical.kind) {
    case LogicalPart::Kind::identity: return {n, Matrix::Identity(dim, dim)};
    case LogicalPart::Kind::clifford: {
      const LogicalBasis lb = normaliser_logicals(spec.pair.group_a);
      Matrix u = Matrix::Identity(dim, dim);
      for (const auto& gate : spec.logical.gates) u = logical_gate_matrix(lb, gate, n) * u;
      return {n, u};
    }
    case LogicalPart::Kind::dense:
      if (!spec.logical.matrix || spec.logical.matrix->dim() != dim) throw std::invalid_argument("dense logical part has wrong dimension");
      return *spec.logical.matrix;
  }
  throw std::logic_error("unreachable");
}

/// Left-multiplies every column of m by prod_t (cos phi_t I + i sin phi_t b_t).
inline void apply_exponential(const ConjugatePair& pair, const std::vector<UnitaryTerm>& terms, Matrix& m) {
  const Complex i(0, 1);
  for (const auto& t : terms) {
    const PauliOperator b = term_operator(pair, t);
    const double c = std::cos(t.phi), s = std::sin(t.phi);
    for (Eigen::Index col = 0; col < m.cols(); ++col) {
      Vector v = m.col(col);
      m.col(col) = c * v + i * s * apply_pauli(b, v);
    }
  }
}

inline DenseOperator build_exponential(const GeneralisedUnitarySpec& spec) {
  require_matrix_qubits(spec.pair.n());
  // The termwise product is only the exponential when all terms commute.
  for (std::size_t a = 0; a < spec.terms.size(); ++a) {
    for (std::size_t b = a + 1; b < spec.terms.size(); ++b) {
      if (commutes(term_operator(spec.pair, spec.terms[a]), term_operator(spec.pair, spec.terms[b]))) {
        throw std::logic_error("build_exponential: terms do not commute");
      }
    }
  }
  DenseOperator u = logical_unitary(spec);
  apply_exponential(spec.pair, spec.terms, u.m);
  return u;
}

class NonUnitary : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ConditionReport {
  double tol = 0.0;
  bool detectability = false;
  bool self_correction = false;
  bool isometry = false;
  bool equivalence = false;
  bool uniform_probability = false;
  double detectability_residual = 0.0;
  double self_correction_residual = 0.0;
  double isometry_residual = 0.0;
  double equivalence_residual = 0.0;
  double uniform_probability_residual = 0.0;
  /// alpha[i][m]: phase of a_i on outcome block m.
  std::vector<std::vector<double>> alpha;
  /// phi[m] with phi[0] = 0.
  std::vector<double> phi;
  /// Reference block Z(0) = P_abar P_bbar(0) U P_A.
  Matrix reference_block;

  bool pass() const { return detectability && self_correction && isometry && equivalence && uniform_probability; }
};

inline ConditionReport check_conditions(const ConjugatePair& pair, const DenseOperator& u, double tol) {
  const std::size_t n = pair.n();
  require_matrix_qubits(n);
  const std::size_t dim = dimension(n);
  if (u.dim() != dim) throw std::invalid_argument("check_conditions: operator dimension differs from the pair");
  if (u.unitarity_residual() > tol) throw NonUnitary("check_conditions: operator is not unitary");
  const std::size_t nm = pair.n_m();
  const double c = std::ldexp(1.0, -static_cast<int>(nm));
  const Matrix pa = projector(pair.group_a, BitVector(pair.group_a.rank())).m;
  const Matrix ps = projector(pair.intersection, BitVector(pair.intersection.rank())).m;
  const auto sa = signed_basis_a(pair);
  const Matrix pabar = projector(sa, n, BitVector(nm)).m;
  const Matrix upa = u.m * pa;

  // Orthonormal basis of the codespace, for probability ranges.
  Eigen::SelfAdjointEigenSolver<Matrix> es(pa);
  std::vector<Eigen::Index> cols;
  for (Eigen::Index j = 0; j < es.eigenvalues().size(); ++j) {
    if (es.eigenvalues()[j] > 0.5) cols.push_back(j);
  }
  Matrix qa(dim, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) qa.col(static_cast<Eigen::Index>(j)) = es.eigenvectors().col(cols[j]);

  ConditionReport rep;
  rep.tol = tol;
  rep.detectability_residual = (ps * upa - upa).norm();
  rep.alpha.assign(nm, {});
  std::vector<Matrix> a_mats;
  for (const auto& a : sa) a_mats.push_back(pauli_matrix(a).m);

  Matrix z0;
  double z0n = 0.0;
  bool phase_defined = true;
  for (const auto& m : all_outcomes(nm)) {
    const Matrix pm = projector(pair.basis_b, n, m).m;
    const Matrix y = pm * upa;
    for (std::size_t i = 0; i < nm; ++i) {
      const Matrix x = pm * a_mats[i] * upa;
      const Complex overlap = (y.adjoint() * x).trace();
      const double theta = std::abs(overlap) > 0 ? std::arg(overlap) : 0.0;
      rep.alpha[i].push_back(theta);
      rep.self_correction_residual = std::max(rep.self_correction_residual, (x - std::polar(1.0, theta) * y).norm());
    }
    rep.isometry_residual = std::max(rep.isometry_residual, (y.adjoint() * y - c * pa).norm());
    if (qa.cols() > 0) {
      const Matrix g = (y * qa).adjoint() * (y * qa);
      Eigen::SelfAdjointEigenSolver<Matrix> pe(g);
      const auto& ev = pe.eigenvalues();
      rep.uniform_probability_residual =
          std::max({rep.uniform_probability_residual, std::abs(ev.minCoeff() - c), std::abs(ev.maxCoeff() - c)});
    }
    const Matrix zm = pabar * y;
    if (m.none()) {
      z0 = zm;
      z0n = zm.squaredNorm();
      if (z0n <= 0.0) phase_defined = false;
      rep.phi.push_back(0.0);
      continue;
    }
    if (!phase_defined) {
      rep.equivalence_residual = std::max(rep.equivalence_residual, zm.norm());
      rep.phi.push_back(0.0);
      continue;
    }
    const Complex ratio = (z0.adjoint() * zm).trace() / z0n;
    rep.phi.push_back(std::arg(ratio));
    const double resid = (zm - ratio * z0).norm() + std::abs(std::abs(ratio) - 1.0) * std::sqrt(z0n);
    rep.equivalence_residual = std::max(rep.equivalence_residual, resid);
  }
  if (!phase_defined) rep.equivalence_residual = std::max(rep.equivalence_residual, 1.0);
  rep.reference_block = z0;
  rep.detectability = rep.detectability_residual <= tol;
  rep.self_correction = rep.self_correction_residual <= tol;
  rep.isometry = rep.isometry_residual <= tol;
  rep.equivalence = rep.equivalence_residual <= tol;
  rep.uniform_probability = rep.uniform_probability_residual <= tol;
  return rep;
}

class ConditionsFailed : public std::runtime_error {
 public:
  explicit ConditionsFailed(ConditionReport r) : std::runtime_error("generalised unitary conditions failed"), report_(std::move(r)) {}
  const ConditionReport& report() const { return report_; }

 private:
  ConditionReport report_;
};

class ReconstructionFailure : public std::runtime_error {
 public:
  ReconstructionFailure(double residual, std::vector<double> phi)
      : std::runtime_error("canonical reconstruction residual " + std::to_string(residual) + " exceeds tolerance"),
        residual_(residual),
        phi_(std::move(phi)) {}
  double residual() const { return residual_; }
  const std::vector<double>& phi() const { return phi_; }

 private:
  double residual_;
  std::vector<double> phi_;
};

/// Action of a code-preserving operator on the logical Paulis, when Clifford.
struct LogicalCliffordAction {
  std::size_t k = 0;
  std::vector<BitVector> symplectic;
  std::vector<int> phases;
};

/// Wraps into (-pi, pi].
inline double wrap_angle(double a) {
  const double two_pi = 2 * std::numbers::pi;
  a = std::fmod(a, two_pi);
  if (a <= -std::numbers::pi) a += two_pi;
  if (a > std::numbers::pi) a -= two_pi;
  return a;
}

/// Detects whether w = U_A P_A maps every logical Pauli to +-(logical Pauli).
inline std::optional<LogicalCliffordAction> detect_logical_clifford(const StabiliserGroup& group_a, const Matrix& w, double tol) {
  const LogicalBasis lb = normaliser_logicals(group_a);
  const std::size_t k = lb.k();
  if (k > 4) return std::nullopt;
  const std::size_t n = group_a.n();
  const Matrix pa = projector(group_a, BitVector(group_a.rank())).m;
  const double code_dim = std::ldexp(1.0, static_cast<int>(k));
  const auto basis = lb.flat();
  // Candidate images: Hermitian products of logical basis elements.
  std::vector<std::pair<BitVector, Matrix>> candidates;
  for (std::uint64_t v = 1; v < (std::uint64_t{1} << (2 * k)); ++v) {
    const BitVector bits = BitVector::from_uint(2 * k, v);
    PauliOperator p = PauliOperator::identity(n);
    for (std::size_t i = 0; i < 2 * k; ++i) {
      if (bits.get(i)) p = multiply(p, basis[i]);
    }
    p.set_phase(0);
    candidates.emplace_back(bits, pa * pauli_matrix(p).m * pa);
  }
  LogicalCliffordAction act;
  act.k = k;
  act.symplectic.assign(2 * k, BitVector(2 * k));
  act.phases.assign(2 * k, 1);
  for (std::size_t j = 0; j < 2 * k; ++j) {
    const Matrix image = w * pauli_matrix(basis[j]).m * w.adjoint();
    bool found = false;
    for (const auto& [bits, mat] : candidates) {
      const Complex ov = (mat.adjoint() * image).trace() / code_dim;
      if (std::abs(std::abs(ov) - 1.0) <= tol && std::abs(ov.imag()) <= tol) {
        if ((image - ov.real() * mat).norm() > tol * code_dim) continue;
        for (std::size_t i = 0; i < 2 * k; ++i) act.symplectic[i].set(j, bits.get(i));
        act.phases[j] = ov.real() > 0 ? 1 : -1;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return act;
}

struct Decomposition {
  GeneralisedUnitarySpec spec;
  ConditionReport conditions;
  /// Unwrapped phase function phi(m), gauge phi(0) = 0.
  std::vector<double> phi;
  /// Walsh coefficient of the empty subset, folded into the logical part.
  double global_phase = 0.0;
  double residual = 0.0;
  std::optional<LogicalCliffordAction> clifford;
};

/// U P_A = exp(i sum_s alpha_s b_s) U_A P_A with alpha from the Walsh transform.
inline Decomposition decompose_canonical(const ConjugatePair& pair, const DenseOperator& u, double tol) {
  Decomposition out;
  out.conditions = check_conditions(pair, u, tol);
  if (!out.conditions.pass()) throw ConditionsFailed(out.conditions);
  const std::size_t nm = pair.n_m();
  const std::size_t count = std::size_t{1} << nm;
  const double scale = std::ldexp(1.0, static_cast<int>(nm));
  for (double p : out.conditions.phi) out.phi.push_back(wrap_angle(p));
  // Any 2 pi lift of phi gives the same exponential, so no branch search is needed.
  std::vector<double> alpha(count, 0.0);
  for (std::size_t s = 0; s < count; ++s) {
    double acc = 0.0;
    for (std::size_t m = 0; m < count; ++m) acc += (std::popcount(static_cast<std::uint64_t>(s & m)) & 1) ? -out.phi[m] : out.phi[m];
    alpha[s] = acc / scale;
  }
  double global = alpha[0];
  GeneralisedUnitarySpec spec;
  spec.pair = pair;
  for (std::size_t s = 1; s < count; ++s) {
    // exp(i pi b) = -I, so reduce into (-pi/2, pi/2] and move the sign out.
    double a = alpha[s];
    const double turns = std::round(a / std::numbers::pi);
    a -= turns * std::numbers::pi;
    if (a <= -std::numbers::pi / 2) {
      a += std::numbers::pi;
      global -= std::numbers::pi;
    }
    global += turns * std::numbers::pi;
    if (std::abs(a) <= kTransversalSlack) continue;
    UnitaryTerm t;
    t.subset = BitVector::from_uint(nm, s);
    t.phi = a;
    t.transversal = is_transversal_angle(a);
    spec.terms.push_back(t);
  }
  out.global_phase = wrap_angle(global);
  const Matrix pa = projector(pair.group_a, BitVector(pair.group_a.rank())).m;
  Matrix ua = std::polar(1.0, global) * scale * out.conditions.reference_block;
  spec.logical.kind = LogicalPart::Kind::dense;
  spec.logical.matrix = DenseOperator{pair.n(), ua};
  Matrix rebuilt = ua;
  apply_exponential(pair, spec.terms, rebuilt);
  out.residual = (u.m * pa - rebuilt).norm();
  if (out.residual > tol) throw ReconstructionFailure(out.residual, out.phi);
  out.clifford = detect_logical_clifford(pair.group_a, ua, 1e-8);
  out.spec = std::move(spec);
  return out;
}

/// Phase function sum_t phi_t chi_t(m) of a list of terms, per outcome block.
inline std::vector<double> phase_function(const std::vector<UnitaryTerm>& terms, std::size_t nm) {
  std::vector<double> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << nm); ++m) {
    double acc = 0.0;
    for (const auto& t : terms) acc += (std::popcount(t.subset.to_uint() & m) & 1) ? -t.phi : t.phi;
    out.push_back(acc);
  }
  return out;
}

/// Largest deviation between two phase functions modulo 2 pi and a constant.
inline double phase_function_distance(const std::vector<double>& p, const std::vector<double>& q) {
  double worst = 0.0;
  const double offset = p[0] - q[0];
  for (std::size_t m = 0; m < p.size(); ++m) worst = std::max(worst, std::abs(wrap_angle(p[m] - q[m] - offset)));
  return worst;
}

namespace detail {

inline void require_abar_element(const ConjugatePair& pair, const PauliOperator& a) {
  gf2::EchelonBasis span(2 * pair.n());
  for (const auto& x : pair.basis_a) span.insert(x.symplectic());
  if (!span.in_span(a.symplectic())) throw std::invalid_argument("correlation: " + format_pauli(a) + " is not in the group generated by basis_a");
}

inline std::vector<std::size_t> anticommuting_terms(const GeneralisedUnitarySpec& spec, const PauliOperator& q) {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < spec.terms.size(); ++t) {
    if (commutes(q, term_operator(spec.pair, spec.terms[t]))) out.push_back(t);
  }
  return out;
}

inline void require_independent_terms(const GeneralisedUnitarySpec& spec, const std::vector<std::size_t>& ts) {
  gf2::EchelonBasis b(spec.pair.n_m());
  for (auto t : ts) {
    if (!b.insert(spec.terms[t].subset)) {
      throw std::invalid_argument("correlation_closed_form: anticommuting term subsets are linearly dependent; the closed form does not apply");
    }
  }
}

}  // namespace detail

inline double correlation_closed_form(const GeneralisedUnitarySpec& spec, const PauliOperator& a, const PauliOperator& a_prime) {
  detail::require_abar_element(spec.pair, a);
  detail::require_abar_element(spec.pair, a_prime);
  const auto ka = detail::anticommuting_terms(spec, a);
  const auto kb = detail::anticommuting_terms(spec, a_prime);
  const auto kab = detail::anticommuting_terms(spec, multiply(a, a_prime));
  detail::require_independent_terms(spec, ka);
  detail::require_independent_terms(spec, kb);
  detail::require_independent_terms(spec, kab);
  double outer = 1.0;
  for (auto t : kab) outer *= std::cos(2 * spec.terms[t].phi);
  double inner = 1.0;
  for (auto t : ka) {
    if (std::find(kb.begin(), kb.end(), t) != kb.end()) {
      const double f = std::cos(2 * spec.terms[t].phi);
      inner *= f * f;
    }
  }
  return std::abs(outer) * std::abs(1.0 - inner);
}

/// |<a a'> - <a><a'>| on exp(i sum phi b) |state>.
inline double correlation_dense(const GeneralisedUnitarySpec& spec, const PauliOperator& a, const PauliOperator& a_prime, const Vector& state) {
  require_matrix_qubits(spec.pair.n());
  Matrix v = state;
  apply_exponential(spec.pair, spec.terms, v);
  const Vector w = v.col(0);
  const Complex ea = expectation(a, w);
  const Complex eb = expectation(a_prime, w);
  const Complex eab = expectation(multiply(a, a_prime), w);
  return std::abs(eab - ea * eb);
}

/// Local observable: a 2^|qubits| matrix on the listed qubits.
struct LocalObservable {
  Matrix matrix;
  Region qubits;
};

struct ZeroCorrelationReport {
  bool checked = false;
  bool pass = false;
  std::string diagnostic;
  double max_correlation = 0.0;
  std::size_t trials = 0;
};

namespace detail {

/// Rank of the generators restricted to the qubits in r (as [x|z] columns).
inline std::size_t restricted_rank(const StabiliserGroup& g, const Region& r) {
  std::vector<BitVector> rows;
  for (const auto& p : g.generators()) {
    BitVector v(2 * r.size());
    for (std::size_t j = 0; j < r.size(); ++j) {
      v.set(j, p.x().get(r[j]));
      v.set(r.size() + j, p.z().get(r[j]));
    }
    rows.push_back(std::move(v));
  }
  return gf2::rank(rows, 2 * r.size());
}

inline Region complement(const Region& r, std::size_t n) {
  Region out;
  for (std::size_t q = 0; q < n; ++q) {
    if (!std::binary_search(r.begin(), r.end(), q)) out.push_back(q);
  }
  return out;
}

/// Dimension of the subgroup supported inside r.
inline std::size_t supported_dim(const StabiliserGroup& g, const Region& r) {
  return g.rank() - restricted_rank(g, complement(r, g.n()));
}

}  // namespace detail

/// Checks that C(A,B) vanishes on random codespace states when the
/// hypotheses hold: disjoint supports, the union region is correctable (no
/// logical operator lives on it) and no stabiliser straddles the regions.
inline ZeroCorrelationReport zero_correlation_stabiliser_check(const StabiliserGroup& group, const LocalObservable& obs_a, const LocalObservable& obs_b,
                                                               double tol, const Lattice* lattice = nullptr, double min_separation = 0.0,
                                                               std::size_t trials = 8, std::uint64_t seed = 1) {
  const std::size_t n = group.n();
  require_matrix_qubits(n);
  Region ra = obs_a.qubits, rb = obs_b.qubits;
  std::sort(ra.begin(), ra.end());
  std::sort(rb.begin(), rb.end());
  for (auto q : ra) {
    if (std::binary_search(rb.begin(), rb.end(), q)) throw std::invalid_argument("zero_correlation_stabiliser_check: observable supports overlap");
  }
  ZeroCorrelationReport rep;
  if (lattice) {
    double sep = std::numeric_limits<double>::infinity();
    for (auto p : ra) {
      for (auto q : rb) sep = std::min(sep, lattice->distance(p, q));
    }
    if (!(sep > min_separation + kLengthSlack)) {
      rep.diagnostic = "regions are not separated by more than the locality bound";
      return rep;
    }
  }
  Region un = ra;
  un.insert(un.end(), rb.begin(), rb.end());
  std::sort(un.begin(), un.end());
  const std::size_t commuting_dim = 2 * un.size() - detail::restricted_rank(group, un);
  if (commuting_dim != detail::supported_dim(group, un)) {
    rep.diagnostic = "union of supports carries a logical operator (support not below the code distance)";
    return rep;
  }
  if (detail::supported_dim(group, un) != detail::supported_dim(group, ra) + detail::supported_dim(group, rb)) {
    rep.diagnostic = "a stabiliser straddles both regions";
    return rep;
  }
  rep.checked = true;
  const Matrix ma = embed(obs_a.matrix, obs_a.qubits, n).m;
  const Matrix mb = embed(obs_b.matrix, obs_b.qubits, n).m;
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const Vector v = random_codespace_vector(group, rng);
    const Complex ea = v.dot(ma * v), eb = v.dot(mb * v), eab = v.dot(ma * (mb * v));
    rep.max_correlation = std::max(rep.max_correlation, std::abs(eab - ea * eb));
  }
  rep.trials = trials;
  rep.pass = rep.max_correlation <= tol;
  return rep;
}

}  // namespace floquetkit
