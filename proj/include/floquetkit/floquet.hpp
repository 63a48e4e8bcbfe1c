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

#include "floquetkit/conjugacy.hpp"
#include "floquetkit/locality.hpp"
#include "floquetkit/outcome_source.hpp"
#include "floquetkit/stabiliser_group.hpp"

namespace floquetkit {

class GroupMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct TransitionReport {
  std::size_t index = 0;
  bool reversible = false;
  std::size_t n_m = 0;
  std::optional<LocalityReport> locality;
  std::optional<ReversibilityWitness> witness;
  std::string error;
};

struct ValidationReport {
  bool valid = true;
  std::vector<TransitionReport> transitions;
  std::string error;
};

struct FloquetSequence {
  std::vector<StabiliserGroup> isgs;
  std::vector<ConjugatePair> pairs;
  std::optional<Lattice> lattice;
  double l = 0.0;

  std::size_t n() const { return isgs.front().n(); }
  std::size_t total_measurements() const {
    std::size_t s = 0;
    for (const auto& p : pairs) s += p.n_m();
    return s;
  }
  bool periodic() const { return isgs.front().same_unsigned(isgs.back()); }
};

class InvalidSequence : public std::invalid_argument {
 public:
  explicit InvalidSequence(ValidationReport report)
      : std::invalid_argument("invalid Floquet sequence: " + describe(report)), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  static std::string describe(const ValidationReport& r) {
    if (!r.error.empty()) return r.error;
    for (const auto& t : r.transitions) {
      if (!t.error.empty()) return "transition " + std::to_string(t.index) + ": " + t.error;
      if (!t.reversible) return "transition " + std::to_string(t.index) + " is not reversible";
      if (t.locality && !t.locality->pass) return "transition " + std::to_string(t.index) + " is not locally reversible";
    }
    return "unknown failure";
  }
  ValidationReport report_;
};

namespace detail {

inline ValidationReport validate_into(const std::vector<StabiliserGroup>& isgs, const std::optional<Lattice>& lattice, double l,
                                      std::vector<ConjugatePair>* pairs) {
  ValidationReport rep;
  if (isgs.size() < 2) {
    rep.valid = false;
    rep.error = "a sequence needs at least two groups";
    return rep;
  }
  for (const auto& g : isgs) {
    if (g.n() != isgs.front().n()) {
      rep.valid = false;
      rep.error = "groups act on different qubit counts";
      return rep;
    }
    if (g.rank() != isgs.front().rank()) {
      rep.valid = false;
      rep.error = "groups have different ranks";
      return rep;
    }
  }
  if (lattice && lattice->n() != isgs.front().n()) {
    rep.valid = false;
    rep.error = "lattice size differs from qubit count";
    return rep;
  }
  for (std::size_t t = 0; t + 1 < isgs.size(); ++t) {
    TransitionReport tr;
    tr.index = t;
    try {
      auto res = check_reversible(isgs[t], isgs[t + 1]);
      if (res.reversible()) {
        tr.reversible = true;
        tr.n_m = res.pair->n_m();
        if (lattice) {
          tr.locality = check_local_reversibility(*res.pair, *lattice, l);
          if (!tr.locality->pass) rep.valid = false;
        }
        if (pairs) pairs->push_back(std::move(*res.pair));
      } else {
        tr.witness = res.witness;
        rep.valid = false;
      }
    } catch (const std::exception& e) {
      tr.error = e.what();
      rep.valid = false;
    }
    rep.transitions.push_back(std::move(tr));
  }
  return rep;
}

}  // namespace detail

inline ValidationReport validate_sequence(const std::vector<StabiliserGroup>& isgs, const std::optional<Lattice>& lattice, double l) {
  return detail::validate_into(isgs, lattice, l, nullptr);
}

inline ValidationReport validate(const FloquetSequence& seq) { return validate_sequence(seq.isgs, seq.lattice, seq.l); }

/// Validates and builds; throws InvalidSequence with the report on failure.
inline FloquetSequence make_sequence(std::vector<StabiliserGroup> isgs, std::optional<Lattice> lattice = std::nullopt, double l = 0.0) {
  FloquetSequence seq;
  auto rep = detail::validate_into(isgs, lattice, l, &seq.pairs);
  if (!rep.valid) throw InvalidSequence(std::move(rep));
  seq.isgs = std::move(isgs);
  seq.lattice = std::move(lattice);
  seq.l = l;
  return seq;
}

struct RunState {
  std::size_t t = 0;
  StabiliserGroup group;
  std::vector<std::uint8_t> outcomes;
  LogicalBasis logicals;
};

inline RunState initial_state(const FloquetSequence& seq) {
  return RunState{0, seq.isgs.front(), {}, normaliser_logicals(seq.isgs.front())};
}

/// The group element with the bits of p that acts as +1 on the codespace of g.
inline PauliOperator stabiliser_with_sign(const StabiliserGroup& g, const PauliOperator& p) {
  const auto m = g.contains(p);
  if (!m.member) throw GroupMismatch(format_pauli(p) + " is not in the group");
  return PauliOperator(p.x(), p.z(), (p.phase() + 4 - m.relative_phase) & 3u);
}

/// Multiplies each representative by the a_i conjugate to the b_i it
/// anticommutes with. Signs of the a_i are read from `current`, so the new
/// representative acts identically on the codespace of `current`.
inline LogicalBasis rewrite_logicals(const LogicalBasis& logicals, const ConjugatePair& pair, const StabiliserGroup& current) {
  std::vector<PauliOperator> signed_a;
  for (const auto& a : pair.basis_a) signed_a.push_back(stabiliser_with_sign(current, a));
  auto fix = [&](const PauliOperator& q) {
    PauliOperator out = q;
    for (std::size_t i = 0; i < pair.n_m(); ++i) {
      if (commutes(q, pair.basis_b[i])) out = multiply(signed_a[i], out);
    }
    return out;
  };
  LogicalBasis out;
  for (const auto& [x, z] : logicals.pairs) out.pairs.emplace_back(fix(x), fix(z));
  return out;
}

inline LogicalBasis rewrite_logicals(const LogicalBasis& logicals, const ConjugatePair& pair) {
  return rewrite_logicals(logicals, pair, pair.group_a);
}

inline RunState step(const RunState& state, const ConjugatePair& pair, OutcomeSource& source) {
  if (!state.group.same_unsigned(pair.group_a)) throw GroupMismatch("step: current group differs from the transition's source group");
  RunState next;
  next.t = state.t + 1;
  next.outcomes = state.outcomes;
  next.logicals = rewrite_logicals(state.logicals, pair, state.group);
  StabiliserGroup g = state.group;
  for (const auto& b : pair.basis_b) {
    auto r = measure_pauli(g, b, source);
    next.outcomes.push_back(r.outcome == 1 ? 0 : 1);
    g = std::move(r.group);
  }
  next.group = std::move(g);
  return next;
}

/// Logical Clifford on k qubits. Basis order [X_0..X_{k-1}, Z_0..Z_{k-1}];
/// column j of `symplectic` is the image of basis element j.
struct LogicalAction {
  std::size_t k = 0;
  std::vector<BitVector> symplectic;
  std::vector<int> phases;
  /// Logical Pauli whose conjugation produces exactly the -1 phases.
  std::string frame;

  bool is_symplectic() const {
    // Check S^T Omega S = Omega column pair by column pair.
    auto col = [&](std::size_t j) {
      BitVector c(2 * k);
      for (std::size_t i = 0; i < 2 * k; ++i) c.set(i, symplectic[i].get(j));
      return c;
    };
    for (std::size_t i = 0; i < 2 * k; ++i) {
      for (std::size_t j = 0; j < 2 * k; ++j) {
        const int want = (i + k == j || j + k == i) ? 1 : 0;
        if (symplectic_product(col(i), col(j)) != want) return false;
      }
    }
    return true;
  }
  bool is_identity() const {
    for (std::size_t i = 0; i < 2 * k; ++i) {
      for (std::size_t j = 0; j < 2 * k; ++j) {
        if (symplectic[i].get(j) != (i == j)) return false;
      }
    }
    for (int p : phases) {
      if (p != 1) return false;
    }
    return true;
  }
};

struct RunRecord {
  std::vector<StabiliserGroup> groups;
  std::vector<std::uint8_t> outcomes;
  LogicalBasis initial_logicals;
  LogicalBasis final_logicals;
  std::optional<LogicalAction> action;
};

/// Expresses `finals` (images of initial.flat()) in the initial basis on the
/// codespace of `final_group`.
inline LogicalAction extract_action(const LogicalBasis& initial, const LogicalBasis& finals, const StabiliserGroup& final_group) {
  const std::size_t k = initial.k();
  const auto basis = initial.flat();
  const auto images = finals.flat();
  LogicalAction act;
  act.k = k;
  act.symplectic.assign(2 * k, BitVector(2 * k));
  act.phases.assign(2 * k, 1);
  BitVector frame_bits(2 * k);
  for (std::size_t j = 0; j < 2 * k; ++j) {
    const auto& q = images[j];
    BitVector c(2 * k);
    for (std::size_t i = 0; i < k; ++i) {
      c.set(i, commutes(q, basis[k + i]));
      c.set(k + i, commutes(q, basis[i]));
    }
    PauliOperator p = PauliOperator::identity(q.n());
    for (std::size_t i = 0; i < 2 * k; ++i) {
      if (c.get(i)) {
        p = multiply(p, basis[i]);
        act.symplectic[i].set(j, true);
      }
    }
    if (p.phase() & 1u) p.set_phase(p.phase() + 1);
    const auto m = final_group.contains(multiply(p, q));
    if (!m.member || (m.relative_phase & 1u)) throw std::logic_error("extract_action: representative left the logical class");
    act.phases[j] = m.relative_phase == 0 ? 1 : -1;
    // An image X_i with sign -1 needs a frame component anticommuting with X_i, i.e. Z_i.
    if (act.phases[j] == -1) frame_bits.flip(j < k ? j + k : j - k);
  }
  for (std::size_t i = 0; i < k; ++i) {
    const bool fx = frame_bits.get(i), fz = frame_bits.get(k + i);
    act.frame += fx && fz ? 'Y' : fx ? 'X' : fz ? 'Z' : 'I';
  }
  return act;
}

inline RunRecord run_sequence(const FloquetSequence& seq, OutcomeSource& source) {
  RunRecord rec;
  RunState st = initial_state(seq);
  rec.initial_logicals = st.logicals;
  rec.groups.push_back(st.group);
  for (const auto& pair : seq.pairs) {
    st = step(st, pair, source);
    rec.groups.push_back(st.group);
  }
  rec.outcomes = st.outcomes;
  rec.final_logicals = st.logicals;
  if (seq.periodic()) rec.action = extract_action(rec.initial_logicals, rec.final_logicals, st.group);
  return rec;
}

inline LogicalAction period_action(const FloquetSequence& seq, OutcomeSource& source) {
  if (!seq.periodic()) throw std::invalid_argument("period_action: first and last groups differ (sequence is not periodic)");
  return *run_sequence(seq, source).action;
}

}  // namespace floquetkit
