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
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "floquetkit/conjugacy.hpp"
#include "floquetkit/pauli.hpp"

namespace floquetkit {

/// Comparisons of lengths use this slack. For integral coordinates squared
/// distances are exact integers, so only irrational thresholds rely on it.
inline constexpr double kLengthSlack = 1e-9;

inline bool length_leq(double a, double b) { return a <= b + kLengthSlack; }

/// Qubit positions in D dimensions with an optional axis-aligned torus.
/// A period entry of 0 leaves that axis open.
class Lattice {
 public:
  Lattice() = default;
  Lattice(std::size_t dim, std::vector<std::vector<double>> positions, std::vector<double> period = {})
      : dim_(dim), positions_(std::move(positions)), period_(std::move(period)) {
    if (dim_ == 0) throw std::invalid_argument("lattice dimension must be at least 1");
    if (period_.empty()) period_.assign(dim_, 0.0);
    if (period_.size() != dim_) throw std::invalid_argument("lattice period length differs from dimension");
    for (const auto& p : positions_) {
      if (p.size() != dim_) throw std::invalid_argument("lattice position has wrong dimension");
    }
  }

  /// Evenly spaced qubits on a line.
  static Lattice line(std::size_t n, double spacing = 1.0) {
    std::vector<std::vector<double>> pos;
    for (std::size_t i = 0; i < n; ++i) pos.push_back({spacing * static_cast<double>(i)});
    return Lattice(1, std::move(pos));
  }

  std::size_t dim() const { return dim_; }
  std::size_t n() const { return positions_.size(); }
  const std::vector<std::vector<double>>& positions() const { return positions_; }
  const std::vector<double>& period() const { return period_; }

  double squared_distance(std::size_t p, std::size_t q) const {
    double acc = 0.0;
    for (std::size_t d = 0; d < dim_; ++d) {
      double delta = positions_[p][d] - positions_[q][d];
      if (period_[d] > 0.0) {
        delta = std::fmod(delta, period_[d]);
        if (delta < 0) delta += period_[d];
        delta = std::min(delta, period_[d] - delta);
      }
      acc += delta * delta;
    }
    return acc;
  }

  double distance(std::size_t p, std::size_t q) const { return std::sqrt(squared_distance(p, q)); }

  bool within(std::size_t p, std::size_t q, double rho) const {
    return squared_distance(p, q) <= rho * rho + kLengthSlack;
  }

 private:
  std::size_t dim_ = 1;
  std::vector<std::vector<double>> positions_;
  std::vector<double> period_;
};

using Region = std::vector<std::size_t>;

inline double diameter(const Lattice& lat, const Region& r) {
  if (r.empty()) throw std::invalid_argument("diameter of an empty region");
  double best = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = i + 1; j < r.size(); ++j) best = std::max(best, lat.squared_distance(r[i], r[j]));
  }
  return std::sqrt(best);
}

/// All qubits within rho of some qubit of r (includes r). Sorted.
inline Region neighbourhood(const Lattice& lat, const Region& r, double rho) {
  if (rho < 0) throw std::invalid_argument("neighbourhood radius must be non-negative");
  Region out;
  for (std::size_t p = 0; p < lat.n(); ++p) {
    for (auto q : r) {
      if (p == q || lat.within(p, q, rho)) {
        out.push_back(p);
        break;
      }
    }
  }
  return out;
}

inline bool region_subset(const Region& inner, const Region& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

struct LocalityViolation {
  char side = 'a';
  std::size_t index = 0;
  double diameter = 0.0;
  PauliOperator element;
};

struct LocalityReport {
  bool pass = true;
  double l = 0.0;
  double max_diameter = 0.0;
  std::vector<LocalityViolation> violations;
};

inline LocalityReport check_local_reversibility(const ConjugatePair& pair, const Lattice& lat, double l) {
  if (lat.n() != pair.n()) throw LengthMismatch("lattice size differs from qubit count");
  LocalityReport rep;
  rep.l = l;
  auto scan = [&](const std::vector<PauliOperator>& basis, char side) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto s = basis[i].support();
      const double d = s.empty() ? 0.0 : diameter(lat, s);
      rep.max_diameter = std::max(rep.max_diameter, d);
      if (!length_leq(d, l)) {
        rep.pass = false;
        rep.violations.push_back({side, i, d, basis[i]});
      }
    }
  };
  scan(pair.basis_a, 'a');
  scan(pair.basis_b, 'b');
  return rep;
}

/// p times the a_i conjugate to every b_i that p anticommutes with.
inline PauliOperator relocalise(const ConjugatePair& pair, const PauliOperator& p) {
  PauliOperator out = p;
  for (std::size_t i = 0; i < pair.n_m(); ++i) {
    if (commutes(p, pair.basis_b[i])) out = multiply(pair.basis_a[i], out);
  }
  return out;
}

enum class ErrorClass { detectable, self_correcting, undetectable_logical };

inline std::string to_string(ErrorClass c) {
  switch (c) {
    case ErrorClass::detectable: return "detectable";
    case ErrorClass::self_correcting: return "self_correcting";
    case ErrorClass::undetectable_logical: return "undetectable_logical";
  }
  return "unknown";
}

inline ErrorClass classify_error(const ConjugatePair& pair, const PauliOperator& e) {
  for (const auto& s : pair.intersection.generators()) {
    if (commutes(s, e)) return ErrorClass::detectable;
  }
  if (pair.group_b.contains_unsigned(relocalise(pair, e))) return ErrorClass::self_correcting;
  return ErrorClass::undetectable_logical;
}

}  // namespace floquetkit
