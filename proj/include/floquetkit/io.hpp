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

// JSON conversion for the library types. Requires nlohmann/json.

#include <cmath>
#include <cstdio>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "floquetkit/catalog.hpp"
#include "floquetkit/conjugacy.hpp"
#include "floquetkit/dense.hpp"
#include "floquetkit/floquet.hpp"
#include "floquetkit/genu.hpp"
#include "floquetkit/locality.hpp"
#include "floquetkit/stabiliser_group.hpp"

namespace floquetkit::io {

using json = nlohmann::json;

class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void dump_value(const json& j, std::string& out, int indent, int depth) {
  const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close_pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      out += nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) {
          out += ",";
          out += nl;
        }
        first = false;
        out += pad;
        out += json(it.key()).dump();
        out += indent > 0 ? ": " : ":";
        dump_value(it.value(), out, indent, depth + 1);
      }
      out += nl;
      out += close_pad;
      out += "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[";
      out += nl;
      bool first = true;
      for (const auto& v : j) {
        if (!first) {
          out += ",";
          out += nl;
        }
        first = false;
        out += pad;
        dump_value(v, out, indent, depth + 1);
      }
      out += nl;
      out += close_pad;
      out += "]";
      return;
    }
    case json::value_t::number_float: {
      const double d = j.get<double>();
      if (!std::isfinite(d)) {
        out += "null";
        return;
      }
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.12e", d);
      out += buf;
      return;
    }
    default: out += j.dump();
  }
}

}  // namespace detail

/// Sorted keys, floats as %.12e, trailing newline.
inline std::string canonical_dump(const json& j, int indent = 2) {
  std::string out;
  detail::dump_value(j, out, indent, 0);
  out += "\n";
  return out;
}

inline std::string sign_text(int s) { return s == 1 ? "+" : "-"; }

inline int parse_sign(const json& j) {
  const auto s = j.get<std::string>();
  if (s == "+" || s == "+1" || s.empty()) return 1;
  if (s == "-" || s == "-1") return -1;
  throw FormatError("sign must be \"+\" or \"-\"");
}

inline json to_json(const PauliOperator& p) {
  if (p.is_hermitian()) return json{{"pauli", format_pauli_body(p)}, {"sign", sign_text(p.sign())}};
  return json{{"pauli", format_pauli_body(p)}, {"phase", p.phase()}};
}

/// Sparse form {"n":..,"terms":{"q":"X"},"sign":..}.
inline json to_sparse_json(const PauliOperator& p) {
  json terms = json::object();
  for (auto q : p.support()) terms[std::to_string(q)] = std::string(1, p.factor(q));
  json j{{"n", p.n()}, {"terms", terms}};
  if (p.is_hermitian()) {
    j["sign"] = sign_text(p.sign());
  } else {
    j["phase"] = p.phase();
  }
  return j;
}

/// Accepts dense text ("-XZI"), {"pauli","sign"} objects and the sparse form.
inline PauliOperator pauli_from_json(const json& j, std::optional<std::size_t> n = std::nullopt) {
  PauliOperator p;
  if (j.is_string()) {
    p = parse_pauli(j.get<std::string>());
  } else if (j.is_object() && j.contains("terms")) {
    const std::size_t count = j.at("n").get<std::size_t>();
    p = PauliOperator(count);
    for (auto it = j.at("terms").begin(); it != j.at("terms").end(); ++it) {
      const std::size_t q = std::stoul(it.key());
      if (q >= count) throw FormatError("sparse Pauli term index out of range");
      const auto c = it.value().get<std::string>();
      if (c.size() != 1) throw FormatError("sparse Pauli factor must be one character");
      p.set_factor(q, c[0]);
    }
    if (j.contains("sign")) p.set_phase(parse_sign(j.at("sign")) == 1 ? 0 : 2);
    if (j.contains("phase")) p.set_phase(j.at("phase").get<unsigned>());
  } else if (j.is_object() && j.contains("pauli")) {
    p = parse_pauli(j.at("pauli").get<std::string>());
    if (j.contains("sign") && parse_sign(j.at("sign")) == -1) p = p.negated();
    if (j.contains("phase")) p.set_phase(p.phase() + j.at("phase").get<unsigned>());
  } else {
    throw FormatError("unrecognised Pauli operator encoding");
  }
  if (n && p.n() != *n) throw FormatError("Pauli operator " + format_pauli(p) + " has the wrong qubit count");
  return p;
}

inline json to_json(const StabiliserGroup& g) {
  json gens = json::array();
  for (const auto& p : g.generators()) gens.push_back(to_json(p));
  return json{{"n", g.n()}, {"generators", gens}};
}

inline StabiliserGroup group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("generators")) throw FormatError("group must be an object with \"generators\"");
  std::vector<PauliOperator> gens;
  std::optional<std::size_t> n;
  if (j.contains("n")) n = j.at("n").get<std::size_t>();
  for (const auto& g : j.at("generators")) {
    gens.push_back(pauli_from_json(g, n));
    if (!n) n = gens.back().n();
  }
  if (!n) throw FormatError("group without generators must state \"n\"");
  return StabiliserGroup(*n, std::move(gens));
}

inline json to_json(const Lattice& lat) {
  json period = json::array();
  for (double p : lat.period()) period.push_back(p);
  return json{{"dim", lat.dim()}, {"period", period}, {"positions", lat.positions()}};
}

inline Lattice lattice_from_json(const json& j) {
  const std::size_t dim = j.at("dim").get<std::size_t>();
  auto positions = j.at("positions").get<std::vector<std::vector<double>>>();
  std::vector<double> period;
  if (j.contains("period")) period = j.at("period").get<std::vector<double>>();
  return Lattice(dim, std::move(positions), std::move(period));
}

inline json bit_matrix_json(const std::vector<BitVector>& m) {
  json rows = json::array();
  for (const auto& r : m) rows.push_back(r.to_string());
  return rows;
}

inline json to_json(const ConjugatePair& pair) {
  json ba = json::array(), bb = json::array();
  for (const auto& p : pair.basis_a) ba.push_back(to_json(p));
  for (const auto& p : pair.basis_b) bb.push_back(to_json(p));
  return json{{"group_a", to_json(pair.group_a)},
              {"group_b", to_json(pair.group_b)},
              {"intersection", to_json(pair.intersection)},
              {"basis_a", ba},
              {"basis_b", bb},
              {"n_m", pair.n_m()},
              {"m_before", bit_matrix_json(pair.m_before)},
              {"m_after", bit_matrix_json(pair.m_after())}};
}

inline json to_json(const ReversibilityWitness& w) {
  return json{{"element", to_json(w.element)}, {"side", std::string(1, w.side)}, {"commutation", w.commutation.to_string()}, {"m", bit_matrix_json(w.m)}};
}

inline json to_json(const LocalityReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) {
    v.push_back(json{{"side", std::string(1, x.side)}, {"index", x.index}, {"diameter", x.diameter}, {"element", to_json(x.element)}});
  }
  return json{{"pass", r.pass}, {"l", r.l}, {"max_diameter", r.max_diameter}, {"violations", v}};
}

inline json to_json(const ValidationReport& r) {
  json ts = json::array();
  for (const auto& t : r.transitions) {
    json jt{{"index", t.index}, {"reversible", t.reversible}, {"n_m", t.n_m}};
    if (t.locality) jt["locality"] = to_json(*t.locality);
    if (t.witness) jt["witness"] = to_json(*t.witness);
    if (!t.error.empty()) jt["error"] = t.error;
    ts.push_back(jt);
  }
  json j{{"valid", r.valid}, {"transitions", ts}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

inline json to_json(const LogicalBasis& lb) {
  json pairs = json::array();
  for (const auto& [x, z] : lb.pairs) pairs.push_back(json{{"x", to_json(x)}, {"z", to_json(z)}});
  return pairs;
}

inline json to_json(const LogicalAction& a) {
  return json{{"k", a.k}, {"symplectic", bit_matrix_json(a.symplectic)}, {"phases", a.phases}, {"frame", a.frame}};
}

inline std::string outcome_text(const std::vector<std::uint8_t>& bits) {
  std::string s;
  for (auto b : bits) s += b ? '1' : '0';
  return s;
}

inline json to_json(const RunRecord& r) {
  json groups = json::array();
  for (const auto& g : r.groups) groups.push_back(to_json(g));
  json j{{"outcomes", outcome_text(r.outcomes)}, {"groups", groups}, {"initial_logicals", to_json(r.initial_logicals)}, {"final_logicals", to_json(r.final_logicals)}};
  if (r.action) j["action"] = to_json(*r.action);
  return j;
}

inline json to_json(const FloquetSequence& seq) {
  json isgs = json::array();
  for (const auto& g : seq.isgs) isgs.push_back(to_json(g));
  json j{{"n", seq.n()}, {"isgs", isgs}, {"l", seq.l}};
  if (seq.lattice) j["lattice"] = to_json(*seq.lattice);
  return j;
}

inline std::map<std::string, int> catalog_params(const json& j) {
  std::map<std::string, int> params;
  if (j.contains("params")) {
    for (auto it = j.at("params").begin(); it != j.at("params").end(); ++it) params[it.key()] = it.value().get<int>();
  }
  for (const char* key : {"Lx", "Ly"}) {
    if (j.contains(key)) params[key] = j.at(key).get<int>();
  }
  return params;
}

/// Raw groups plus geometry, before validation.
struct SequenceInput {
  std::vector<StabiliserGroup> isgs;
  std::optional<Lattice> lattice;
  double l = 0.0;
};

/// {"isgs":[...], "lattice"?, "l"?} or {"catalog": name, "params"?: {...}}.
inline SequenceInput sequence_input_from_json(const json& j) {
  SequenceInput in;
  if (j.contains("catalog")) {
    const auto e = catalog::build(j.at("catalog").get<std::string>(), catalog_params(j));
    in.isgs = e.sequence.isgs;
    in.lattice = e.sequence.lattice;
    in.l = e.sequence.l;
    return in;
  }
  if (!j.contains("isgs")) throw FormatError("sequence must contain \"isgs\" or \"catalog\"");
  for (const auto& g : j.at("isgs")) in.isgs.push_back(group_from_json(g));
  if (j.contains("lattice")) in.lattice = lattice_from_json(j.at("lattice"));
  if (j.contains("l")) in.l = j.at("l").get<double>();
  return in;
}

/// Two groups plus optional geometry. Accepts {"group_a","group_b"}, a
/// sequence with a "transition" index, or a catalog reference.
inline SequenceInput pair_input_from_json(const json& j) {
  if (j.contains("group_a")) {
    SequenceInput in;
    in.isgs = {group_from_json(j.at("group_a")), group_from_json(j.at("group_b"))};
    if (j.contains("lattice")) in.lattice = lattice_from_json(j.at("lattice"));
    if (j.contains("l")) in.l = j.at("l").get<double>();
    return in;
  }
  SequenceInput seq = sequence_input_from_json(j);
  const std::size_t t = j.contains("transition") ? j.at("transition").get<std::size_t>() : 0;
  if (t + 1 >= seq.isgs.size()) throw FormatError("transition index out of range");
  seq.isgs = {seq.isgs[t], seq.isgs[t + 1]};
  return seq;
}

inline json matrix_json(const Matrix& m) {
  json re = json::array(), im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json rr = json::array(), ri = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ri.push_back(m(r, c).imag());
    }
    re.push_back(rr);
    im.push_back(ri);
  }
  return json{{"real", re}, {"imag", im}};
}

inline Matrix matrix_from_json(const json& j) {
  const auto re = j.at("real").get<std::vector<std::vector<double>>>();
  std::vector<std::vector<double>> im;
  if (j.contains("imag")) im = j.at("imag").get<std::vector<std::vector<double>>>();
  const auto rows = static_cast<Eigen::Index>(re.size());
  const auto cols = rows ? static_cast<Eigen::Index>(re.front().size()) : 0;
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (static_cast<Eigen::Index>(re[r].size()) != cols) throw FormatError("ragged matrix");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const double i = im.empty() ? 0.0 : im.at(r).at(c);
      m(r, c) = Complex(re[r][c], i);
    }
  }
  return m;
}

inline std::string logical_kind_text(LogicalPart::Kind k) {
  switch (k) {
    case LogicalPart::Kind::identity: return "identity";
    case LogicalPart::Kind::clifford: return "clifford";
    case LogicalPart::Kind::dense: return "dense";
  }
  return "identity";
}

/// Generalised-unitary input: the pair, the exponential terms and the logical part, and
/// optionally an explicit unitary that overrides the spec.
struct GenuInput {
  GeneralisedUnitarySpec spec;
  std::optional<DenseOperator> unitary;
};

inline GenuInput genu_input_from_json(const json& j) {
  json pair_json;
  if (j.contains("pair")) {
    pair_json = j.at("pair");
  } else if (j.contains("pair_ref")) {
    pair_json = j.at("pair_ref");
  } else {
    throw FormatError("generalised unitary input needs \"pair\" or \"pair_ref\"");
  }
  const auto groups = pair_input_from_json(pair_json);
  auto res = check_reversible(groups.isgs[0], groups.isgs[1]);
  if (!res.reversible()) throw FormatError("the referenced groups are not a reversible pair");
  GenuInput in;
  in.spec.pair = std::move(*res.pair);
  const std::size_t nm = in.spec.pair.n_m();
  if (j.contains("terms")) {
    for (const auto& t : j.at("terms")) {
      UnitaryTerm term;
      term.subset = BitVector::from_string(t.at("subset").get<std::string>());
      if (term.subset.size() != nm) throw FormatError("term subset length must equal n_m = " + std::to_string(nm));
      if (term.subset.none()) throw FormatError("term subsets must be nonzero");
      term.phi = t.at("phi").get<double>();
      term.transversal = is_transversal_angle(term.phi);
      in.spec.terms.push_back(std::move(term));
    }
  }
  if (j.contains("logical")) {
    const auto& lj = j.at("logical");
    const auto kind = lj.value("kind", std::string("identity"));
    if (kind == "identity") {
      in.spec.logical.kind = LogicalPart::Kind::identity;
    } else if (kind == "clifford") {
      in.spec.logical.kind = LogicalPart::Kind::clifford;
      for (const auto& g : lj.at("gates")) {
        LogicalGate gate;
        gate.name = g.contains("gate") ? g.at("gate").get<std::string>() : g.at("name").get<std::string>();
        gate.qubits = g.at("qubits").get<std::vector<std::size_t>>();
        in.spec.logical.gates.push_back(std::move(gate));
      }
    } else if (kind == "dense") {
      in.spec.logical.kind = LogicalPart::Kind::dense;
      in.spec.logical.matrix = DenseOperator{in.spec.pair.n(), matrix_from_json(lj.at("matrix"))};
    } else {
      throw FormatError("unknown logical kind '" + kind + "'");
    }
  }
  if (j.contains("unitary")) in.unitary = DenseOperator{in.spec.pair.n(), matrix_from_json(j.at("unitary"))};
  return in;
}

inline json to_json(const UnitaryTerm& t) {
  return json{{"subset", t.subset.to_string()}, {"phi", t.phi}, {"transversal", t.transversal}};
}

inline json to_json(const ConditionReport& r) {
  auto cond = [](bool pass, double residual) { return json{{"pass", pass}, {"residual", residual}}; };
  return json{{"pass", r.pass()},
              {"tol", r.tol},
              {"detectability", cond(r.detectability, r.detectability_residual)},
              {"self_correction", cond(r.self_correction, r.self_correction_residual)},
              {"isometry", cond(r.isometry, r.isometry_residual)},
              {"equivalence", cond(r.equivalence, r.equivalence_residual)},
              {"uniform_probability", cond(r.uniform_probability, r.uniform_probability_residual)},
              {"alpha", r.alpha},
              {"phi", r.phi}};
}

inline json to_json(const Decomposition& d) {
  json terms = json::array();
  for (const auto& t : d.spec.terms) terms.push_back(to_json(t));
  json j{{"terms", terms}, {"phi", d.phi}, {"global_phase", d.global_phase}, {"residual", d.residual}, {"conditions", to_json(d.conditions)}};
  if (d.clifford) {
    j["logical_clifford"] = json{{"k", d.clifford->k}, {"symplectic", bit_matrix_json(d.clifford->symplectic)}, {"phases", d.clifford->phases}};
  }
  return j;
}

}  // namespace floquetkit::io
