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

// Command implementations behind the floquetkit command-line tool. Each
// command maps a RunConfig to an exit code and a JSON report.

#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "floquetkit/catalog.hpp"
#include "floquetkit/dense.hpp"
#include "floquetkit/floquet.hpp"
#include "floquetkit/genu.hpp"
#include "floquetkit/io.hpp"

namespace floquetkit::cli {

using json = nlohmann::json;

enum ExitCode : int { kPass = 0, kCheckFailure = 1, kUsageError = 2 };

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> forced_outcomes;
  double tol = 1e-10;
  unsigned threads = 1;
  std::string output;
  // catalog export
  std::string name;
  std::map<std::string, int> params;
};

struct CommandResult {
  int exit_code = kPass;
  json report;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void validate_config(const RunConfig& c) {
  if (c.seed && c.forced_outcomes) throw UsageError("--seed and --forced-outcomes are mutually exclusive");
  if (!(c.tol > 0)) throw UsageError("--tol must be positive");
  if (c.threads == 0) throw UsageError("--threads must be at least 1");
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io::FormatError("cannot open input file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw io::FormatError("malformed JSON in '" + path + "': " + e.what());
  }
}

inline const std::string& single_input(const RunConfig& c) {
  if (c.inputs.size() != 1) throw UsageError("exactly one --input file is required");
  return c.inputs.front();
}

inline OutcomeSource outcome_source(const RunConfig& c) {
  if (c.forced_outcomes) return OutcomeSource::forced(*c.forced_outcomes);
  return OutcomeSource::seeded(c.seed.value_or(0));
}

inline CommandResult cmd_verify_pair(const RunConfig& c) {
  const auto in = io::pair_input_from_json(read_json_file(single_input(c)));
  const auto& a = in.isgs[0];
  const auto& b = in.isgs[1];
  CommandResult r;
  json rep;
  if (a.n() != b.n() || a.rank() != b.rank()) {
    rep["reversible"] = false;
    rep["error"] = "groups differ in qubit count or rank";
    r.exit_code = kCheckFailure;
    r.report = rep;
    return r;
  }
  ReversibilityResult res;
  try {
    res = check_reversible(a, b);
  } catch (const SignConflict& e) {
    rep["reversible"] = false;
    rep["error"] = e.what();
    rep["conflict"] = io::to_json(e.element());
    r.exit_code = kCheckFailure;
    r.report = rep;
    return r;
  }
  rep["reversible"] = res.reversible();
  bool pass = res.reversible();
  if (!res.reversible()) {
    rep["witness"] = io::to_json(*res.witness);
  } else {
    rep["pair"] = io::to_json(*res.pair);
    if (in.lattice) {
      const auto loc = check_local_reversibility(*res.pair, *in.lattice, in.l);
      rep["locality"] = io::to_json(loc);
      pass = pass && loc.pass;
    }
    if (a.n() <= kMaxMatrixQubits) {
      const auto id = verify_pair_identities(*res.pair, c.tol, c.threads);
      rep["identities"] = json{{"pass", id.pass}, {"tol", id.tol}, {"max_residual_a", id.max_residual_a}, {"max_residual_b", id.max_residual_b}, {"outcome_pairs", id.outcome_pairs}};
      pass = pass && id.pass;
    } else {
      rep["identities"] = json{{"skipped", "more than 12 qubits"}};
    }
  }
  r.exit_code = pass ? kPass : kCheckFailure;
  r.report = rep;
  return r;
}

inline CommandResult cmd_run(const RunConfig& c) {
  const auto in = io::sequence_input_from_json(read_json_file(single_input(c)));
  CommandResult r;
  const auto val = validate_sequence(in.isgs, in.lattice, in.l);
  if (!val.valid) {
    r.exit_code = kCheckFailure;
    r.report = json{{"validation", io::to_json(val)}};
    return r;
  }
  const auto seq = make_sequence(in.isgs, in.lattice, in.l);
  auto src = outcome_source(c);
  const auto rec = run_sequence(seq, src);
  json rep = io::to_json(rec);
  rep["validation"] = io::to_json(val);
  rep["periodic"] = seq.periodic();
  if (c.forced_outcomes) {
    rep["source"] = json{{"forced", *c.forced_outcomes}};
  } else {
    rep["source"] = json{{"seed", c.seed.value_or(0)}};
  }
  r.report = rep;
  return r;
}

inline CommandResult cmd_check_locality(const RunConfig& c) {
  const auto j = read_json_file(single_input(c));
  const auto in = j.contains("group_a") ? io::pair_input_from_json(j) : io::sequence_input_from_json(j);
  if (!in.lattice) throw io::FormatError("check-locality needs a lattice");
  const auto val = validate_sequence(in.isgs, in.lattice, in.l);
  return {val.valid ? kPass : kCheckFailure, json{{"validation", io::to_json(val)}}};
}

inline CommandResult cmd_oracle_verify(const RunConfig& c) {
  const auto j = read_json_file(single_input(c));
  const auto in = j.contains("group_a") ? io::pair_input_from_json(j) : io::sequence_input_from_json(j);
  const auto val = validate_sequence(in.isgs, std::nullopt, 0.0);
  if (!val.valid) return {kCheckFailure, json{{"validation", io::to_json(val)}}};
  const auto seq = make_sequence(in.isgs);
  require_matrix_qubits(seq.n());
  std::mt19937_64 rng(c.seed.value_or(0));
  bool pass = true;
  json transitions = json::array();
  for (std::size_t t = 0; t < seq.pairs.size(); ++t) {
    const auto& pair = seq.pairs[t];
    const auto id = verify_pair_identities(pair, c.tol, c.threads);
    const auto tr = verify_transition_identities(pair, c.tol, c.tol, c.threads);
    double prob_dev = 0.0;
    for (int s = 0; s < 8; ++s) {
      const auto v = random_codespace_vector(pair.group_a, rng);
      prob_dev = std::max(prob_dev, uniform_probability_check(pair, v, 1e-8).max_deviation);
    }
    const bool ok = id.pass && tr.pass && prob_dev <= c.tol;
    pass = pass && ok;
    transitions.push_back(json{{"index", t},
                               {"pass", ok},
                               {"projector_identity_a", id.max_residual_a},
                               {"projector_identity_b", id.max_residual_b},
                               {"k_isometry", tr.isometry},
                               {"k_round_trip", tr.round_trip},
                               {"v_implements_k", tr.v_implements_k},
                               {"v_unitarity", tr.v_unitarity},
                               {"factors_commute", tr.factors_commute},
                               {"uniform_probability", prob_dev}});
  }
  return {pass ? kPass : kCheckFailure, json{{"pass", pass}, {"tol", c.tol}, {"transitions", transitions}}};
}

inline DenseOperator genu_operator(const io::GenuInput& in) {
  if (in.unitary) return *in.unitary;
  return build_exponential(in.spec);
}

inline CommandResult cmd_genu_check(const RunConfig& c) {
  const auto in = io::genu_input_from_json(read_json_file(single_input(c)));
  const auto u = genu_operator(in);
  try {
    const auto rep = check_conditions(in.spec.pair, u, c.tol);
    return {rep.pass() ? kPass : kCheckFailure, io::to_json(rep)};
  } catch (const NonUnitary& e) {
    return {kCheckFailure, json{{"pass", false}, {"error", e.what()}}};
  }
}

inline CommandResult cmd_genu_decompose(const RunConfig& c) {
  const auto in = io::genu_input_from_json(read_json_file(single_input(c)));
  const auto u = genu_operator(in);
  try {
    const auto d = decompose_canonical(in.spec.pair, u, c.tol);
    json rep = io::to_json(d);
    rep["pass"] = true;
    if (!in.unitary) {
      rep["phase_function_distance"] = phase_function_distance(phase_function(in.spec.terms, in.spec.pair.n_m()), phase_function(d.spec.terms, in.spec.pair.n_m()));
    }
    return {kPass, rep};
  } catch (const ConditionsFailed& e) {
    return {kCheckFailure, json{{"pass", false}, {"error", e.what()}, {"conditions", io::to_json(e.report())}}};
  } catch (const ReconstructionFailure& e) {
    return {kCheckFailure, json{{"pass", false}, {"error", e.what()}, {"phi", e.phi()}, {"residual", e.residual()}}};
  } catch (const NonUnitary& e) {
    return {kCheckFailure, json{{"pass", false}, {"error", e.what()}}};
  }
}

inline CommandResult cmd_catalog_list(const RunConfig&) {
  json entries = json::array();
  for (const auto& n : catalog::names()) entries.push_back(n);
  return {kPass, json{{"entries", entries}}};
}

inline CommandResult cmd_catalog_export(const RunConfig& c) {
  if (c.name.empty()) throw UsageError("catalog export needs --name");
  const auto e = catalog::build(c.name, c.params);
  json j = io::to_json(e.sequence);
  j["name"] = e.name;
  j["description"] = e.description;
  if (!e.params.empty()) j["params"] = e.params;
  return {kPass, j};
}

/// Dispatches on config.command; maps parse and usage failures to exit code 2.
inline CommandResult dispatch(const RunConfig& c) {
  try {
    validate_config(c);
    if (c.command == "verify-pair") return cmd_verify_pair(c);
    if (c.command == "run") return cmd_run(c);
    if (c.command == "check-locality") return cmd_check_locality(c);
    if (c.command == "oracle verify") return cmd_oracle_verify(c);
    if (c.command == "genu check") return cmd_genu_check(c);
    if (c.command == "genu decompose") return cmd_genu_decompose(c);
    if (c.command == "catalog list") return cmd_catalog_list(c);
    if (c.command == "catalog export") return cmd_catalog_export(c);
    throw UsageError("unknown command '" + c.command + "'");
  } catch (const UsageError& e) {
    return {kUsageError, json{{"error", e.what()}}};
  } catch (const io::FormatError& e) {
    return {kUsageError, json{{"error", e.what()}}};
  } catch (const ParseError& e) {
    return {kUsageError, json{{"error", e.what()}}};
  } catch (const json::exception& e) {
    return {kUsageError, json{{"error", std::string("invalid input: ") + e.what()}}};
  } catch (const InvalidGroup& e) {
    return {kUsageError, json{{"error", e.what()}}};
  } catch (const LengthMismatch& e) {
    return {kUsageError, json{{"error", e.what()}}};
  } catch (const std::exception& e) {
    return {kCheckFailure, json{{"error", e.what()}}};
  }
}

}  // namespace floquetkit::cli
