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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "floquetkit/commands.hpp"

namespace {

using floquetkit::cli::RunConfig;

void add_common(CLI::App* sub, RunConfig& cfg, std::optional<std::uint64_t>& seed, std::string& forced, bool outcomes) {
  sub->add_option("--input,-i", cfg.inputs, "Input JSON file")->required();
  sub->add_option("--tol", cfg.tol, "Numerical tolerance")->capture_default_str();
  sub->add_option("--threads", cfg.threads, "Worker threads for outcome sweeps")->capture_default_str();
  sub->add_option("--output,-o", cfg.output, "Write the report here instead of stdout");
  sub->add_option("--seed", seed, "Seed for outcomes and random states");
  if (outcomes) sub->add_option("--forced-outcomes", forced, "Forced outcome stream, e.g. 0110 or +--+");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Floquet code toolkit: conjugate pairs, sequence runs, dense oracles and generalised unitaries"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::optional<std::uint64_t> seed;
  std::string forced;
  int lx = 6, ly = 2;

  auto* verify = app.add_subcommand("verify-pair", "Check reversibility, locality and projector identities of a pair");
  add_common(verify, cfg, seed, forced, false);
  auto* run = app.add_subcommand("run", "Execute a Floquet sequence and report its logical action");
  add_common(run, cfg, seed, forced, true);
  auto* locality = app.add_subcommand("check-locality", "Check l-local reversibility of every transition");
  add_common(locality, cfg, seed, forced, false);

  auto* genu = app.add_subcommand("genu", "Generalised logical unitaries");
  genu->require_subcommand(1);
  auto* genu_check = genu->add_subcommand("check", "Check the generalised-unitary conditions");
  add_common(genu_check, cfg, seed, forced, false);
  auto* genu_decompose = genu->add_subcommand("decompose", "Decompose into canonical form");
  add_common(genu_decompose, cfg, seed, forced, false);

  auto* oracle = app.add_subcommand("oracle", "Dense numerical oracles");
  oracle->require_subcommand(1);
  auto* oracle_verify = oracle->add_subcommand("verify", "Certify projector, K and V identities on every transition");
  add_common(oracle_verify, cfg, seed, forced, false);

  auto* catalog = app.add_subcommand("catalog", "Built-in sequences");
  catalog->require_subcommand(1);
  auto* catalog_list = catalog->add_subcommand("list", "List catalog entries");
  catalog_list->add_option("--output,-o", cfg.output, "Write the report here instead of stdout");
  auto* catalog_export = catalog->add_subcommand("export", "Export a catalog entry as a sequence file");
  catalog_export->add_option("--name", cfg.name, "Entry name")->required();
  catalog_export->add_option("--Lx", lx, "Honeycomb torus width (multiple of 6)")->capture_default_str();
  catalog_export->add_option("--Ly", ly, "Honeycomb torus height (even)")->capture_default_str();
  catalog_export->add_option("--output,-o", cfg.output, "Write the sequence here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return floquetkit::cli::kUsageError;
  }

  if (verify->parsed()) cfg.command = "verify-pair";
  if (run->parsed()) cfg.command = "run";
  if (locality->parsed()) cfg.command = "check-locality";
  if (genu_check->parsed()) cfg.command = "genu check";
  if (genu_decompose->parsed()) cfg.command = "genu decompose";
  if (oracle_verify->parsed()) cfg.command = "oracle verify";
  if (catalog_list->parsed()) cfg.command = "catalog list";
  if (catalog_export->parsed()) {
    cfg.command = "catalog export";
    if (cfg.name == "honeycomb") cfg.params = {{"Lx", lx}, {"Ly", ly}};
  }
  cfg.seed = seed;
  if (!forced.empty()) cfg.forced_outcomes = forced;

  const auto result = floquetkit::cli::dispatch(cfg);
  const std::string text = floquetkit::io::canonical_dump(result.report);
  if (!cfg.output.empty()) {
    std::ofstream out(cfg.output);
    if (!out) {
      std::cerr << "cannot write " << cfg.output << "\n";
      return floquetkit::cli::kUsageError;
    }
    out << text;
  } else {
    std::cout << text;
  }
  if (result.report.contains("error")) std::cerr << "error: " << result.report["error"].get<std::string>() << "\n";
  return result.exit_code;
}
