// Copyright 2026 The comsim authors
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

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "comsim/cli.hpp"

namespace cli = comsim::cli;

int main(int argc, char** argv) {
  CLI::App app{"stabilizer circuit simulator with a deterministic contextual engine,\n"
               "a pointer-based measurement procedure, and a dense reference oracle"};
  app.require_subcommand(1);

  const std::map<std::string, cli::Engine> engine_names{
      {"sstr", cli::Engine::Sstr}, {"com", cli::Engine::Com}, {"oracle", cli::Engine::Oracle}};
  const std::map<std::string, cli::Format> format_names{{"text", cli::Format::Text},
                                                        {"json", cli::Format::Json}};

  cli::RunConfig run_config;
  auto* run = app.add_subcommand("run", "sample shots from a circuit");
  run->add_option("input", run_config.input, "circuit file or demo:<name>")->required();
  run->add_option("--engine", run_config.engine, "simulation engine")
      ->transform(CLI::CheckedTransformer(engine_names, CLI::ignore_case))
      ->default_str("com");
  run->add_option("--seed", run_config.seed, "base seed; shot i uses a seed derived from (seed, i)");
  run->add_option("--shots", run_config.shots, "number of shots")->check(CLI::PositiveNumber);
  run->add_option("--format", run_config.format, "output format")
      ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case))
      ->default_str("json");

  cli::RunConfig diff_config;
  diff_config.shots = 10000;
  auto* diff = app.add_subcommand(
      "diff", "compare empirical sstr/com distributions against the exact oracle");
  diff->add_option("input", diff_config.input, "circuit file or demo:<name>")->required();
  diff->add_option("--shots", diff_config.shots, "shots per engine")->check(CLI::PositiveNumber);
  diff->add_option("--seed", diff_config.seed, "base seed");
  diff->add_option("--format", diff_config.format, "output format")
      ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case))
      ->default_str("json");

  cli::RunConfig scope_config;
  auto* scope = app.add_subcommand(
      "microscope", "run each measurement via the pointer procedure and verify it against the "
                    "direct update");
  scope->add_option("input", scope_config.input, "circuit file or demo:<name>")->required();
  scope->add_option("--seed", scope_config.seed, "seed for the initial state");
  scope->add_option("--format", scope_config.format, "output format")
      ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case))
      ->default_str("json");

  cli::BenchConfig bench_config;
  auto* bench = app.add_subcommand("bench", "time the measurement-update kernel; CSV on stdout");
  bench->add_option("--max-n", bench_config.max_n, "top of the qubit ladder (from 64, doubling)")
      ->check(CLI::Range(static_cast<std::size_t>(64), static_cast<std::size_t>(1) << 20));
  bench->add_option("--reps", bench_config.reps, "repetitions per ladder point")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_config.seed, "seed for states and observables");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) return cli::cmd_run(run_config, std::cout, std::cerr);
  if (diff->parsed()) return cli::cmd_diff(diff_config, std::cout, std::cerr);
  if (scope->parsed()) return cli::cmd_microscope(scope_config, std::cout, std::cerr);
  if (bench->parsed()) return cli::cmd_bench(bench_config, std::cout, std::cerr);
  return cli::kFailure;
}
