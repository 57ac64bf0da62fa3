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

#include "comsim/cli.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "comsim/bench.hpp"
#include "comsim/com.hpp"
#include "comsim/oracle.hpp"
#include "comsim/sstr.hpp"

namespace comsim::cli {

namespace {

constexpr double kSigmaBound = 5.0;
constexpr std::string_view kDemoPrefix = "demo:";

ShotRecord run_one(const Circuit& circuit, Engine engine, std::uint64_t shot_seed) {
  switch (engine) {
    case Engine::Sstr:
      return sstr_sample_shot(circuit, shot_seed);
    case Engine::Com:
      return com_sample_shot(circuit, shot_seed);
    case Engine::Oracle:
      return oracle_sample_shot(circuit, shot_seed);
  }
  throw std::logic_error("unreachable engine");
}

std::string outcome_key(const ShotRecord& record) {
  std::string key;
  key.reserve(record.outcomes.size());
  for (const auto& [label, value] : record.outcomes) {
    key.push_back(value > 0 ? '+' : '-');
  }
  return key;
}

double binomial_z(std::uint64_t count, std::uint64_t shots, double p) {
  const double expected = static_cast<double>(shots) * p;
  if (p <= 0.0 || p >= 1.0) {
    return static_cast<double>(count) == expected ? 0.0 : HUGE_VAL;
  }
  const double sigma = std::sqrt(expected * (1.0 - p));
  return (static_cast<double>(count) - expected) / sigma;
}

std::string format_sign(int value) { return value > 0 ? "+1" : "-1"; }

nlohmann::ordered_json record_to_json(const ShotRecord& record, Engine engine) {
  nlohmann::ordered_json outcomes = nlohmann::ordered_json::array();
  for (const auto& [label, value] : record.outcomes) {
    outcomes.push_back({{"label", label}, {"value", value}});
  }
  return {{"seed", record.seed}, {"engine", engine_name(engine)}, {"outcomes", outcomes}};
}

}  // namespace

std::string engine_name(Engine engine) {
  switch (engine) {
    case Engine::Sstr:
      return "sstr";
    case Engine::Com:
      return "com";
    case Engine::Oracle:
      return "oracle";
  }
  return "?";
}

Circuit load_circuit(const std::string& input) {
  if (input.rfind(kDemoPrefix, 0) == 0) {
    try {
      return demo_circuit(input.substr(kDemoPrefix.size()));
    } catch (const std::invalid_argument& e) {
      throw ParseError(0, e.what());
    }
  }
  std::ifstream file(input, std::ios::binary);
  if (!file) {
    throw IoError("cannot open '" + input + "'");
  }
  std::ostringstream text;
  text << file.rdbuf();
  if (file.bad()) {
    throw IoError("error reading '" + input + "'");
  }
  return parse_circuit(text.str());
}

std::vector<ShotRecord> run_shots(const Circuit& circuit, Engine engine, std::uint64_t seed,
                                  std::uint64_t shots) {
  if (shots < 1) {
    throw std::invalid_argument("need at least one shot");
  }
  if (engine == Engine::Oracle && circuit.num_qubits > kDefaultOracleCap) {
    throw CapExceeded("oracle engine limited to " + std::to_string(kDefaultOracleCap) + " qubits");
  }
  std::vector<ShotRecord> records(shots);
  const unsigned hardware = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(hardware, shots));
  if (workers <= 1 || shots < 256) {
    for (std::uint64_t i = 0; i < shots; ++i) {
      records[i] = run_one(circuit, engine, derive_shot_seed(seed, i));
    }
    return records;
  }
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (std::uint64_t i = next.fetch_add(1); i < shots; i = next.fetch_add(1)) {
        records[i] = run_one(circuit, engine, derive_shot_seed(seed, i));
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  return records;
}

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& diag) {
  try {
    const Circuit circuit = load_circuit(config.input);
    const auto records = run_shots(circuit, config.engine, config.seed, config.shots);
    for (const auto& record : records) {
      if (config.format == Format::Json) {
        out << record_to_json(record, config.engine).dump() << '\n';
      } else {
        out << "seed=" << record.seed;
        for (const auto& [label, value] : record.outcomes) {
          out << ' ' << label << '=' << format_sign(value);
        }
        out << '\n';
      }
    }
    return kOk;
  } catch (const ParseError& e) {
    diag << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const CapExceeded& e) {
    diag << e.what() << '\n';
    return kCapExceeded;
  } catch (const IoError& e) {
    diag << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    diag << "error: " << e.what() << '\n';
    return kFailure;
  }
}

DiffReport diff_circuit(const Circuit& circuit, std::uint64_t shots, std::uint64_t seed) {
  const auto oracle = run_circuit_distribution(circuit);

  std::map<std::string, std::uint64_t> sstr_counts;
  for (const auto& record : run_shots(circuit, Engine::Sstr, seed, shots)) {
    ++sstr_counts[outcome_key(record)];
  }
  std::map<std::string, std::uint64_t> com_counts;
  for (const auto& record : run_shots(circuit, Engine::Com, splitmix64(seed), shots)) {
    ++com_counts[outcome_key(record)];
  }

  DiffReport report;
  report.shots = shots;
  report.support_ok = true;

  std::map<std::string, double> all_keys;
  for (const auto& [key, p] : oracle) all_keys[key] = p;
  for (const auto& [key, count] : sstr_counts) all_keys.try_emplace(key, 0.0);
  for (const auto& [key, count] : com_counts) all_keys.try_emplace(key, 0.0);

  for (const auto& [key, p] : all_keys) {
    DiffRow row;
    row.outcomes = key;
    row.oracle_p = p;
    if (const auto it = sstr_counts.find(key); it != sstr_counts.end()) row.sstr_count = it->second;
    if (const auto it = com_counts.find(key); it != com_counts.end()) row.com_count = it->second;
    if (p == 0.0) {
      // An outcome the oracle forbids may not appear even once.
      if (row.sstr_count > 0 || row.com_count > 0) report.support_ok = false;
    } else {
      if (row.sstr_count == 0 || row.com_count == 0) report.support_ok = false;
      row.sstr_z = binomial_z(row.sstr_count, shots, p);
      row.com_z = binomial_z(row.com_count, shots, p);
      report.max_abs_z = std::max({report.max_abs_z, std::abs(row.sstr_z), std::abs(row.com_z)});
    }
    report.rows.push_back(std::move(row));
  }
  report.pass = report.support_ok && report.max_abs_z <= kSigmaBound;
  return report;
}

int cmd_diff(const RunConfig& config, std::ostream& out, std::ostream& diag) {
  try {
    const Circuit circuit = load_circuit(config.input);
    const DiffReport report = diff_circuit(circuit, config.shots, config.seed);
    if (config.format == Format::Json) {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const auto& row : report.rows) {
        rows.push_back({{"outcomes", row.outcomes},
                        {"oracle_p", row.oracle_p},
                        {"sstr_count", row.sstr_count},
                        {"com_count", row.com_count},
                        {"sstr_z", row.sstr_z},
                        {"com_z", row.com_z}});
      }
      out << nlohmann::ordered_json{{"shots", report.shots},
                                    {"rows", rows},
                                    {"support_ok", report.support_ok},
                                    {"max_abs_z", report.max_abs_z},
                                    {"pass", report.pass}}
                 .dump()
          << '\n';
    } else {
      out << "outcomes  oracle_p  sstr_count  com_count  sstr_z  com_z\n";
      for (const auto& row : report.rows) {
        out << row.outcomes << "  " << row.oracle_p << "  " << row.sstr_count << "  "
            << row.com_count << "  " << row.sstr_z << "  " << row.com_z << '\n';
      }
      out << "shots " << report.shots << ", max |z| " << report.max_abs_z << " (bound "
          << kSigmaBound << " sigma), support " << (report.support_ok ? "ok" : "MISMATCH") << '\n';
      out << "verdict: " << (report.pass ? "PASS" : "FAIL") << '\n';
    }
    return report.pass ? kOk : kFailure;
  } catch (const ParseError& e) {
    diag << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const CapExceeded& e) {
    diag << e.what() << '\n';
    return kCapExceeded;
  } catch (const IoError& e) {
    diag << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    diag << "error: " << e.what() << '\n';
    return kFailure;
  }
}

MicroscopeReport microscope_circuit(const Circuit& circuit, std::uint64_t seed) {
  MicroscopeReport report;
  report.pass = true;

  ComState pointer_path = ComState::random_init(circuit.num_qubits, seed);
  ComState direct_path = pointer_path;

  for (const Instruction& ins : circuit.instructions) {
    if (ins.kind != Instruction::Kind::Measure) {
      pointer_path.apply(ins);
      direct_path.apply(ins);
      continue;
    }
    MicroscopeResult result = microscope_measure_observable(std::move(pointer_path), *ins.observable);
    const ComMeasurement direct =
        direct_path.measure_with_coin(*ins.observable, result.trace.final_destabilizer_phase);

    MicroscopeCheck check;
    check.label = ins.label;
    check.microscope_outcome = result.outcome;
    check.direct_outcome = direct.outcome;
    check.trace = result.trace;
    check.outcome_match = result.outcome == direct.outcome;
    check.state_match = result.reduced.tableau() == direct_path.tableau();
    check.provenance =
        result.trace.final_destabilizer_phase == result.trace.initial_pointer_phase;
    report.pass = report.pass && check.outcome_match && check.state_match && check.provenance;
    report.checks.push_back(std::move(check));

    pointer_path = std::move(result.reduced);
  }
  return report;
}

int cmd_microscope(const RunConfig& config, std::ostream& out, std::ostream& diag) {
  try {
    const Circuit circuit = load_circuit(config.input);
    if (circuit.num_measurements() == 0) {
      diag << "circuit has no measurements\n";
      return kParseError;
    }
    const MicroscopeReport report = microscope_circuit(circuit, config.seed);
    if (config.format == Format::Json) {
      nlohmann::ordered_json checks = nlohmann::ordered_json::array();
      for (const auto& check : report.checks) {
        checks.push_back({{"label", check.label},
                          {"outcome", check.microscope_outcome},
                          {"direct_outcome", check.direct_outcome},
                          {"initial_pointer_phase", check.trace.initial_pointer_phase},
                          {"pointer_outcome", check.trace.pointer_outcome},
                          {"branch_d_phase", check.trace.branch_d_phase},
                          {"final_destabilizer_phase", check.trace.final_destabilizer_phase},
                          {"outcome_match", check.outcome_match},
                          {"state_match", check.state_match},
                          {"provenance", check.provenance}});
      }
      out << nlohmann::ordered_json{{"seed", config.seed},
                                    {"checks", checks},
                                    {"pass", report.pass}}
                 .dump()
          << '\n';
    } else {
      for (const auto& check : report.checks) {
        out << check.label << ": outcome " << format_sign(check.microscope_outcome)
            << " (direct " << format_sign(check.direct_outcome) << "), pointer phase "
            << format_sign(check.trace.initial_pointer_phase) << ", pointer outcome "
            << format_sign(check.trace.pointer_outcome) << ", d "
            << format_sign(check.trace.branch_d_phase) << ", retained phase "
            << format_sign(check.trace.final_destabilizer_phase) << " -> "
            << (check.outcome_match && check.state_match && check.provenance ? "PASS" : "FAIL")
            << '\n';
      }
      out << "verdict: " << (report.pass ? "PASS" : "FAIL") << '\n';
    }
    return report.pass ? kOk : kFailure;
  } catch (const ParseError& e) {
    diag << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const CapExceeded& e) {
    diag << e.what() << '\n';
    return kCapExceeded;
  } catch (const IoError& e) {
    diag << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    diag << "error: " << e.what() << '\n';
    return kFailure;
  }
}

int cmd_bench(const BenchConfig& config, std::ostream& out, std::ostream& diag) {
  try {
    const BenchResult result = run_update_benchmark(64, config.max_n, config.reps, config.seed);
    write_bench_csv(result, out);
    diag << "measurement-update log-log slope: " << result.measure_slope << '\n';
    diag << "symplectic-product log-log slope: " << result.symplectic_slope << '\n';
    if (result.points.size() >= 2) {
      const auto& top = result.points.back();
      const auto& prev = result.points[result.points.size() - 2];
      diag << "top-of-ladder doubling ratio: " << top.measure_seconds / prev.measure_seconds
           << '\n';
    }
    return kOk;
  } catch (const std::exception& e) {
    diag << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace comsim::cli
