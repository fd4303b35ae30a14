/*
 * Copyright 2026 The mofsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "mofsim/dynamics.hpp"
#include "mofsim/optics.hpp"
#include "mofsim/params.hpp"

namespace mofsim {

inline constexpr int kSchemaVersion = 1;

enum class Experiment { kSpectrum, kCouplings, kEvolve, kSweep, kCompareBc };
enum class SystemKind { kMof, kBc, kAdiabatic };
enum class OutputFormat { kCsv, kJson };

Experiment parse_experiment(std::string_view name);
std::string_view to_string(Experiment e);
SystemKind parse_system(std::string_view name);
std::string_view to_string(SystemKind s);

struct Scenario {
  std::string name;
  std::optional<Experiment> experiment;
  ModelParams params;
  InitialState initial_state = InitialState::kThermal;
  SystemKind system = SystemKind::kMof;
  EvolveOptions integrator;
  std::vector<double> times;
  std::vector<double> detunings;    ///< Delta / mho
  std::vector<double> frequencies;  ///< absolute omega
  ResonanceSet resonances;          ///< empty: single idf from params
  bool write_covariance = true;     ///< final V as JSON
  bool covariance_columns = false;  ///< flattened V_ij in the trajectory table
};

/// Throws ConfigError naming the offending field.
Scenario parse_scenario(const nlohmann::json& doc, std::string name = "scenario");
Scenario load_scenario(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Experiments. Everything is computed in memory first; files are written
// only once an experiment has fully succeeded.

struct RunOptions {
  OutputFormat format = OutputFormat::kCsv;
  bool plots = false;
  unsigned threads = 0;  ///< 0: MOFSIM_THREADS or the hardware count
};

struct Artifact {
  std::string filename;
  std::string contents;
};

struct ResultSet {
  std::vector<Artifact> files;
  nlohmann::json summary;
  std::vector<std::string> warnings;
};

struct SweepResult {
  std::vector<double> detunings;
  std::vector<double> times;
  std::vector<std::vector<double>> E_N;  ///< [detuning][time]
  std::vector<double> peak;              ///< max_t E_N per detuning
  std::vector<double> integrated;        ///< trapezoid over t per detuning
  std::size_t argmax = 0;                ///< index of the largest peak
};

/// For each Delta/mho the drive frequency becomes Omega + Delta, the
/// couplings are recomputed and the MOF system evolved. Run in parallel,
/// assembled in grid order.
SweepResult sweep_detuning_time(const Scenario& s, unsigned threads = 0);

struct ComparisonReport {
  std::vector<double> times;
  std::vector<double> E_mof;
  std::vector<double> E_adiabatic;  ///< empty when elimination is degenerate
  std::vector<double> E_bc;
  double max_bc = 0.0;
  double dev_mof_bc = 0.0;
  double dev_mof_adiabatic = 0.0;
  double dev_adiabatic_bc = 0.0;
  bool overdamped = false;   ///< gamma_i, gamma_f >= 10 max(|Delta|, |alpha_OF|)
  double abs_alpha_OF = 0.0;
  double dominant_frequency = 0.0;  ///< of E_N^MOF(t)
  double frequency_bin = 0.0;
  std::string regime;
};

ComparisonReport compare_mof_bc(const Scenario& s);

/// Evolution of the configured system (MOF, BC or adiabatic).
EvolutionResult evolve_scenario(const Scenario& s);

ResultSet run_experiment(Experiment e, const Scenario& s, const RunOptions& options);

/// Creates `out_dir` and writes every artifact plus summary.json.
void write_results(const ResultSet& results, const std::filesystem::path& out_dir);

/// Worker count for sweeps: `requested` if non-zero, else MOFSIM_THREADS,
/// else the hardware concurrency. Throws ConfigError for a malformed
/// MOFSIM_THREADS value.
unsigned resolve_threads(unsigned requested);

}  // namespace mofsim
