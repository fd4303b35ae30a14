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

// mofsim command-line driver.
//
// Exit codes: 0 success, 1 numerical or physicality failure, 2 config error.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "mofsim/errors.hpp"
#include "mofsim/kernels/kernels.hpp"
#include "mofsim/scenario.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNumerical = 1;
constexpr int kExitConfig = 2;

struct Options {
  std::string config;
  std::string out = "out";
  std::string format = "csv";
  bool plots = false;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--config", o.config, "Scenario JSON file")->required();
  sub->add_option("--out", o.out, "Output directory")->capture_default_str();
  sub->add_option("--format", o.format, "Table format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_flag("--plots", o.plots, "Also write SVG plots");
}

int run(mofsim::Experiment e, const Options& o) {
  using namespace mofsim;
  const auto start = std::chrono::steady_clock::now();
  const Scenario s = load_scenario(o.config);
  RunOptions ro;
  ro.format = o.format == "json" ? OutputFormat::kJson : OutputFormat::kCsv;
  ro.plots = o.plots;
  const ResultSet r = run_experiment(e, s, ro);
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
  write_results(r, o.out);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << to_string(e) << ": wrote " << r.files.size() + 1 << " file(s) to " << o.out << " in "
            << secs << " s (kernels: " << kernels::to_string(kernels::active_isa()) << ")\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mirror-oscillator-field optomechanics simulator"};
  app.require_subcommand(1);
  Options opts;
  struct Entry {
    const char* name;
    const char* help;
    mofsim::Experiment experiment;
    CLI::App* sub = nullptr;
  };
  Entry entries[] = {
      {"spectrum", "Reflectance and transmittance over a frequency grid", mofsim::Experiment::kSpectrum},
      {"couplings", "Effective coupling constants as JSON", mofsim::Experiment::kCouplings},
      {"evolve", "Covariance trajectory and E_N(t)", mofsim::Experiment::kEvolve},
      {"sweep", "E_N over a detuning x time grid", mofsim::Experiment::kSweep},
      {"compare-bc", "MOF, adiabatic and boundary-condition E_N(t)", mofsim::Experiment::kCompareBc},
  };
  for (auto& e : entries) {
    e.sub = app.add_subcommand(e.name, e.help);
    add_common(e.sub, opts);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    for (const auto& e : entries)
      if (e.sub->parsed()) return run(e.experiment, opts);
  } catch (const mofsim::ConfigError& err) {
    std::cerr << "config error: " << err.what() << "\n";
    return kExitConfig;
  } catch (const mofsim::ParameterError& err) {
    std::cerr << "config error: " << err.what() << "\n";
    return kExitConfig;
  } catch (const mofsim::NumericalError& err) {
    std::cerr << "numerical error: " << err.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitNumerical;
  }
  return kExitConfig;
}
