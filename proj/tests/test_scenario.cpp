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
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "support.hpp"

#include "mofsim/errors.hpp"
#include "mofsim/plot.hpp"
#include "mofsim/report.hpp"
#include "mofsim/scenario.hpp"

using namespace mofsim;
using doctest::Approx;
using nlohmann::json;

namespace {

const std::filesystem::path kScenarios = MOFSIM_SCENARIO_DIR;

json base_doc() {
  return json::parse(R"({
    "schema_version": 1,
    "params": {"m": 0.001, "Omega": 100, "M": 10, "mho": 0.1, "Omega_P": 5,
               "A0": 1e-4, "T": 1000, "alpha_OF_over_mho": 16},
    "initial_state": "ground",
    "time_grid": {"start": 0, "stop": 2, "count": 21}
  })");
}

std::string error_of(const json& doc) {
  try {
    parse_scenario(doc);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

const std::string& file(const ResultSet& r, const std::string& name) {
  for (const auto& a : r.files)
    if (a.filename == name) return a.contents;
  FAIL("missing artifact " << name);
  static const std::string empty;
  return empty;
}

struct EnvVar {
  std::string name;
  explicit EnvVar(std::string n, const char* value) : name(std::move(n)) { ::setenv(name.c_str(), value, 1); }
  ~EnvVar() { ::unsetenv(name.c_str()); }
};

}  // namespace

TEST_SUITE("scenario") {

TEST_CASE("parameter alternatives") {
  const Scenario s = parse_scenario(base_doc());
  CHECK(s.params.lambda == Approx(0.1).epsilon(1e-14));
  CHECK(s.params.L == Approx(0.9765625).epsilon(1e-14));
  CHECK(s.params.omega == s.params.Omega);
  CHECK(s.initial_state == InitialState::kGround);
  CHECK(s.times.size() == 21);
  CHECK(s.times.back() == 2.0);

  json d = base_doc();
  d["params"]["Delta_over_mho"] = -1.5;
  d["params"]["gamma_over_mho"] = 0.01;
  CHECK(parse_scenario(d).params.omega == Approx(100.0 - 0.15).epsilon(1e-15));
  CHECK(parse_scenario(d).params.gamma == Approx(1e-3).epsilon(1e-15));

  d = base_doc();
  d["params"]["eta"] = 1.2;
  d["params"]["detuning_convention"] = "as_printed";
  d["params"]["noise_model"] = "exact_bose";
  d["params"]["coupling_kind"] = "qphi";
  const Scenario e = parse_scenario(d);
  CHECK(e.params.omega == Approx(120.0));
  CHECK(e.params.detuning_convention == DetuningConvention::kAsPrinted);
  CHECK(e.params.noise_model == NoiseModel::kExactBose);
  CHECK(e.params.coupling_kind == CouplingKind::kQPhi);
  CHECK(plasma_frequency(e.params) == Approx(5.0).epsilon(1e-13));
}

TEST_CASE("grid forms") {
  json d = base_doc();
  d["time_grid"] = {0, 0.5, 1.5};
  CHECK(parse_scenario(d).times == std::vector<double>{0, 0.5, 1.5});
  d["time_grid"] = {{"values", {0, 1}}};
  CHECK(parse_scenario(d).times == std::vector<double>{0, 1});
  d["time_grid"] = {{"start", 0}, {"stop", 1}, {"step", 0.25}};
  CHECK(parse_scenario(d).times == std::vector<double>{0, 0.25, 0.5, 0.75, 1.0});
  d["detuning_grid"] = {{"start", -3}, {"stop", 3}, {"step", 0.25}};
  const Scenario s = parse_scenario(d);
  CHECK(s.detunings.size() == 25);
  CHECK(s.detunings[12] == 0.0);
  d["frequency_grid"] = {{"start", 0.5}, {"stop", 2}, {"count", 4}, {"units", "eta"}};
  CHECK(parse_scenario(d).frequencies == std::vector<double>{50, 100, 150, 200});
}

TEST_CASE("resonance lists") {
  json d = base_doc();
  d["resonances"] = json::parse(R"([{"Omega_P": 2, "r_p": 0.5}, {"Omega": 0.3, "Omega_P": 1}])");
  const Scenario s = parse_scenario(d);
  REQUIRE(s.resonances.size() == 2);
  CHECK(s.resonances.entries()[0].Omega == 0.3);
  CHECK(s.resonances.entries()[1].Omega == 1.0);
  d["resonances"] = json::parse(R"([{"Omega": 1}])");
  CHECK(error_of(d).find("resonances[0]") != std::string::npos);
}

TEST_CASE("config errors name the field") {
  json d = base_doc();
  d["params"]["m"] = "heavy";
  CHECK(error_of(d).find("params.m") != std::string::npos);

  d = base_doc();
  d["params"]["mass"] = 1;
  const std::string unknown = error_of(d);
  CHECK(unknown.find("params.mass") != std::string::npos);
  CHECK(unknown.find("not a recognised field") != std::string::npos);

  d = base_doc();
  d["params"]["lambda"] = 0.1;
  CHECK(error_of(d).find("conflicts") != std::string::npos);

  d = base_doc();
  d["params"]["m"] = -1;
  CHECK(error_of(d).find("params") != std::string::npos);

  d = base_doc();
  d.erase("schema_version");
  CHECK(error_of(d).find("schema_version") != std::string::npos);
  d["schema_version"] = 2;
  CHECK(error_of(d).find("schema_version") != std::string::npos);

  d = base_doc();
  d["time_grid"] = {{"start", 0}, {"stop", 1}};
  CHECK(error_of(d).find("time_grid") != std::string::npos);
  d["time_grid"] = {1.0, 0.5};
  CHECK_FALSE(error_of(d).empty());
  d = base_doc();
  d["integrator"] = {{"method", "leapfrog"}};
  CHECK(error_of(d).find("integrator.method") != std::string::npos);
  d = base_doc();
  d["initial_state"] = "squeezed";
  CHECK(error_of(d).find("initial_state") != std::string::npos);
  d = base_doc();
  d["frequency_grid"] = {{"values", {1, 2}}, {"units", "hertz"}};
  CHECK(error_of(d).find("frequency_grid.units") != std::string::npos);

  d = base_doc();
  d["provenance"] = {{"m", "anything"}};
  d["description"] = "annotations are allowed";
  CHECK(error_of(d).empty());

  CHECK_THROWS_AS(load_scenario(kScenarios / "does_not_exist.json"), ConfigError);
}

TEST_CASE("presets load") {
  for (const char* name : {"fig2_silver", "fig2_photonic", "fig3_compare", "fig3_isolated", "fig4_sweep"}) {
    INFO(name);
    const Scenario s = load_scenario(kScenarios / (std::string(name) + ".json"));
    CHECK(s.experiment.has_value());
    CHECK(s.name == name);
  }
  const Scenario f3 = load_scenario(kScenarios / "fig3_compare.json");
  CHECK(std::abs(compute_couplings(f3.params).alpha_OF) == Approx(1.6).epsilon(1e-12));
  CHECK(f3.params.L == Approx(0.9765625).epsilon(1e-12));
  CHECK(parse_experiment("compare-bc") == Experiment::kCompareBc);
  CHECK_THROWS_AS(parse_experiment("fit"), ConfigError);
}

TEST_CASE("experiments produce the documented tables") {
  RunOptions o;
  const Scenario s = parse_scenario(base_doc());
  const ResultSet ev = run_experiment(Experiment::kEvolve, s, o);
  CHECK(first_line(file(ev, "trajectory.csv")) == "t,E_N_MF,c_minus");
  const json cov = json::parse(file(ev, "covariance_final.json"));
  CHECK(cov["quadrature_order"] == json(mof_labels()));
  CHECK(cov["values"].size() == 36);
  CHECK(ev.summary["schema_version"] == kSchemaVersion);
  CHECK_FALSE(ev.summary.contains("runtime"));

  Scenario wide = s;
  wide.covariance_columns = true;
  const std::string header = first_line(file(run_experiment(Experiment::kEvolve, wide, o), "trajectory.csv"));
  CHECK(header.rfind("t,E_N_MF,c_minus,V_00,V_01", 0) == 0);

  const json c = json::parse(file(run_experiment(Experiment::kCouplings, s, o), "couplings.json"));
  for (const char* k : {"alpha_OF", "alpha_OM", "alpha_MF", "beta_MF", "mho_prime"}) CHECK(c.contains(k));
  CHECK(c["alpha_OF"].size() == 2);
  CHECK(c["alpha_OF"][1].get<double>() == Approx(-1.6).epsilon(1e-12));

  o.format = OutputFormat::kJson;
  const json tj = json::parse(file(run_experiment(Experiment::kEvolve, s, o), "trajectory.json"));
  CHECK(tj["columns"] == json({"t", "E_N_MF", "c_minus"}));
  CHECK(tj["rows"].size() == 21);
}

TEST_CASE("experiment needs its grid") {
  json d = base_doc();
  d.erase("time_grid");
  const Scenario s = parse_scenario(d);
  CHECK_THROWS_AS(run_experiment(Experiment::kEvolve, s, {}), ConfigError);
  CHECK_THROWS_AS(run_experiment(Experiment::kSpectrum, s, {}), ConfigError);
  CHECK_THROWS_AS(run_experiment(Experiment::kSweep, s, {}), ConfigError);
}

TEST_CASE("sweep rows match single evolutions") {
  json d = base_doc();
  d["params"]["Omega_P"] = 0.05;
  d["detuning_grid"] = {-1, 0, 0.5};
  const Scenario s = parse_scenario(d);
  const SweepResult r = sweep_detuning_time(s, 2);
  REQUIRE(r.E_N.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    Scenario one = s;
    one.params.omega = s.params.Omega + s.detunings[i] * s.params.mho;
    CHECK(evolve_scenario(one).trace.E_N == r.E_N[i]);
  }
  const std::string csv = file(run_experiment(Experiment::kSweep, s, {}), "sweep.csv");
  CHECK(first_line(csv) == "delta_over_mho,t,E_N");
}

TEST_CASE("sweep output does not depend on the thread count") {
  json d = base_doc();
  d["params"]["Omega_P"] = 0.05;
  d["detuning_grid"] = {{"start", -1}, {"stop", 1}, {"step", 0.25}};
  const Scenario s = parse_scenario(d);
  RunOptions one, many;
  one.threads = 1;
  many.threads = 4;
  CHECK(file(run_experiment(Experiment::kSweep, s, one), "sweep.csv") ==
        file(run_experiment(Experiment::kSweep, s, many), "sweep.csv"));
}

TEST_CASE("thread count from the environment") {
  {
    EnvVar v("MOFSIM_THREADS", "3");
    CHECK(resolve_threads(0) == 3);
    CHECK(resolve_threads(5) == 5);
  }
  for (const char* bad : {"zero", "0", "-2", "3x", ""}) {
    EnvVar v("MOFSIM_THREADS", bad);
    CHECK_THROWS_AS(resolve_threads(0), ConfigError);
  }
  CHECK(resolve_threads(0) >= 1);
}

TEST_CASE("comparison of the three descriptions") {
  json d = base_doc();
  d["params"]["gamma_i"] = 1e4;
  d["params"]["gamma_f"] = 1e4;
  d["time_grid"] = {{"start", 0}, {"stop", 10}, {"count", 101}};
  const ComparisonReport r = compare_mof_bc(parse_scenario(d));
  CHECK(r.overdamped);
  CHECK(r.E_adiabatic.size() == r.times.size());
  CHECK(r.dev_mof_adiabatic <= 1e-6);
  CHECK(r.abs_alpha_OF == Approx(1.6));

  json quiet = base_doc();
  quiet["params"]["A0"] = 0;
  const ComparisonReport z = compare_mof_bc(parse_scenario(quiet));
  for (double e : z.E_mof) CHECK(e == 0.0);
  for (double e : z.E_bc) CHECK(e == 0.0);
  CHECK_FALSE(z.overdamped);
  CHECK(z.E_adiabatic.empty());
  const ResultSet out = run_experiment(Experiment::kCompareBc, parse_scenario(quiet), {});
  CHECK(first_line(file(out, "comparison.csv")) == "t,E_N_MOF,E_N_BC");
  CHECK_FALSE(out.warnings.empty());
}

TEST_CASE("reruns are byte-identical") {
  RunOptions o;
  o.plots = true;
  for (const char* name : {"fig2_photonic", "fig4_sweep"}) {
    const Scenario s = load_scenario(kScenarios / (std::string(name) + ".json"));
    const ResultSet a = run_experiment(*s.experiment, s, o), b = run_experiment(*s.experiment, s, o);
    REQUIRE(a.files.size() == b.files.size());
    for (std::size_t i = 0; i < a.files.size(); ++i) {
      CHECK(a.files[i].filename == b.files[i].filename);
      CHECK(a.files[i].contents == b.files[i].contents);
    }
    CHECK(a.summary.dump() == b.summary.dump());
  }
}

TEST_CASE("plots") {
  RunOptions o;
  o.plots = true;
  const Scenario s = parse_scenario(base_doc());
  const ResultSet r = run_experiment(Experiment::kEvolve, s, o);
  const std::string& svg = file(r, "trajectory.svg");
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(run_experiment(Experiment::kEvolve, s, {}).files.size() == 2);

  CHECK(render_line_plot({"t", "x", "y", {{"a", {0, 1}, {1, 2}}}}) ==
        render_line_plot({"t", "x", "y", {{"a", {0, 1}, {1, 2}}}}));
  const std::string heat = render_heatmap({"h", "x", "y", {0, 1}, {0, 1}, {0.0, 0.5, 0.7, 1.0}});
  CHECK(heat.find("<rect") != std::string::npos);
}

TEST_CASE("results are written with a summary") {
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "mofsim_scenario_test";
  std::filesystem::remove_all(dir);
  const ResultSet r = run_experiment(Experiment::kCouplings, parse_scenario(base_doc()), {});
  write_results(r, dir / "nested");
  CHECK(std::filesystem::exists(dir / "nested" / "couplings.json"));
  std::ifstream in(dir / "nested" / "summary.json");
  const json summary = json::parse(in);
  CHECK(summary["experiment"] == "couplings");
  CHECK(summary["outputs"] == json({"couplings.json"}));
  CHECK(summary["regime"]["sub_wavelength"]["pass"] == true);
  std::filesystem::remove_all(dir);
}

TEST_CASE("number formatting") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(-0.0) == "0");
  CHECK(format_double(1e-300) == "1e-300");
  CHECK(std::stod(format_double(0.1 + 0.2)) == 0.1 + 0.2);
  Table t;
  t.add_column("a", {1, 2});
  t.add_column("b", {0.5, 0.25});
  CHECK(to_csv(t) == "a,b\n1,0.5\n2,0.25\n");
  CHECK_THROWS(t.add_column("c", {1}));
}

}  // TEST_SUITE
