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
#include "mofsim/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "mofsim/analysis.hpp"
#include "mofsim/couplings.hpp"
#include "mofsim/errors.hpp"
#include "mofsim/plot.hpp"
#include "mofsim/report.hpp"

namespace mofsim {

using nlohmann::json;

Experiment parse_experiment(std::string_view name) {
  if (name == "spectrum") return Experiment::kSpectrum;
  if (name == "couplings") return Experiment::kCouplings;
  if (name == "evolve") return Experiment::kEvolve;
  if (name == "sweep") return Experiment::kSweep;
  if (name == "compare_bc" || name == "compare-bc") return Experiment::kCompareBc;
  throw ConfigError("unknown experiment '" + std::string(name) + "'");
}

std::string_view to_string(Experiment e) {
  switch (e) {
    case Experiment::kSpectrum: return "spectrum";
    case Experiment::kCouplings: return "couplings";
    case Experiment::kEvolve: return "evolve";
    case Experiment::kSweep: return "sweep";
    case Experiment::kCompareBc: return "compare_bc";
  }
  return "evolve";
}

SystemKind parse_system(std::string_view name) {
  if (name == "mof") return SystemKind::kMof;
  if (name == "bc") return SystemKind::kBc;
  if (name == "adiabatic") return SystemKind::kAdiabatic;
  throw ConfigError("unknown system '" + std::string(name) + "' (expected mof, bc or adiabatic)");
}

std::string_view to_string(SystemKind s) {
  switch (s) {
    case SystemKind::kMof: return "mof";
    case SystemKind::kBc: return "bc";
    case SystemKind::kAdiabatic: return "adiabatic";
  }
  return "mof";
}

namespace {

// Field access with dotted paths in every error and rejection of unknown
// keys, so a typo never silently falls back to a default.
class Fields {
 public:
  Fields(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) fail(path_, "must be an object");
  }

  bool has(const std::string& key) {
    if (!j_.contains(key)) return false;
    used_.insert(key);
    return true;
  }

  const json& raw(const std::string& key) {
    used_.insert(key);
    return j_.at(key);
  }

  std::string at(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  double number(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_number()) fail(at(key), "must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail(at(key), "must be finite");
    return x;
  }

  double number(const std::string& key, double fallback) {
    return has(key) ? number(key) : fallback;
  }

  std::string string(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_string()) fail(at(key), "must be a string");
    return v.get<std::string>();
  }

  bool boolean(const std::string& key, bool fallback) {
    if (!has(key)) return fallback;
    const json& v = raw(key);
    if (!v.is_boolean()) fail(at(key), "must be true or false");
    return v.get<bool>();
  }

  std::size_t count(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_number_integer() || v.get<long long>() < 1) fail(at(key), "must be a positive integer");
    return static_cast<std::size_t>(v.get<long long>());
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      const std::string& k = it.key();
      if (used_.count(k) || k == "provenance" || k == "description" || k == "comment") continue;
      fail(at(k), "is not a recognised field");
    }
  }

  [[noreturn]] static void fail(const std::string& where, const std::string& what) {
    throw ConfigError(where + ": " + what);
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> used_;
};

template <typename F>
auto with_field(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParameterError& e) {
    throw ConfigError(where + ": " + e.what());
  }
}

void require_exclusive(Fields& f, const char* a, const char* b) {
  if (f.has(a) && f.has(b))
    Fields::fail(f.at(a), std::string("conflicts with '") + b + "'; give only one");
}

ModelParams parse_params(const json& j, const std::string& path) {
  Fields f(j, path);
  ModelParams p;
  p.m = f.number("m", p.m);
  p.Omega = f.number("Omega", p.Omega);
  p.M = f.number("M", p.M);
  p.mho = f.number("mho", p.mho);
  p.A0 = f.number("A0", p.A0);
  p.phi0 = f.number("phi0", p.phi0);
  p.T = f.number("T", p.T);
  p.gamma_i = f.number("gamma_i", p.gamma_i);
  p.gamma_f = f.number("gamma_f", p.gamma_f);
  p.field_gradient_scale = f.number("field_gradient_scale", p.field_gradient_scale);
  if (f.has("coupling_kind")) {
    const std::string k = f.string("coupling_kind");
    if (k == "qphi") p.coupling_kind = CouplingKind::kQPhi;
    else if (k == "qdotphi") p.coupling_kind = CouplingKind::kQdotPhi;
    else Fields::fail(f.at("coupling_kind"), "must be \"qphi\" or \"qdotphi\"");
  }
  if (f.has("noise_model")) {
    const std::string k = f.string("noise_model");
    if (k == "high_temperature") p.noise_model = NoiseModel::kHighTemperature;
    else if (k == "exact_bose") p.noise_model = NoiseModel::kExactBose;
    else Fields::fail(f.at("noise_model"), "must be \"high_temperature\" or \"exact_bose\"");
  }
  if (f.has("detuning_convention")) {
    const std::string k = f.string("detuning_convention");
    if (k == "interaction_picture") p.detuning_convention = DetuningConvention::kInteractionPicture;
    else if (k == "as_printed") p.detuning_convention = DetuningConvention::kAsPrinted;
    else Fields::fail(f.at("detuning_convention"), "must be \"interaction_picture\" or \"as_printed\"");
  }
  if (f.has("constants")) {
    Fields c(f.raw("constants"), f.at("constants"));
    p.constants.hbar = c.number("hbar", p.constants.hbar);
    p.constants.c = c.number("c", p.constants.c);
    p.constants.eps0 = c.number("eps0", p.constants.eps0);
    p.constants.kB = c.number("kB", p.constants.kB);
    c.finish();
  }

  // Alternatives resolved against the base fields above.
  require_exclusive(f, "gamma", "gamma_over_mho");
  if (f.has("gamma_over_mho")) p.gamma = f.number("gamma_over_mho") * p.mho;
  else p.gamma = f.number("gamma", p.gamma);

  require_exclusive(f, "lambda", "Omega_P");
  if (f.has("Omega_P")) {
    const double OP = f.number("Omega_P");
    if (!(OP >= 0.0)) Fields::fail(f.at("Omega_P"), "must be >= 0");
    p.lambda = lambda_for_plasma_frequency(OP, p.m, p.Omega, p.coupling_kind, p.constants);
  } else {
    p.lambda = f.number("lambda", p.lambda);
  }

  const int omega_forms = f.has("omega") + f.has("eta") + f.has("Delta_over_mho");
  if (omega_forms > 1) Fields::fail(f.at("omega"), "give only one of omega, eta, Delta_over_mho");
  if (f.has("eta")) p.omega = f.number("eta") * p.Omega;
  else if (f.has("Delta_over_mho")) p.omega = p.Omega + f.number("Delta_over_mho") * p.mho;
  else if (f.has("omega")) p.omega = f.number("omega");
  else p.omega = p.Omega;

  require_exclusive(f, "L", "alpha_OF_over_mho");
  if (f.has("alpha_OF_over_mho")) {
    const double ratio = f.number("alpha_OF_over_mho");
    p.L = with_field(f.at("alpha_OF_over_mho"), [&] { return length_for_alpha_of(ratio * p.mho, p); });
  } else {
    p.L = f.number("L", p.L);
  }
  f.finish();
  with_field(path, [&] {
    validate(p);
    return 0;
  });
  return p;
}

std::vector<double> check_ascending(std::vector<double> v, const std::string& where) {
  if (v.empty()) Fields::fail(where, "must not be empty");
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] > v[i - 1])) Fields::fail(where, "must be strictly ascending");
  return v;
}

std::vector<double> number_array(const json& j, const std::string& where) {
  if (!j.is_array()) Fields::fail(where, "must be an array of numbers");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number() || !std::isfinite(v.get<double>()))
      Fields::fail(where, "must contain only finite numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

// Either an explicit array, {"values": [...]}, {"start", "stop", "count"}
// or {"start", "stop", "step"}.
std::vector<double> parse_grid(const json& j, const std::string& where, double* scale_out = nullptr,
                               std::string* units_out = nullptr) {
  if (j.is_array()) return check_ascending(number_array(j, where), where);
  Fields f(j, where);
  if (units_out && f.has("units")) *units_out = f.string("units");
  (void)scale_out;
  std::vector<double> v;
  if (f.has("values")) {
    v = number_array(f.raw("values"), f.at("values"));
  } else {
    const double start = f.number("start");
    const double stop = f.number("stop");
    if (f.has("count") == f.has("step")) Fields::fail(where, "needs exactly one of count or step");
    if (f.has("count")) {
      v = linspace(start, stop, f.count("count"));
    } else {
      const double step = f.number("step");
      if (!(step > 0.0)) Fields::fail(f.at("step"), "must be positive");
      const double n = std::round((stop - start) / step);
      if (n < 0 || std::abs(start + n * step - stop) > 1e-9 * std::max(1.0, std::abs(stop)))
        Fields::fail(where, "stop - start must be a non-negative multiple of step");
      for (long long i = 0; i <= static_cast<long long>(n); ++i)
        v.push_back(start + static_cast<double>(i) * step);
    }
  }
  f.finish();
  return check_ascending(std::move(v), where);
}

ResonanceSet parse_resonances(const json& j, const std::string& where) {
  if (!j.is_array()) Fields::fail(where, "must be an array");
  std::vector<Resonance> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    Fields f(j[i], at);
    Resonance r;
    if (!f.has("Omega_P")) Fields::fail(at, "needs Omega_P");
    r.Omega_P = f.number("Omega_P");
    require_exclusive(f, "Omega", "r_p");
    if (f.has("r_p")) r.Omega = f.number("r_p") * r.Omega_P;
    else if (f.has("Omega")) r.Omega = f.number("Omega");
    else Fields::fail(at, "needs Omega or r_p");
    f.finish();
    out.push_back(r);
  }
  return with_field(where, [&] { return ResonanceSet(std::move(out)); });
}

}  // namespace

Scenario parse_scenario(const json& doc, std::string name) {
  Fields top(doc, "");
  Scenario s;
  s.name = std::move(name);
  if (!top.has("schema_version")) Fields::fail("schema_version", "is required");
  const json& ver = top.raw("schema_version");
  if (!ver.is_number_integer() || ver.get<int>() != kSchemaVersion)
    Fields::fail("schema_version", "must be " + std::to_string(kSchemaVersion));
  if (top.has("name")) s.name = top.string("name");
  if (top.has("experiment")) s.experiment = parse_experiment(top.string("experiment"));

  s.params = top.has("params") ? parse_params(top.raw("params"), "params") : ModelParams{};

  if (top.has("initial_state"))
    s.initial_state = with_field("initial_state", [&] { return parse_initial_state(top.string("initial_state")); });
  if (top.has("system")) s.system = parse_system(top.string("system"));

  if (top.has("integrator")) {
    Fields f(top.raw("integrator"), "integrator");
    if (f.has("method"))
      s.integrator.method = with_field(f.at("method"), [&] { return parse_method(f.string("method")); });
    s.integrator.rk4_step = f.number("rk4_step", 0.0);
    if (s.integrator.rk4_step < 0.0) Fields::fail(f.at("rk4_step"), "must be >= 0");
    f.finish();
  }
  if (top.has("pair"))
    s.integrator.pair = with_field("pair", [&] { return parse_mode_pair(top.string("pair")); });

  if (top.has("time_grid")) {
    s.times = parse_grid(top.raw("time_grid"), "time_grid");
    if (s.times.front() < 0.0) Fields::fail("time_grid", "must start at t >= 0");
  }
  if (top.has("detuning_grid")) s.detunings = parse_grid(top.raw("detuning_grid"), "detuning_grid");
  if (top.has("resonances")) s.resonances = parse_resonances(top.raw("resonances"), "resonances");
  if (top.has("frequency_grid")) {
    std::string units = "absolute";
    s.frequencies = parse_grid(top.raw("frequency_grid"), "frequency_grid", nullptr, &units);
    if (units == "eta") {
      const double ref = s.resonances.empty() ? s.params.Omega : s.resonances.entries()[0].Omega;
      for (double& w : s.frequencies) w *= ref;
    } else if (units != "absolute") {
      Fields::fail("frequency_grid.units", "must be \"absolute\" or \"eta\"");
    }
    if (s.frequencies.front() < 0.0) Fields::fail("frequency_grid", "must be >= 0");
  }
  if (top.has("outputs")) {
    Fields f(top.raw("outputs"), "outputs");
    s.write_covariance = f.boolean("covariance", s.write_covariance);
    s.covariance_columns = f.boolean("covariance_columns", s.covariance_columns);
    f.finish();
  }
  top.finish();
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("malformed JSON in '" + path.string() + "': " + e.what());
  }
  return parse_scenario(doc, path.stem().string());
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("MOFSIM_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
      throw ConfigError(std::string("MOFSIM_THREADS must be a positive integer (got '") + env + "')");
    return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// ---------------------------------------------------------------------------

namespace {

void require_times(const Scenario& s, const char* experiment) {
  if (s.times.empty()) throw ConfigError(std::string(experiment) + " needs a time_grid");
}

DriftDiffusion build_system(const Scenario& s, const ModelParams& p) {
  switch (s.system) {
    case SystemKind::kMof: return build_drift_mof(compute_couplings(p), p);
    case SystemKind::kBc: return build_drift_bc(p);
    case SystemKind::kAdiabatic: return adiabatic_idf_elimination(compute_couplings(p), p);
  }
  return build_drift_mof(compute_couplings(p), p);
}

CovarianceMatrix initial_for(const DriftDiffusion& sys, const Scenario& s, const ModelParams& p) {
  return sys.dim() == 6 ? initial_covariance(p, s.initial_state)
                        : initial_covariance_4(p, s.initial_state);
}

EvolutionResult evolve_params(const Scenario& s, const ModelParams& p) {
  const DriftDiffusion sys = build_system(s, p);
  return evolve_covariance(sys, initial_for(sys, s, p), s.times, s.integrator);
}

}  // namespace

EvolutionResult evolve_scenario(const Scenario& s) {
  require_times(s, "evolve");
  return evolve_params(s, s.params);
}

SweepResult sweep_detuning_time(const Scenario& s, unsigned threads) {
  require_times(s, "sweep");
  if (s.detunings.empty()) throw ConfigError("sweep needs a detuning_grid");
  Scenario mof = s;
  mof.system = SystemKind::kMof;

  std::vector<ModelParams> points;
  for (double x : s.detunings) {
    ModelParams p = s.params;
    p.omega = s.params.Omega + x * s.params.mho;
    if (!(p.omega > 0.0)) {
      std::ostringstream os;
      os << "detuning_grid: Delta/mho = " << x << " gives a non-positive drive frequency";
      throw ConfigError(os.str());
    }
    points.push_back(p);
  }

  const std::size_t n = points.size();
  std::vector<EntanglementTrace> traces(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        traces[i] = evolve_params(mof, points[i]).trace;
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned workers = std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(n));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  SweepResult r;
  r.detunings = s.detunings;
  r.times = s.times;
  for (std::size_t i = 0; i < n; ++i) {
    r.E_N.push_back(traces[i].E_N);
    r.peak.push_back(*std::max_element(traces[i].E_N.begin(), traces[i].E_N.end()));
    r.integrated.push_back(trapezoid(traces[i].times, traces[i].E_N));
    if (r.peak[i] > r.peak[r.argmax]) r.argmax = i;
  }
  return r;
}

ComparisonReport compare_mof_bc(const Scenario& s) {
  require_times(s, "compare_bc");
  const ModelParams& p = s.params;
  const CouplingSet c = compute_couplings(p);
  ComparisonReport r;
  r.times = s.times;
  r.abs_alpha_OF = std::abs(c.alpha_OF);

  const DriftDiffusion mof = build_drift_mof(c, p);
  r.E_mof = evolve_covariance(mof, initial_covariance(p, s.initial_state), s.times, s.integrator)
                .trace.E_N;
  const DriftDiffusion bc = build_drift_bc(p);
  r.E_bc = evolve_covariance(bc, initial_covariance_4(p, s.initial_state), s.times, s.integrator)
               .trace.E_N;
  const double Delta = p.omega - p.Omega;
  if (Delta * Delta + p.gamma_i * p.gamma_f > 0.0) {
    const DriftDiffusion ad = adiabatic_idf_elimination(c, p);
    r.E_adiabatic =
        evolve_covariance(ad, initial_covariance_4(p, s.initial_state), s.times, s.integrator)
            .trace.E_N;
  }

  r.max_bc = *std::max_element(r.E_bc.begin(), r.E_bc.end());
  r.dev_mof_bc = max_abs_difference(r.E_mof, r.E_bc);
  if (!r.E_adiabatic.empty()) {
    r.dev_mof_adiabatic = max_abs_difference(r.E_mof, r.E_adiabatic);
    r.dev_adiabatic_bc = max_abs_difference(r.E_adiabatic, r.E_bc);
  }
  const double fast = std::max(std::abs(Delta), r.abs_alpha_OF);
  r.overdamped = std::min(p.gamma_i, p.gamma_f) >= kRegimeMarginThreshold * fast;
  try {
    const SpectralPeak peak = dominant_frequency(r.times, r.E_mof);
    r.dominant_frequency = peak.frequency;
    r.frequency_bin = peak.bin_width;
  } catch (const ParameterError&) {
    // non-uniform or very short grid: no frequency estimate
  }
  std::ostringstream os;
  if (r.overdamped) {
    os << "overdamped idf: adiabatic elimination applies";
  } else {
    os << "idf-mediated regime, fast time scale |alpha_OF| = " << format_double(r.abs_alpha_OF);
  }
  r.regime = os.str();
  return r;
}

// ---------------------------------------------------------------------------

namespace {

std::string table_file(const std::string& stem, OutputFormat f) {
  return stem + (f == OutputFormat::kCsv ? ".csv" : ".json");
}

std::string table_contents(const Table& t, OutputFormat f) {
  return f == OutputFormat::kCsv ? to_csv(t) : dump_json(to_json(t));
}

json regime_json(const RegimeReport& r) {
  auto check = [](const RegimeCheck& c) {
    return json{{"pass", c.pass}, {"margin", std::isfinite(c.margin) ? json(c.margin) : json("inf")}};
  };
  return {{"sub_wavelength", check(r.sub_wavelength)},
          {"time_scale", check(r.time_scale)},
          {"rotating_wave", check(r.rotating_wave)},
          {"coupling", std::string(to_string(r.coupling))},
          {"plasma_ratio", r.plasma_ratio}};
}

void add_regime(const ModelParams& p, ResultSet& out) {
  const RegimeReport r = validate_regime(p);
  out.summary["regime"] = regime_json(r);
  for (auto& w : r.warnings()) out.warnings.push_back(std::move(w));
}

void add_plot(ResultSet& out, const RunOptions& o, const std::string& file, std::string svg,
              bool empty) {
  if (!o.plots) return;
  if (empty) {
    out.warnings.push_back("no data to plot for " + file + "; skipped");
    return;
  }
  out.files.push_back({file, std::move(svg)});
}

ResultSet run_spectrum(const Scenario& s, const RunOptions& o) {
  if (s.frequencies.empty()) throw ConfigError("spectrum needs a frequency_grid");
  const SpectrumTable t = s.resonances.empty()
                              ? spectrum(s.frequencies, s.params)
                              : spectrum(s.frequencies, s.resonances, s.params.coupling_kind,
                                         s.params.constants);
  ResultSet out;
  out.files.push_back({table_file("spectrum", o.format), table_contents(spectrum_table(t), o.format)});
  const auto peak = std::max_element(t.reflectance.begin(), t.reflectance.end());
  out.summary["scalars"] = {{"points", t.omega.size()},
                            {"max_reflectance", *peak},
                            {"omega_at_max", t.omega[static_cast<std::size_t>(peak - t.reflectance.begin())]}};
  LinePlot plot{"Mirror reflectance", "omega", "|R|^2, |T|^2",
                {{"reflectance", t.omega, t.reflectance}, {"transmittance", t.omega, t.transmittance}}};
  add_plot(out, o, "spectrum.svg", render_line_plot(plot), t.omega.empty());
  return out;
}

ResultSet run_couplings(const Scenario& s, const RunOptions&) {
  const CouplingSet c = compute_couplings(s.params);
  ResultSet out;
  out.files.push_back({"couplings.json", dump_json(couplings_json(c))});
  const DerivedParams d = derive(s.params);
  out.summary["scalars"] = {{"abs_alpha_OF", std::abs(c.alpha_OF)},
                            {"abs_alpha_OF_over_mho", std::abs(c.alpha_OF) / s.params.mho},
                            {"L", s.params.L},
                            {"Omega_P", d.Omega_P},
                            {"Phi0", d.Phi0}};
  add_regime(s.params, out);
  return out;
}

ResultSet run_evolve(const Scenario& s, const RunOptions& o) {
  Scenario run = s;
  if (s.covariance_columns) run.integrator.keep_snapshots = true;
  const EvolutionResult ev = evolve_scenario(run);
  const auto& tr = ev.trace;
  Table t;
  t.add_column("t", tr.times);
  t.add_column("E_N_MF", tr.E_N);
  t.add_column("c_minus", tr.c_minus);
  if (s.covariance_columns) {
    const Eigen::Index n = ev.final_V.rows();
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        std::vector<double> col;
        for (const auto& V : tr.snapshots) col.push_back(V(i, j));
        t.add_column("V_" + std::to_string(i) + std::to_string(j), std::move(col));
      }
  }
  ResultSet out;
  out.files.push_back({table_file("trajectory", o.format), table_contents(t, o.format)});
  if (s.write_covariance) {
    const std::vector<std::string> labels =
        ev.final_V.rows() == 6 ? mof_labels() : std::vector<std::string>{"Z", "P", "Phi", "Pi"};
    out.files.push_back({"covariance_final.json",
                         dump_json(covariance_json(CovarianceMatrix(ev.final_V, labels)))});
  }
  out.summary["scalars"] = {{"max_E_N", *std::max_element(tr.E_N.begin(), tr.E_N.end())},
                            {"final_E_N", tr.E_N.back()},
                            {"integrated_E_N", trapezoid(tr.times, tr.E_N)},
                            {"system", std::string(to_string(s.system))},
                            {"method", std::string(to_string(s.integrator.method))}};
  if (ev.rk4_step > 0.0) out.summary["scalars"]["rk4_step"] = ev.rk4_step;
  add_regime(s.params, out);
  LinePlot plot{"Mirror-field entanglement", "t", "E_N", {{"E_N", tr.times, tr.E_N}}};
  add_plot(out, o, "trajectory.svg", render_line_plot(plot), tr.times.empty());
  return out;
}

ResultSet run_sweep(const Scenario& s, const RunOptions& o) {
  const SweepResult r = sweep_detuning_time(s, o.threads);
  Table t;
  std::vector<double> dcol, tcol, ecol;
  for (std::size_t i = 0; i < r.detunings.size(); ++i)
    for (std::size_t k = 0; k < r.times.size(); ++k) {
      dcol.push_back(r.detunings[i]);
      tcol.push_back(r.times[k]);
      ecol.push_back(r.E_N[i][k]);
    }
  t.add_column("delta_over_mho", std::move(dcol));
  t.add_column("t", std::move(tcol));
  t.add_column("E_N", std::move(ecol));
  ResultSet out;
  out.files.push_back({table_file("sweep", o.format), table_contents(t, o.format)});
  out.summary["scalars"] = {{"argmax_delta_over_mho", r.detunings[r.argmax]},
                            {"max_E_N", r.peak[r.argmax]},
                            {"peak_E_N", r.peak},
                            {"integrated_E_N", r.integrated},
                            {"delta_over_mho", r.detunings}};
  add_regime(s.params, out);
  Heatmap map{"E_N over detuning and time", "t", "Delta / mho", r.times, r.detunings, {}};
  for (const auto& row : r.E_N) map.z.insert(map.z.end(), row.begin(), row.end());
  add_plot(out, o, "sweep.svg", render_heatmap(map), map.z.empty());
  return out;
}

ResultSet run_compare(const Scenario& s, const RunOptions& o) {
  const ComparisonReport r = compare_mof_bc(s);
  Table t;
  t.add_column("t", r.times);
  t.add_column("E_N_MOF", r.E_mof);
  if (!r.E_adiabatic.empty()) t.add_column("E_N_adiabatic", r.E_adiabatic);
  t.add_column("E_N_BC", r.E_bc);
  ResultSet out;
  out.files.push_back({table_file("comparison", o.format), table_contents(t, o.format)});
  json sc = {{"max_E_N_BC", r.max_bc},
             {"max_dev_MOF_BC", r.dev_mof_bc},
             {"rel_dev_MOF_BC", r.max_bc > 0.0 ? json(r.dev_mof_bc / r.max_bc) : json(nullptr)},
             {"within_10_percent", r.dev_mof_bc <= 0.1 * r.max_bc},
             {"abs_alpha_OF", r.abs_alpha_OF},
             {"dominant_frequency_MOF", r.dominant_frequency},
             {"frequency_bin", r.frequency_bin},
             {"overdamped", r.overdamped},
             {"regime", r.regime}};
  if (!r.E_adiabatic.empty()) {
    sc["max_dev_MOF_adiabatic"] = r.dev_mof_adiabatic;
    sc["max_dev_adiabatic_BC"] = r.dev_adiabatic_bc;
  }
  out.summary["scalars"] = std::move(sc);
  if (!r.overdamped) out.warnings.push_back(r.regime);
  add_regime(s.params, out);
  LinePlot plot{"MOF versus boundary-condition entanglement", "t", "E_N", {}};
  plot.series.push_back({"MOF", r.times, r.E_mof});
  if (!r.E_adiabatic.empty()) plot.series.push_back({"adiabatic", r.times, r.E_adiabatic});
  plot.series.push_back({"BC", r.times, r.E_bc});
  add_plot(out, o, "comparison.svg", render_line_plot(plot), r.times.empty());
  return out;
}

}  // namespace

ResultSet run_experiment(Experiment e, const Scenario& s, const RunOptions& o) {
  ResultSet out;
  switch (e) {
    case Experiment::kSpectrum: out = run_spectrum(s, o); break;
    case Experiment::kCouplings: out = run_couplings(s, o); break;
    case Experiment::kEvolve: out = run_evolve(s, o); break;
    case Experiment::kSweep: out = run_sweep(s, o); break;
    case Experiment::kCompareBc: out = run_compare(s, o); break;
  }
  out.summary["experiment"] = std::string(to_string(e));
  out.summary["scenario"] = s.name;
  out.summary["schema_version"] = kSchemaVersion;
  json files = json::array();
  for (const auto& a : out.files) files.push_back(a.filename);
  out.summary["outputs"] = std::move(files);
  out.summary["warnings"] = out.warnings;
  return out;
}

void write_results(const ResultSet& r, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory '" + dir.string() + "': " + ec.message());
  for (const auto& a : r.files) write_text_file(dir / a.filename, a.contents);
  write_text_file(dir / "summary.json", dump_json(r.summary));
}

}  // namespace mofsim
