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
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

const std::string kCli = MOFSIM_CLI_PATH;
const fs::path kScenarios = MOFSIM_SCENARIO_DIR;

struct Workdir {
  fs::path path;
  explicit Workdir(const std::string& name) : path(fs::temp_directory_path() / ("mofsim_cli_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~Workdir() { fs::remove_all(path); }
};

int run(const std::string& args, const fs::path& log) {
  const std::string cmd = "'" + kCli + "' " + args + " >'" + log.string() + "' 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write(const fs::path& p, const std::string& s) { std::ofstream(p, std::ios::binary) << s; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("successful runs exit 0 and write their tables") {
  Workdir w("ok");
  const fs::path out = w.path / "out";
  CHECK(run("couplings --config '" + (kScenarios / "fig3_compare.json").string() + "' --out '" +
                out.string() + "'",
            w.path / "log") == 0);
  CHECK(fs::exists(out / "couplings.json"));
  CHECK(fs::exists(out / "summary.json"));

  CHECK(run("spectrum --config '" + (kScenarios / "fig2_silver.json").string() + "' --out '" +
                out.string() + "' --format json --plots",
            w.path / "log") == 0);
  CHECK(fs::exists(out / "spectrum.json"));
  CHECK(slurp(out / "spectrum.svg").rfind("<svg", 0) == 0);
}

TEST_CASE("reruns are byte-identical") {
  Workdir w("determinism");
  const std::string cfg = (kScenarios / "fig2_photonic.json").string();
  REQUIRE(run("spectrum --config '" + cfg + "' --out '" + (w.path / "a").string() + "'", w.path / "log") == 0);
  REQUIRE(run("spectrum --config '" + cfg + "' --out '" + (w.path / "b").string() + "'", w.path / "log") == 0);
  CHECK(slurp(w.path / "a" / "spectrum.csv") == slurp(w.path / "b" / "spectrum.csv"));
  CHECK(slurp(w.path / "a" / "summary.json") == slurp(w.path / "b" / "summary.json"));
}

TEST_CASE("configuration errors exit 2 without output") {
  Workdir w("config");
  const fs::path out = w.path / "out";
  write(w.path / "broken.json", "{ \"schema_version\": 1, ");
  CHECK(run("evolve --config '" + (w.path / "broken.json").string() + "' --out '" + out.string() + "'",
            w.path / "log") == 2);
  CHECK_FALSE(fs::exists(out));
  CHECK(slurp(w.path / "log").find("malformed JSON") != std::string::npos);

  write(w.path / "unknown.json", R"({"schema_version": 1, "params": {"mass": 1}})");
  CHECK(run("couplings --config '" + (w.path / "unknown.json").string() + "' --out '" + out.string() + "'",
            w.path / "log") == 2);
  CHECK(slurp(w.path / "log").find("params.mass") != std::string::npos);
  CHECK_FALSE(fs::exists(out));

  CHECK(run("evolve --config '" + (w.path / "missing.json").string() + "'", w.path / "log") == 2);
  CHECK(run("evolve", w.path / "log") == 2);
  CHECK(run("explode --config x", w.path / "log") == 2);
  CHECK(run("spectrum --config x --format xml", w.path / "log") == 2);
}

TEST_CASE("bad thread count is a configuration error") {
  Workdir w("threads");
  const std::string cmd = "MOFSIM_THREADS=many '" + kCli + "' sweep --config '" +
                          (kScenarios / "fig4_sweep.json").string() + "' --out '" +
                          (w.path / "out").string() + "' >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 2);
}

TEST_CASE("numerical failure exits 1") {
  Workdir w("numerical");
  write(w.path / "unstable.json", R"({
    "schema_version": 1,
    "params": {"m": 0.001, "Omega": 100, "M": 10, "mho": 0.1, "Omega_P": 5,
               "A0": 1e-4, "alpha_OF_over_mho": 16},
    "initial_state": "ground",
    "time_grid": {"start": 0, "stop": 50, "count": 11},
    "integrator": {"method": "rk4", "rk4_step": 5}
  })");
  const fs::path out = w.path / "out";
  CHECK(run("evolve --config '" + (w.path / "unstable.json").string() + "' --out '" + out.string() + "'",
            w.path / "log") == 1);
  CHECK(slurp(w.path / "log").find("numerical error") != std::string::npos);
  CHECK_FALSE(fs::exists(out));
}

}  // TEST_SUITE
