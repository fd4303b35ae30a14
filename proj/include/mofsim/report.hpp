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
#include <string>
#include <vector>

#include "json.hpp"

#include "mofsim/couplings.hpp"
#include "mofsim/gaussian.hpp"
#include "mofsim/optics.hpp"

// Deterministic text serialization. Doubles are written in the shortest
// form that round-trips, so identical inputs give identical bytes.

namespace mofsim {

std::string format_double(double x);

/// Column-oriented numeric table.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> data;  ///< data[c][row]

  std::size_t rows() const { return data.empty() ? 0 : data.front().size(); }
  void add_column(std::string name, std::vector<double> values);
};

std::string to_csv(const Table& table);
/// {"columns": [...], "rows": [[...], ...]}
nlohmann::json to_json(const Table& table);

Table spectrum_table(const SpectrumTable& s);

/// [re, im]
nlohmann::json complex_json(Complex z);
/// {alpha_OF, alpha_OM, alpha_MF, beta_MF, mho_prime} plus the alpha_MF
/// decomposition under "alpha_MF_parts".
nlohmann::json couplings_json(const CouplingSet& c);
/// {"quadrature_order": [...], "dim": n, "values": [row-major]}
nlohmann::json covariance_json(const CovarianceMatrix& V);

/// Pretty JSON with a trailing newline.
std::string dump_json(const nlohmann::json& j);

/// Writes `contents` to `path`, throwing std::runtime_error on failure.
void write_text_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace mofsim
