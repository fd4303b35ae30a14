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
#include "mofsim/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "mofsim/errors.hpp"

namespace mofsim {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";  // also folds -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

void Table::add_column(std::string name, std::vector<double> values) {
  if (!data.empty() && values.size() != rows())
    throw std::logic_error("table column '" + name + "' has the wrong length");
  columns.push_back(std::move(name));
  data.push_back(std::move(values));
}

std::string to_csv(const Table& t) {
  std::string out;
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    if (c) out += ',';
    out += t.columns[c];
  }
  out += '\n';
  for (std::size_t r = 0; r < t.rows(); ++r) {
    for (std::size_t c = 0; c < t.data.size(); ++c) {
      if (c) out += ',';
      out += format_double(t.data[c][r]);
    }
    out += '\n';
  }
  return out;
}

nlohmann::json to_json(const Table& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < t.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& col : t.data) row.push_back(col[r]);
    rows.push_back(std::move(row));
  }
  return {{"columns", t.columns}, {"rows", std::move(rows)}};
}

Table spectrum_table(const SpectrumTable& s) {
  Table t;
  t.add_column("omega", s.omega);
  t.add_column("wavelength", s.wavelength);
  t.add_column("reflectance", s.reflectance);
  t.add_column("transmittance", s.transmittance);
  return t;
}

nlohmann::json complex_json(Complex z) {
  return nlohmann::json::array({z.real() == 0.0 ? 0.0 : z.real(), z.imag() == 0.0 ? 0.0 : z.imag()});
}

nlohmann::json couplings_json(const CouplingSet& c) {
  nlohmann::json j;
  j["alpha_OF"] = complex_json(c.alpha_OF);
  j["alpha_OM"] = complex_json(c.alpha_OM);
  j["alpha_MF"] = complex_json(c.alpha_MF);
  j["beta_MF"] = complex_json(c.beta_MF);
  j["mho_prime"] = c.mho_prime;
  j["alpha_MF_parts"] = {{"prefactor", complex_json(c.alpha_MF_prefactor)},
                         {"fluct_part", complex_json(c.fluct_part)},
                         {"classical_part", complex_json(c.classical_part)}};
  return j;
}

nlohmann::json covariance_json(const CovarianceMatrix& V) {
  nlohmann::json values = nlohmann::json::array();
  for (Eigen::Index i = 0; i < V.dim(); ++i)
    for (Eigen::Index j = 0; j < V.dim(); ++j) values.push_back(V(i, j) == 0.0 ? 0.0 : V(i, j));
  nlohmann::json order = nlohmann::json::array();
  if (V.labels().empty()) {
    for (Eigen::Index i = 0; i < V.dim(); ++i) order.push_back("x" + std::to_string(i));
  } else {
    for (const auto& l : V.labels()) order.push_back(l);
  }
  return {{"quadrature_order", std::move(order)}, {"dim", V.dim()}, {"values", std::move(values)}};
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!f) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace mofsim
