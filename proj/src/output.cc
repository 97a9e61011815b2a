/*
 * Copyright 2026 The remotepol Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "remotepol/output.h"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace remotepol {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string spectrum_csv(const Spectrum& s) {
  std::string out = "omega_cm1,value\n";
  for (std::size_t i = 0; i < s.omega.size(); ++i)
    out += format_double(s.omega[i]) + "," + format_double(s.value[i]) + "\n";
  return out;
}

std::string eigen_csv(const EigenSystem& e) {
  std::string out = "eigenvalue_cm1";
  for (BasisLabel l : e.labels) out += "," + std::string(label_name(l));
  out += "\n";
  for (std::size_t k = 0; k < e.eigenvalues.size(); ++k) {
    out += format_double(e.eigenvalues[k]);
    for (double f : e.mixing_fractions[k]) out += "," + format_double(f);
    out += "\n";
  }
  return out;
}

std::string markers_csv(const std::vector<StateMarkers>& markers) {
  std::string out = "state,energy_cm1,species,position\n";
  for (const auto& sm : markers)
    for (const auto& m : sm.markers)
      out += std::to_string(sm.state) + "," + format_double(sm.energy) + "," +
             std::string(label_name(m.species)) + "," + std::to_string(m.position) + "\n";
  return out;
}

std::string heatmap_csv(const SweepGrid& grid, bool omega_on_map) {
  std::string out = std::string(axis_name(grid.spec.axis)) + "\\f_pump";
  for (double f : grid.fpump_values) out += "," + format_double(f);
  out += "\n";
  for (std::size_t i = 0; i < grid.axis_values.size(); ++i) {
    out += format_double(grid.axis_values[i]);
    for (std::size_t j = 0; j < grid.fpump_values.size(); ++j) {
      const auto& cell = omega_on_map ? grid.omega_on(i, j) : grid.value(i, j);
      out += ",";
      if (cell) out += format_double(*cell);
    }
    out += "\n";
  }
  return out;
}

nlohmann::json efficiency_json(const EfficiencyResult& r) {
  nlohmann::json doc;
  doc["f_pump_on"] = r.f_pump_on;
  doc["omega_on"] = r.omega_on;
  doc["eta_on"] = r.eta_on;
  doc["eta_off"] = r.eta_off_value;
  doc["eta0"] = r.eta0;
  doc["ratio_on_off"] = r.ratio_on_off;
  doc["ratio_on_bare"] = r.ratio_on_bare;
  doc["warnings"] = r.warnings;
  return doc;
}

std::string dump_json(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

void write_text(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace remotepol
