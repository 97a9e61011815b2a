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

#ifndef REMOTEPOL_OUTPUT_H_
#define REMOTEPOL_OUTPUT_H_

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "remotepol/hamiltonians.h"
#include "remotepol/reaction.h"
#include "remotepol/response.h"
#include "remotepol/sweep.h"

namespace remotepol {

// 17 significant digits, "%.17g".
std::string format_double(double v);

// Header `omega_cm1,value`.
std::string spectrum_csv(const Spectrum& s);

// One row per eigenstate: eigenvalue, then one fraction column per label.
std::string eigen_csv(const EigenSystem& e);

// One row per marker: state index, energy, species, position.
std::string markers_csv(const std::vector<StateMarkers>& markers);

// First row holds f_pump values, first column the coupling values. Empty
// fields mark failed cells.
std::string heatmap_csv(const SweepGrid& grid, bool omega_on_map = false);

// Scalar fields of EfficiencyResult.
nlohmann::json efficiency_json(const EfficiencyResult& result);

// JSON text with a trailing newline; numbers keep round-trip precision.
std::string dump_json(const nlohmann::json& doc);

void write_text(const std::filesystem::path& path, const std::string& content);

}  // namespace remotepol

#endif  // REMOTEPOL_OUTPUT_H_
