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

#ifndef REMOTEPOL_CONFIG_H_
#define REMOTEPOL_CONFIG_H_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "remotepol/model.h"

namespace remotepol {

// Raised for malformed or invalid configuration; carries one message per
// offending field.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> errors);
  const std::vector<std::string>& errors() const { return errors_; }

 private:
  std::vector<std::string> errors_;
};

// Config document layout:
//   { "device": {...}, "reaction": {...}, "grid": {...} }
// Field names match the struct members. Missing fields keep their
// paper_defaults() value; unknown sections or fields are errors. If
// reaction.gamma_rad is absent it is recalibrated from gamma_nonrad.
ParameterSet parse_config(const nlohmann::json& doc);
ParameterSet load_config(const std::filesystem::path& path);

nlohmann::json to_json(const ParameterSet& p);

// Applies "section.field=value", e.g. "device.g_cav=30".
void apply_override(ParameterSet& p, std::string_view assignment);

}  // namespace remotepol

#endif  // REMOTEPOL_CONFIG_H_
