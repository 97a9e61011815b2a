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

#include "remotepol/config.h"

#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

#include "remotepol/reaction.h"

namespace remotepol {

namespace {

std::string join(const std::vector<std::string>& errors) {
  std::string out;
  for (const auto& e : errors) {
    if (!out.empty()) out += "; ";
    out += e;
  }
  return out;
}

struct DoubleField {
  const char* name;
  double DeviceParams::*device = nullptr;
  double ReactionParams::*reaction = nullptr;
  double FrequencyGrid::*grid = nullptr;
};

const std::vector<DoubleField>& device_fields() {
  static const std::vector<DoubleField> fields = {
      {"omega_rc", &DeviceParams::omega_rc},
      {"omega_cav_rc", &DeviceParams::omega_cav_rc},
      {"omega_r", &DeviceParams::omega_r},
      {"omega_cav_r", &DeviceParams::omega_cav_r},
      {"g_rc_collective", &DeviceParams::g_rc_collective},
      {"g_r_collective", &DeviceParams::g_r_collective},
      {"g_cav", &DeviceParams::g_cav},
      {"delta", &DeviceParams::delta},
      {"gamma_rc", &DeviceParams::gamma_rc},
      {"gamma_r", &DeviceParams::gamma_r},
      {"kappa_rc", &DeviceParams::kappa_rc},
      {"kappa_r", &DeviceParams::kappa_r},
  };
  return fields;
}

const std::vector<DoubleField>& reaction_fields() {
  static const std::vector<DoubleField> fields = {
      {"omega_p", nullptr, &ReactionParams::omega_p},
      {"gamma_total_p", nullptr, &ReactionParams::gamma_total_p},
      {"branch_trans", nullptr, &ReactionParams::branch_trans},
      {"v2_gamma_trans", nullptr, &ReactionParams::v2_gamma_trans},
      {"gamma_rad", nullptr, &ReactionParams::gamma_rad},
      {"gamma_nonrad", nullptr, &ReactionParams::gamma_nonrad},
  };
  return fields;
}

const std::vector<DoubleField>& grid_fields() {
  static const std::vector<DoubleField> fields = {
      {"omega_min", nullptr, nullptr, &FrequencyGrid::omega_min},
      {"omega_max", nullptr, nullptr, &FrequencyGrid::omega_max},
  };
  return fields;
}

double* locate(ParameterSet& p, const DoubleField& f) {
  if (f.device) return &(p.device.*f.device);
  if (f.reaction) return &(p.reaction.*f.reaction);
  return &(p.grid.*f.grid);
}

const DoubleField* find_field(const std::vector<DoubleField>& fields,
                              std::string_view name) {
  for (const auto& f : fields)
    if (name == f.name) return &f;
  return nullptr;
}

const std::vector<DoubleField>* section_fields(std::string_view section) {
  if (section == "device") return &device_fields();
  if (section == "reaction") return &reaction_fields();
  if (section == "grid") return &grid_fields();
  return nullptr;
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> errors)
    : std::runtime_error("invalid configuration: " + join(errors)),
      errors_(std::move(errors)) {}

ParameterSet parse_config(const nlohmann::json& doc) {
  ParameterSet p = paper_defaults();
  std::vector<std::string> errors;
  if (!doc.is_object()) throw ConfigError({"config document must be a JSON object"});

  bool gamma_rad_given = false;
  for (const auto& [section, body] : doc.items()) {
    const auto* fields = section_fields(section);
    if (!fields) {
      errors.push_back("unknown section '" + section + "'");
      continue;
    }
    if (!body.is_object()) {
      errors.push_back("section '" + section + "' must be an object");
      continue;
    }
    for (const auto& [key, value] : body.items()) {
      const std::string path = section + "." + key;
      if (section == "grid" && key == "n_points") {
        if (!value.is_number_integer() || value.get<long long>() < 1) {
          errors.push_back(path + " must be a positive integer");
        } else {
          p.grid.n_points = value.get<std::size_t>();
        }
        continue;
      }
      const DoubleField* field = find_field(*fields, key);
      if (!field) {
        errors.push_back("unknown field '" + path + "'");
        continue;
      }
      if (!value.is_number()) {
        errors.push_back(path + " must be a number");
        continue;
      }
      *locate(p, *field) = value.get<double>();
      if (path == "reaction.gamma_rad") gamma_rad_given = true;
    }
  }
  if (!errors.empty()) throw ConfigError(std::move(errors));

  if (!gamma_rad_given)
    p.reaction.gamma_rad =
        calibrate_gamma_rad(kBarePeakAbsorbance, p.reaction.gamma_nonrad);

  auto invalid = validate(p);
  if (!invalid.empty()) throw ConfigError(std::move(invalid));
  return p;
}

ParameterSet load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError({"cannot open config file " + path.string()});
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError({path.string() + ": " + e.what()});
  }
  return parse_config(doc);
}

nlohmann::json to_json(const ParameterSet& p) {
  nlohmann::json doc;
  ParameterSet copy = p;
  for (const auto& f : device_fields()) doc["device"][f.name] = *locate(copy, f);
  for (const auto& f : reaction_fields()) doc["reaction"][f.name] = *locate(copy, f);
  for (const auto& f : grid_fields()) doc["grid"][f.name] = *locate(copy, f);
  doc["grid"]["n_points"] = p.grid.n_points;
  return doc;
}

void apply_override(ParameterSet& p, std::string_view assignment) {
  const auto eq = assignment.find('=');
  const auto dot = assignment.find('.');
  if (eq == std::string_view::npos || dot == std::string_view::npos || dot > eq)
    throw ConfigError({"override must look like section.field=value, got '" +
                       std::string(assignment) + "'"});
  const std::string section(assignment.substr(0, dot));
  const std::string key(assignment.substr(dot + 1, eq - dot - 1));
  const std::string text(assignment.substr(eq + 1));

  nlohmann::json value;
  try {
    value = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    throw ConfigError({section + "." + key + ": cannot parse value '" + text + "'"});
  }
  nlohmann::json doc = to_json(p);
  if (!doc.contains(section) || !doc[section].contains(key))
    throw ConfigError({"unknown field '" + section + "." + key + "'"});
  doc[section][key] = value;
  p = parse_config(doc);
}

}  // namespace remotepol
