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

#ifndef REMOTEPOL_CLI_H_
#define REMOTEPOL_CLI_H_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "remotepol/model.h"
#include "remotepol/response.h"
#include "remotepol/sweep.h"

namespace remotepol::cli {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kOutDirEnv = "REMOTEPOL_OUT_DIR";

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitUsage = 2,
  kExitInternal = 3,
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunContext {
  ParameterSet params;
  std::filesystem::path out_dir = "out";
  std::string config_path;  // empty when running on defaults
  int threads = 1;
  bool waive_validity = false;
};

struct SpectrumOptions {
  std::vector<double> f_pumps = {0.0, 0.1, 0.2, 0.3};
  InputPort port = InputPort::kRCavity;
};

struct EfficiencyOptions {
  std::vector<double> f_pumps = {0.0, 0.1, 0.2, 0.3};
  double fpump_max = 0.3;  // range of the enhancement-vs-f_pump curve
  double fpump_step = 0.01;
};

struct SweepOptions {
  std::vector<SweepSpec> specs;
};

struct EigenOptions {
  double f_pump = 0.3;
};

// Each command writes its outputs into ctx.out_dir and returns their paths
// (relative to out_dir). Bad parameters throw std::out_of_range or
// ConfigError; a failing IVR validity criterion throws ConfigError unless
// ctx.waive_validity is set.
std::vector<std::string> run_spectrum(const RunContext& ctx, const SpectrumOptions& opts);
std::vector<std::string> run_efficiency(const RunContext& ctx, const EfficiencyOptions& opts);
std::vector<std::string> run_sweep_command(const RunContext& ctx, const SweepOptions& opts);
std::vector<std::string> run_eigen(const RunContext& ctx, const EigenOptions& opts);

// Parses "0,0.1,0.3"; throws UsageError on an empty list or bad number.
std::vector<double> parse_number_list(const std::string& text);

// Full command line entry point; returns the process exit code. Messages go
// to stdout / stderr.
int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);  // args exclude the program name

}  // namespace remotepol::cli

#endif  // REMOTEPOL_CLI_H_
