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

#include "remotepol/cli.h"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "remotepol/config.h"
#include "remotepol/hamiltonians.h"
#include "remotepol/output.h"
#include "remotepol/reaction.h"
#include "remotepol/svg.h"

namespace remotepol::cli {

namespace {

// Short label for file names and titles: 0.3 -> "0.3", 0 -> "0".
std::string short_number(double f) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", f);
  return buf;
}

void require_validity(const RunContext& ctx) {
  const ValidityReport v = validity_criterion(ctx.params.device, ctx.params.reaction);
  if (v.holds || ctx.waive_validity) return;
  std::ostringstream msg;
  msg << "IVR validity criterion fails: V^2 = " << short_number(v.ivr_coupling_squared)
      << " is not below " << short_number(v.bound) << " (use --waive-validity to proceed)";
  throw ConfigError({msg.str()});
}

void require_pump_fractions(const std::vector<double>& fs) {
  for (double f : fs) check_pump_fraction(f);
}

class OutputSet {
 public:
  explicit OutputSet(const std::filesystem::path& dir) : dir_(dir) {}
  void add(const std::string& name, const std::string& content) {
    write_text(dir_ / name, content);
    names_.push_back(name);
  }
  std::vector<std::string> take() { return std::move(names_); }

 private:
  std::filesystem::path dir_;
  std::vector<std::string> names_;
};

svg::Series series_of(const Spectrum& s, std::size_t index, std::string label) {
  svg::Series out;
  out.x = s.omega;
  out.y = s.value;
  out.color = svg::palette(index);
  out.label = std::move(label);
  return out;
}

std::vector<svg::VerticalLine> bare_markers(const DeviceParams& d) {
  return {{d.omega_rc, "#1a237e", "omega_RC"}, {d.omega_r, "#8b0000", "omega_R"}};
}

// |P> lineshape scaled to `height` for display only.
svg::Series product_lineshape(const ReactionParams& r, const FrequencyGrid& grid,
                              double height) {
  svg::Series s;
  s.color = "#e6b800";
  s.dashed = true;
  s.label = "|P> (arb.)";
  const double peak = ivr_rate(r, r.omega_p);
  for (std::size_t i = 0; i < grid.n_points; ++i) {
    s.x.push_back(grid.at(i));
    s.y.push_back(height * ivr_rate(r, grid.at(i)) / peak);
  }
  return s;
}

double max_value(const std::vector<Spectrum>& spectra) {
  double m = 0.0;
  for (const auto& s : spectra)
    for (double v : s.value) m = std::max(m, v);
  return m;
}

}  // namespace

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw UsageError("empty entry in list '" + text + "'");
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("not a number: '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("f_pump list must not be empty");
  return out;
}

std::vector<std::string> run_spectrum(const RunContext& ctx, const SpectrumOptions& opts) {
  if (opts.f_pumps.empty()) throw UsageError("f_pump list must not be empty");
  require_pump_fractions(opts.f_pumps);
  require_validity(ctx);
  const auto& d = ctx.params.device;
  const std::string port = std::string(port_name(opts.port));

  OutputSet files(ctx.out_dir);
  svg::LinePlot plot;
  plot.x_label = "probe frequency (cm^-1)";
  plot.y_label = "absorbance";
  plot.title = opts.port == InputPort::kRCavity ? "Probe absorption into R"
                                                 : "Pump absorption into RC and R (RC-cavity input)";
  std::vector<Spectrum> all;
  for (std::size_t k = 0; k < opts.f_pumps.size(); ++k) {
    const double f = opts.f_pumps[k];
    const ResponseSet resp = solve_response(d, f, opts.port, ctx.params.grid, ctx.threads);
    const std::string stem = "spectrum_" + port + "_fpump_" + short_number(f);
    const Spectrum r = absorbance_r(resp, d);
    if (opts.port == InputPort::kRCavity) {
      files.add(stem + ".csv", spectrum_csv(r));
      plot.series.push_back(series_of(r, k, "f_pump = " + short_number(f)));
    } else {
      const Spectrum rc = absorbance_rc(resp, d);
      files.add(stem + "_absorbance_rc.csv", spectrum_csv(rc));
      files.add(stem + "_absorbance_r.csv", spectrum_csv(r));
      plot.series.push_back(series_of(rc, 2 * k, "RC, f_pump = " + short_number(f)));
      plot.series.push_back(series_of(r, 2 * k + 1, "R, f_pump = " + short_number(f)));
      all.push_back(rc);
    }
    all.push_back(r);
  }
  plot.markers = bare_markers(d);
  if (opts.port == InputPort::kRCavity)
    plot.series.push_back(product_lineshape(ctx.params.reaction, ctx.params.grid,
                                            0.5 * max_value(all)));
  files.add("spectrum_" + port + ".svg", svg::render(plot));
  return files.take();
}

std::vector<std::string> run_efficiency(const RunContext& ctx, const EfficiencyOptions& opts) {
  if (opts.f_pumps.empty()) throw UsageError("f_pump list must not be empty");
  require_pump_fractions(opts.f_pumps);
  check_pump_fraction(opts.fpump_max);
  if (!(opts.fpump_step > 0.0)) throw std::out_of_range("fpump step must be > 0");
  require_validity(ctx);
  const auto& [d, r, grid] = ctx.params;

  OutputSet files(ctx.out_dir);
  const EfficiencyResult head = headline_ratios(d, r, grid, ctx.threads);
  for (const auto& w : head.warnings) std::cerr << "warning: " << w << "\n";

  svg::LinePlot rel;
  rel.title = "Relative reaction efficiency";
  rel.x_label = "probe frequency (cm^-1)";
  rel.y_label = "eta / eta0";
  for (std::size_t k = 0; k < opts.f_pumps.size(); ++k) {
    const double f = opts.f_pumps[k];
    Spectrum eta = efficiency(d, r, f, grid, ctx.threads);
    files.add("eta_fpump_" + short_number(f) + ".csv", spectrum_csv(eta));
    for (double& v : eta.value) v /= head.eta0;
    files.add("eta_rel_fpump_" + short_number(f) + ".csv", spectrum_csv(eta));
    rel.series.push_back(series_of(eta, k, "f_pump = " + short_number(f)));
  }
  rel.markers = {{head.omega_on, "#e377c2", "omega_ON"}};
  files.add("eta_rel.svg", svg::render(rel));

  // Enhancement at omega_ON versus pump fraction.
  std::string curve = "f_pump,ratio_on_off\n";
  svg::Series enhancement;
  enhancement.color = svg::palette(0);
  const auto steps = std::size_t(std::floor(opts.fpump_max / opts.fpump_step + 1e-9));
  for (std::size_t i = 0; i <= steps; ++i) {
    const double f = std::min(opts.fpump_max, double(i) * opts.fpump_step);
    const double ratio = efficiency_at(d, r, f, head.omega_on) / head.eta_off_value;
    curve += format_double(f) + "," + format_double(ratio) + "\n";
    enhancement.x.push_back(f);
    enhancement.y.push_back(ratio);
  }
  files.add("enhancement_vs_fpump.csv", curve);
  svg::LinePlot enh;
  enh.title = "Enhancement eta_ON / eta_OFF at omega_ON = " + short_number(head.omega_on) +
              " cm^-1";
  enh.x_label = "f_pump";
  enh.y_label = "eta_ON / eta_OFF";
  enh.series.push_back(std::move(enhancement));
  files.add("enhancement.svg", svg::render(enh));

  files.add("efficiency.json", dump_json(efficiency_json(head)));
  return files.take();
}

std::vector<std::string> run_sweep_command(const RunContext& ctx, const SweepOptions& opts) {
  if (opts.specs.empty()) throw UsageError("no sweep requested");
  for (const auto& spec : opts.specs) {
    const auto errors = validate(spec);
    if (!errors.empty()) throw ConfigError(errors);
  }
  require_validity(ctx);

  OutputSet files(ctx.out_dir);
  for (const auto& spec : opts.specs) {
    const SweepGrid grid = run_sweep(ctx.params.device, ctx.params.reaction, spec,
                                     ctx.params.grid, ctx.threads);
    const std::string stem =
        "sweep_" + std::string(axis_name(spec.axis)) + "_" + std::string(quantity_name(spec.quantity));
    files.add(stem + ".csv", heatmap_csv(grid));
    files.add(stem + "_omega_on.csv", heatmap_csv(grid, true));

    svg::Heatmap map;
    map.title = std::string(quantity_name(spec.quantity)) + " (log10 color scale)";
    map.x_label = "f_pump";
    map.y_label = spec.axis == SweepAxis::kGCav ? "g_cav (cm^-1)" : "g_RC sqrt(N_RC) (cm^-1)";
    map.x = grid.fpump_values;
    map.y = grid.axis_values;
    map.values = grid.values;
    map.log_scale = true;
    files.add(stem + ".svg", svg::render(map));
  }
  return files.take();
}

std::vector<std::string> run_eigen(const RunContext& ctx, const EigenOptions& opts) {
  check_pump_fraction(opts.f_pump);
  require_validity(ctx);
  const DeviceParams& d = ctx.params.device;
  DeviceParams uncoupled = d;
  uncoupled.g_cav = 0.0;

  struct Case {
    const char* name;
    EigenSystem system;
  };
  const Case cases[] = {
      {"gcav0", diagonalize(build_no_pump(uncoupled))},
      {"coupled", diagonalize(build_no_pump(d))},
      {"pumped", diagonalize(build_pump(d, opts.f_pump))},
  };

  OutputSet files(ctx.out_dir);
  for (const auto& c : cases) {
    files.add(std::string("eigen_") + c.name + ".csv", eigen_csv(c.system));
    files.add(std::string("markers_") + c.name + ".csv", markers_csv(gradient_markers(c.system)));
  }
  return files.take();
}

namespace {

nlohmann::json options_json(const SpectrumOptions& o) {
  return {{"f_pumps", o.f_pumps}, {"port", port_name(o.port)}};
}
nlohmann::json options_json(const EfficiencyOptions& o) {
  return {{"f_pumps", o.f_pumps}, {"fpump_max", o.fpump_max}, {"fpump_step", o.fpump_step}};
}
nlohmann::json options_json(const SweepOptions& o) {
  nlohmann::json specs = nlohmann::json::array();
  for (const auto& s : o.specs)
    specs.push_back({{"axis", axis_name(s.axis)},
                     {"axis_min", s.axis_min},
                     {"axis_max", s.axis_max},
                     {"axis_points", s.axis_points},
                     {"fpump_min", s.fpump_min},
                     {"fpump_max", s.fpump_max},
                     {"fpump_points", s.fpump_points},
                     {"quantity", quantity_name(s.quantity)}});
  return {{"specs", specs}};
}
nlohmann::json options_json(const EigenOptions& o) { return {{"f_pump", o.f_pump}}; }

InputPort parse_port(const std::string& name) {
  if (name == "r") return InputPort::kRCavity;
  if (name == "rc") return InputPort::kRcCavity;
  throw UsageError("unknown port '" + name + "' (expected r or rc)");
}

SweepSpec spec_from_json(const nlohmann::json& j) {
  SweepSpec s;
  auto axis = parse_axis(j.at("axis").get<std::string>());
  auto quantity = parse_quantity(j.at("quantity").get<std::string>());
  if (!axis || !quantity) throw UsageError("bad sweep spec in manifest");
  s.axis = *axis;
  s.quantity = *quantity;
  s.axis_min = j.at("axis_min");
  s.axis_max = j.at("axis_max");
  s.axis_points = j.at("axis_points");
  s.fpump_min = j.at("fpump_min");
  s.fpump_max = j.at("fpump_max");
  s.fpump_points = j.at("fpump_points");
  return s;
}

struct Invocation {
  std::string subcommand;
  nlohmann::json options;
};

std::vector<std::string> dispatch(const RunContext& ctx, const Invocation& inv) {
  const auto& o = inv.options;
  if (inv.subcommand == "spectrum") {
    SpectrumOptions opts;
    opts.f_pumps = o.at("f_pumps").get<std::vector<double>>();
    opts.port = parse_port(o.at("port").get<std::string>());
    return run_spectrum(ctx, opts);
  }
  if (inv.subcommand == "efficiency") {
    EfficiencyOptions opts;
    opts.f_pumps = o.at("f_pumps").get<std::vector<double>>();
    opts.fpump_max = o.at("fpump_max");
    opts.fpump_step = o.at("fpump_step");
    return run_efficiency(ctx, opts);
  }
  if (inv.subcommand == "sweep") {
    SweepOptions opts;
    for (const auto& s : o.at("specs")) opts.specs.push_back(spec_from_json(s));
    return run_sweep_command(ctx, opts);
  }
  if (inv.subcommand == "eigen") {
    EigenOptions opts;
    opts.f_pump = o.at("f_pump");
    return run_eigen(ctx, opts);
  }
  throw UsageError("unknown subcommand '" + inv.subcommand + "'");
}

void write_manifest(const RunContext& ctx, const Invocation& inv,
                    const std::vector<std::string>& outputs, double seconds) {
  nlohmann::json m;
  m["tool"] = "remotepol";
  m["version"] = kVersion;
  m["subcommand"] = inv.subcommand;
  m["options"] = inv.options;
  m["config_path"] = ctx.config_path;
  m["resolved_parameters"] = to_json(ctx.params);
  m["output_dir"] = ctx.out_dir.string();
  m["threads"] = ctx.threads;
  m["waive_validity"] = ctx.waive_validity;
  m["outputs"] = outputs;
  m["wall_clock_seconds"] = seconds;
  write_text(ctx.out_dir / "manifest.json", dump_json(m));
}

int execute(RunContext ctx, const Invocation& inv) {
  const auto start = std::chrono::steady_clock::now();
  const auto outputs = dispatch(ctx, inv);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  write_manifest(ctx, inv, outputs, elapsed.count());
  for (const auto& name : outputs) std::cout << (ctx.out_dir / name).string() << "\n";
  return kExitOk;
}

std::filesystem::path resolve_out_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv(kOutDirEnv); env && *env) return env;
  return "out";
}

int run_parsed(CLI::App& app, const std::vector<std::string>& args);

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"Two-cavity vibrational polariton remote-control simulator"};
  return run_parsed(app, args);
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args);
}

namespace {

int run_parsed(CLI::App& app, const std::vector<std::string>& args) {
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  std::string config_path;
  std::string out_flag;
  int threads = 1;
  bool waive = false;
  std::vector<std::string> overrides;
  app.add_option("--config", config_path, "JSON config with device/reaction/grid sections");
  app.add_option("--out", out_flag, std::string("output directory (default $") + kOutDirEnv +
                                        " or ./out)");
  app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--set", overrides, "override a config field, e.g. device.g_cav=30");
  app.add_flag("--waive-validity", waive, "run even if the IVR validity criterion fails");

  std::string fpump_list = "0,0.1,0.2,0.3";
  std::string port = "r";
  auto* spectrum = app.add_subcommand("spectrum", "probe (or pump-port) absorbance spectra");
  spectrum->add_option("--fpump", fpump_list, "comma-separated pump fractions");
  spectrum->add_option("--port", port, "input port: r (probe) or rc (pump)");

  std::string eff_fpumps = "0,0.1,0.2,0.3";
  double fpump_max = 0.3;
  double fpump_step = 0.01;
  auto* eff = app.add_subcommand("efficiency", "reaction efficiency spectra and headline ratios");
  eff->add_option("--fpump", eff_fpumps, "comma-separated pump fractions for spectra");
  eff->add_option("--fpump-max", fpump_max, "upper end of the enhancement curve");
  eff->add_option("--fpump-step", fpump_step, "step of the enhancement curve");

  std::string axis = "all";
  std::string quantity = "all";
  std::optional<double> axis_min, axis_max, sw_fmin, sw_fmax;
  std::optional<std::size_t> axis_points, fpump_points;
  auto* sweep = app.add_subcommand("sweep", "efficiency-ratio heatmaps over coupling x f_pump");
  sweep->add_option("--axis", axis, "g_cav, g_rc_collective or all");
  sweep->add_option("--quantity", quantity, "ratio_on_off, ratio_on_bare or all");
  sweep->add_option("--axis-min", axis_min);
  sweep->add_option("--axis-max", axis_max);
  sweep->add_option("--axis-points", axis_points);
  sweep->add_option("--fpump-min", sw_fmin);
  sweep->add_option("--fpump-max", sw_fmax);
  sweep->add_option("--fpump-points", fpump_points);

  double eigen_fpump = 0.3;
  auto* eigen = app.add_subcommand("eigen", "eigenstates, mixing fractions and gradient markers");
  eigen->add_option("--fpump", eigen_fpump, "pump fraction for the pumped case");

  auto* validate_cmd = app.add_subcommand("validate", "check a config and the IVR criterion");

  std::string manifest_path;
  auto* replay = app.add_subcommand("replay", "re-run the command recorded in a manifest");
  replay->add_option("manifest", manifest_path)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    RunContext ctx;
    ctx.threads = threads;
    ctx.waive_validity = waive;
    ctx.out_dir = resolve_out_dir(out_flag);
    ctx.config_path = config_path;

    if (*replay) {
      std::ifstream in(manifest_path);
      if (!in) throw ConfigError({"cannot open manifest " + manifest_path});
      const nlohmann::json m = nlohmann::json::parse(in);
      ctx.params = parse_config(m.at("resolved_parameters"));
      ctx.config_path = m.value("config_path", "");
      ctx.waive_validity = waive || m.value("waive_validity", false);
      return execute(ctx, {m.at("subcommand").get<std::string>(), m.at("options")});
    }

    ctx.params = config_path.empty() ? paper_defaults() : load_config(config_path);
    for (const auto& o : overrides) apply_override(ctx.params, o);

    if (*validate_cmd) {
      const ValidityReport v = validity_criterion(ctx.params.device, ctx.params.reaction);
      std::cout << "config: ok\n"
                << "validity: V^2 = " << short_number(v.ivr_coupling_squared)
                << ", bound = " << short_number(v.bound) << " -> "
                << (v.holds ? "holds" : "fails") << "\n";
      return v.holds || waive ? kExitOk : kExitValidation;
    }

    Invocation inv;
    if (*spectrum) {
      SpectrumOptions opts;
      opts.f_pumps = parse_number_list(fpump_list);
      opts.port = parse_port(port);
      inv = {"spectrum", options_json(opts)};
    } else if (*eff) {
      EfficiencyOptions opts;
      opts.f_pumps = parse_number_list(eff_fpumps);
      opts.fpump_max = fpump_max;
      opts.fpump_step = fpump_step;
      inv = {"efficiency", options_json(opts)};
    } else if (*sweep) {
      SweepOptions opts;
      std::vector<SweepAxis> axes;
      std::vector<SweepQuantity> quantities;
      if (axis == "all") {
        axes = {SweepAxis::kGCav, SweepAxis::kGRcCollective};
      } else if (auto a = parse_axis(axis)) {
        axes = {*a};
      } else {
        throw UsageError("unknown axis '" + axis + "' (expected g_cav, g_rc_collective or all)");
      }
      if (quantity == "all") {
        quantities = {SweepQuantity::kRatioOnOff, SweepQuantity::kRatioOnBare};
      } else if (auto q = parse_quantity(quantity)) {
        quantities = {*q};
      } else {
        throw UsageError("unknown quantity '" + quantity + "'");
      }
      if (axes.size() > 1 && (axis_min || axis_max || axis_points))
        throw UsageError("--axis-min/--axis-max/--axis-points need a single --axis");
      for (SweepAxis a : axes) {
        for (SweepQuantity q : quantities) {
          SweepSpec s = default_sweep_spec(a, q);
          if (axis_min) s.axis_min = *axis_min;
          if (axis_max) s.axis_max = *axis_max;
          if (axis_points) s.axis_points = *axis_points;
          if (sw_fmin) s.fpump_min = *sw_fmin;
          if (sw_fmax) s.fpump_max = *sw_fmax;
          if (fpump_points) s.fpump_points = *fpump_points;
          opts.specs.push_back(s);
        }
      }
      inv = {"sweep", options_json(opts)};
    } else {
      EigenOptions opts;
      opts.f_pump = eigen_fpump;
      inv = {"eigen", options_json(opts)};
    }
    return execute(ctx, inv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    for (const auto& msg : e.errors()) std::cerr << "error: " << msg << "\n";
    return kExitValidation;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace

}  // namespace remotepol::cli
