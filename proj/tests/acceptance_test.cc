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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "remotepol/cli.h"
#include "remotepol/hamiltonians.h"
#include "remotepol/model.h"
#include "remotepol/reaction.h"
#include "remotepol/response.h"
#include "remotepol/sweep.h"

namespace fs = std::filesystem;
using namespace remotepol;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(const std::string& id, const std::string& name, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
  std::printf("[%s] %s %s: %s (%.3f s)\n", o.pass ? "PASS" : "FAIL", id.c_str(), name.c_str(),
              o.detail.c_str(), dt.count());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

bool within(double v, double lo, double hi) { return v >= lo && v <= hi; }

double rel_diff(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

std::map<std::string, std::string> snapshot(const fs::path& d) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::directory_iterator(d)) {
    if (e.path().filename() == "manifest.json") continue;
    std::ifstream in(e.path(), std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    out[e.path().filename()] = ss.str();
  }
  return out;
}

}  // namespace

int main() {
  const ParameterSet p = paper_defaults();
  const DeviceParams& d = p.device;
  const ReactionParams& r = p.reaction;
  const FrequencyGrid& grid = p.grid;

  report("C1", "bare baseline", [&] {
    const double eta0 = bare_efficiency(d, r, d.omega_r);
    return Outcome{std::abs(eta0 / 0.0023 - 1.0) <= 0.05 && std::abs(r.gamma_rad - 0.0875) < 1e-12,
                   fmt("eta0(omega_R) = %.6g", eta0) + ", target 0.0023 +/- 5%"};
  });

  report("C2", "IVR rate", [&] {
    const double rate = ivr_rate(r, d.omega_r);
    return Outcome{std::abs(rate / 0.167 - 1.0) <= 0.01,
                   fmt("rate(omega_R) = %.6g", rate) + " cm^-1, target 0.167 +/- 1%"};
  });

  const EfficiencyResult head = headline_ratios(d, r, grid);

  report("C3", "remote enhancement", [&] {
    return Outcome{head.ratio_on_off > 10.0 && within(head.omega_on, 3383.0, 3387.0),
                   fmt("ratio_on_off = %.4g", head.ratio_on_off) + " (> 10), " +
                       fmt("omega_ON = %.2f", head.omega_on) + " (in [3383, 3387])"};
  });

  report("C4", "absolute enhancement", [&] {
    const Spectrum eta = efficiency(d, r, kReferencePumpFraction, grid);
    const SearchWindow w = omega_on_window(d, r);
    double peak = 0.0;
    for (std::size_t i = 0; i < eta.omega.size(); ++i)
      if (within(eta.omega[i], w.lo, w.hi)) peak = std::max(peak, eta.value[i]);
    const double eta0 = bare_efficiency(d, r, d.omega_r);
    return Outcome{peak > 10.0 * eta0, fmt("peak eta(0.3)/eta0 = %.4g", peak / eta0) + " (> 10)"};
  });

  report("C5", "sweep trends", [&] {
    const SweepGrid gc = run_sweep(
        d, r, default_sweep_spec(SweepAxis::kGCav, SweepQuantity::kRatioOnOff), grid);
    const SweepGrid grc = run_sweep(
        d, r, default_sweep_spec(SweepAxis::kGRcCollective, SweepQuantity::kRatioOnOff), grid);
    const std::size_t jf = gc.fpump_values.size() - 1;  // f_pump = 0.3
    const double at0 = gc.value(0, jf).value_or(NAN);
    const double at30 = gc.value(gc.axis_values.size() - 1, jf).value_or(NAN);
    // The 31-point g_RC axis has no node at 30, so that row is run on its own.
    SweepSpec at30_spec = default_sweep_spec(SweepAxis::kGRcCollective, SweepQuantity::kRatioOnOff);
    at30_spec.axis_min = at30_spec.axis_max = 30.0;
    at30_spec.axis_points = 1;
    const SweepGrid row30 = run_sweep(d, r, at30_spec, grid);
    const double rc0 = grc.value(0, jf).value_or(NAN);
    const double rc30 = row30.value(0, jf).value_or(NAN);
    const double rc80 = grc.value(grc.axis_values.size() - 1, jf).value_or(NAN);

    const bool a = at30 >= 20.0;
    const bool b = within(at0, 0.95, 1.05);
    const bool c = rc30 / rc0 <= 2.0 && rc0 / rc30 <= 2.0;
    const bool e = rc80 > 10.0;
    std::string detail = fmt("g_cav=30: %.4g", at30) + (a ? " (>= 20)" : " (< 20, required >= 20)") +
                         fmt("; g_cav=0: %.4g", at0) + (b ? " (in [0.95,1.05])" : " (outside)") +
                         fmt("; g_RC=30 vs 0: factor %.4g", rc30 / rc0) + (c ? " (<= 2)" : " (> 2)") +
                         fmt("; g_RC=80: %.4g", rc80) + (e ? " (> 10)" : " (<= 10)");
    return Outcome{a && b && c && e, detail};
  });

  report("C6a", "flux conservation at f_pump=0", [&] {
    const ResponseSet set = solve_response(d, 0.0, InputPort::kRCavity, grid);
    double worst = 0.0;
    for (const auto& a : set.amplitudes)
      worst = std::max(worst, std::abs(flux_balance(a, d, 0.0, InputPort::kRCavity).total() - 1));
    return Outcome{worst <= 1e-8, fmt("max |total - 1| = %.3g", worst) + " (<= 1e-8)"};
  });

  report("C6b", "time-domain oracle agreement", [&] {
    const unsigned seed = std::random_device{}();
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(grid.omega_min, grid.omega_max);
    double worst = 0.0;
    for (double f : {0.0, 0.3})
      for (int k = 0; k < 5; ++k) {
        const double w = u(rng);
        const auto fd = solve_response_at(d, f, InputPort::kRCavity, w);
        const auto td = time_domain_oracle(d, f, InputPort::kRCavity, w);
        for (auto [x, y] : {std::pair{td.r, fd.r}, {td.rc, fd.rc}, {td.cav_r, fd.cav_r},
                            {td.cav_rc, fd.cav_rc}})
          worst = std::max(worst, rel_diff(x, y));
      }
    return Outcome{worst <= 1e-6,
                   fmt("max relative difference = %.3g", worst) + " (<= 1e-6), seed " +
                       std::to_string(seed)};
  });

  report("C6c", "eigen residual", [&] {
    double worst = 0.0;
    for (const HermitianMatrix& h : {build_no_pump(d), build_pump(d, 0.0), build_pump(d, 0.3)}) {
      const EigenSystem e = diagonalize(h);
      const double norm = frobenius_norm(h.entries);
      for (std::size_t k = 0; k < h.size(); ++k) {
        double sq = 0.0;
        for (std::size_t i = 0; i < h.size(); ++i) {
          double hv = 0.0;
          for (std::size_t j = 0; j < h.size(); ++j) hv += h.entries(i, j) * e.eigenvectors(j, k);
          sq += std::pow(hv - e.eigenvalues[k] * e.eigenvectors(i, k), 2);
        }
        worst = std::max(worst, std::sqrt(sq) / norm);
      }
    }
    return Outcome{worst < 1e-9, fmt("max ||Hv - lv|| / ||H|| = %.3g", worst) + " (< 1e-9)"};
  });

  report("C6d", "block decoupling at g_cav=0", [&] {
    DeviceParams d0 = d;
    d0.g_cav = 0.0;
    const EigenSystem e = diagonalize(build_no_pump(d0));
    double worst = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
      const double rc = e.fraction(k, BasisLabel::kRc01) + e.fraction(k, BasisLabel::kCavRc);
      const double rr = e.fraction(k, BasisLabel::kCavR) + e.fraction(k, BasisLabel::kR);
      worst = std::max(worst, std::min(rc, rr));
    }
    return Outcome{worst < 1e-12, fmt("max cross-block fraction = %.3g", worst) + " (< 1e-12)"};
  });

  report("C6e", "zero pump reduces to no-pump", [&] {
    const HermitianMatrix hp = build_pump(d, 0.0);
    const HermitianMatrix hn = build_no_pump(d);
    double worst = 0.0;
    for (BasisLabel a : hn.labels)
      for (BasisLabel b : hn.labels)
        worst = std::max(worst, std::abs(hp.entries(hp.index_of(a), hp.index_of(b)) -
                                         hn.entries(hn.index_of(a), hn.index_of(b))));
    return Outcome{worst == 0.0, fmt("max shared-entry difference = %.3g", worst)};
  });

  report("C6f", "mixing fractions doubly stochastic", [&] {
    double worst = 0.0;
    for (double f : {0.0, 0.1, 0.3}) {
      const EigenSystem e = diagonalize(build_pump(d, f));
      const std::size_t n = e.labels.size();
      for (std::size_t k = 0; k < n; ++k) {
        double row = 0.0, col = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
          row += e.mixing_fractions[k][j];
          col += e.mixing_fractions[j][k];
        }
        worst = std::max({worst, std::abs(row - 1), std::abs(col - 1)});
      }
    }
    return Outcome{worst <= 1e-10, fmt("max |sum - 1| = %.3g", worst) + " (<= 1e-10)"};
  });

  report("C6g", "validity criterion brackets threshold", [&] {
    ReactionParams low = r;
    low.branch_trans = 0.05;
    const ValidityReport def = validity_criterion(d, r);
    const ValidityReport lo = validity_criterion(d, low);
    return Outcome{def.holds && !lo.holds,
                   fmt("branch 0.10: V^2 = %.4g", def.ivr_coupling_squared) +
                       fmt(" < %.4g", def.bound) + (def.holds ? " holds" : " fails") +
                       fmt("; branch 0.05: V^2 = %.4g", lo.ivr_coupling_squared) +
                       (lo.holds ? " holds" : " fails")};
  });

  report("C7", "determinism", [&] {
    const fs::path root =
        fs::temp_directory_path() / ("remotepol_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(root);
    const auto run_to = [&](const std::string& sub, std::vector<std::string> args) {
      args.insert(args.begin(), {"--out", (root / sub).string()});
      std::ostringstream sink;
      auto* old = std::cout.rdbuf(sink.rdbuf());
      const int code = cli::run(args);
      std::cout.rdbuf(old);
      return code;
    };
    const bool ran = run_to("eff1", {"efficiency"}) == 0 && run_to("eff2", {"efficiency"}) == 0 &&
                     run_to("sw1", {"sweep"}) == 0 && run_to("sw2", {"sweep"}) == 0 &&
                     run_to("swp", {"--threads", "4", "sweep"}) == 0;
    const bool eff = ran && snapshot(root / "eff1") == snapshot(root / "eff2");
    const bool rep = ran && snapshot(root / "sw1") == snapshot(root / "sw2");
    const bool par = ran && snapshot(root / "sw1") == snapshot(root / "swp");
    const std::size_t files = ran ? snapshot(root / "sw1").size() : 0;
    fs::remove_all(root);
    return Outcome{eff && rep && par,
                   std::string("efficiency repeat ") + (eff ? "identical" : "differs") +
                       ", sweep repeat " + (rep ? "identical" : "differs") +
                       ", sweep 1 vs 4 threads " + (par ? "identical" : "differs") + " (" +
                       std::to_string(files) + " sweep files)"};
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
