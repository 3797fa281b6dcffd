// SPDX-License-Identifier: Apache-2.0
//
// qsphere: exact and numerical certification of the spectral dimension of
// the quaternion spheres SP(2n)/SP(2n-2).

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qsphere/reports.hpp"
#include "qsphere/run_config.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

int emit(const std::string& payload, const std::string& outPath) {
  if (outPath.empty()) {
    std::cout << payload;
    return kExitOk;
  }
  std::ofstream out(outPath, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output path " << outPath << "\n";
    return kExitUsage;
  }
  out << payload;
  return kExitOk;
}

int run_suite(const std::string& name, const qsphere::RunConfig& cfg) {
  using qsphere::report::Json;
  if (cfg.format == "csv" && name != "spectrum") {
    std::cerr << "error: csv output is available for the spectrum suite only\n";
    return kExitUsage;
  }

  if (name == "spectrum" && cfg.format == "csv") {
    return emit(qsphere::report::spectrum_csv(cfg), cfg.outPath);
  }

  Json j;
  bool pass = true;
  if (name == "dim") {
    j = qsphere::report::dim_report(cfg);
    pass = j["pass"].get<bool>();
  } else if (name == "spectrum") {
    j = qsphere::report::spectrum_report(cfg);
    pass = j["pass"].get<bool>();
  } else if (name == "zeta") {
    j = qsphere::report::zeta_report(cfg);
    pass = j["pass"].get<bool>();
  } else if (name == "supnorm") {
    j = qsphere::report::supnorm_report(cfg);
    pass = j["pass"].get<bool>();
  } else if (name == "hwv") {
    j = qsphere::report::hwv_report(cfg);
    pass = j["pass"].get<bool>();
  } else if (name == "path") {
    j = qsphere::report::path_report(cfg);
    pass = j["pass"].get<bool>();
  } else if (name == "verify-all") {
    j = qsphere::report::verify_all(cfg, pass);
    for (const auto& crit : j["criteria"]) {
      std::cerr << (crit["pass"].get<bool>() ? "[PASS] " : "[FAIL] ")
                << crit["criterion"].get<std::string>() << "\n";
    }
  }

  const int rc = emit(j.dump(2) + "\n", cfg.outPath);
  if (rc != kExitOk) return rc;
  if (!pass) {
    std::cerr << "verification failed in suite " << name << "\n";
    return kExitVerificationFailure;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  qsphere::RunConfig cfg;

  CLI::App app{
      "Certification toolkit for the spectral dimension of quaternion spheres"};
  app.fallthrough();
  app.require_subcommand(1);

  app.add_option("--rank", cfg.rank, "Symplectic rank n (>= 2)")
      ->check(CLI::Range(2, 6))
      ->capture_default_str();
  app.add_option("--k-max", cfg.kMax, "Spectrum cutoff (0 selects 4n+8)")
      ->check(CLI::Range(0, 100000))
      ->capture_default_str();
  app.add_option("--zeta-k", cfg.zetaCutoffs,
                 "Zeta partial-sum cutoffs (default 125 250 500 1000 2000)");
  app.add_option("--grid", cfg.gridPoints, "Grid points per axis on the search slice")
      ->check(CLI::Range(8, 100000))
      ->capture_default_str();
  app.add_option("--refine", cfg.refineRounds, "Grid refinement rounds")
      ->check(CLI::Range(0, 32))
      ->capture_default_str();
  app.add_option("--lambda-cap", cfg.lambdaCap, "First-entry cap for symbolic suites")
      ->check(CLI::Range(1, 16))
      ->capture_default_str();
  app.add_option("--gamma-cap", cfg.gammaCap, "g1 cap for path suites")
      ->check(CLI::Range(1, 200))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Random seed for the seeded suites")
      ->envname("QSPHERE_SEED")
      ->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", cfg.outPath, "Output path (default stdout)")
      ->envname("QSPHERE_OUT");
  app.add_flag("--parallel", cfg.parallel, "Distribute independent suite items");
  app.add_flag("--timings", cfg.includeTimings,
               "Include wall-clock timings (makes reports non-reproducible)");

  app.add_subcommand("dim", "Summability report with the spectral dimension");
  app.add_subcommand("spectrum", "Exact level multiplicities M(k)");
  app.add_subcommand("zeta", "Zeta partial-sum tables and tail checks");
  app.add_subcommand("supnorm", "Maximizer, ratio-cap and compactness checks");
  app.add_subcommand("hwv", "Highest-weight-vector verification and ranks");
  app.add_subcommand("path", "Path construction and growth bounds");
  app.add_subcommand("verify-all", "Run every verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return run_suite(app.get_subcommands().front()->get_name(), cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (...) {
    std::cerr << "error: unknown failure\n";
    return kExitVerificationFailure;
  }
}
