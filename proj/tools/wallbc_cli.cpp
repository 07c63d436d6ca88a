// wallbc: normal-Mach sweeps of wall entropy production, the verification
// suite, and 1D DGSEM wall-boundary simulations.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error,
// 3 simulation blow-up.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wallbc/dgsem_solver.hpp"
#include "wallbc/solver_config.hpp"
#include "wallbc/sweep.hpp"
#include "wallbc/verification.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBlowUp = 3;

std::vector<wallbc::WallFluxKind> parse_kinds(const std::string& list) {
  std::vector<wallbc::WallFluxKind> kinds;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto kind = wallbc::parse_wall_flux_kind(item);
    if (!kind) throw wallbc::Error(wallbc::ErrorCode::InvalidRange, "unknown kind '" + item + "'");
    kinds.push_back(*kind);
  }
  return kinds;
}

struct SweepArgs {
  std::string preset = "full";
  std::optional<double> gamma, ma_min, ma_max, rho_c;
  std::optional<int> samples;
  std::string kinds;
  std::string out;
  std::string format = "csv";
};

int run_sweep(const SweepArgs& args) {
  wallbc::sweep::SweepSpec spec =
      args.preset == "zoom" ? wallbc::sweep::SweepSpec::zoom() : wallbc::sweep::SweepSpec::full_range();
  if (args.gamma) spec.gamma = *args.gamma;
  if (args.ma_min) spec.ma_min = *args.ma_min;
  if (args.ma_max) spec.ma_max = *args.ma_max;
  if (args.samples) spec.samples = *args.samples;
  if (args.rho_c) spec.rho_c = *args.rho_c;
  if (!args.kinds.empty()) spec.kinds = parse_kinds(args.kinds);

  const auto rows = wallbc::sweep::run_sweep(spec);
  auto emit = [&](std::ostream& os) {
    if (args.format == "svg") wallbc::sweep::write_svg(os, spec, rows);
    else wallbc::sweep::write_csv(os, rows);
  };
  if (args.out.empty() || args.out == "-") {
    emit(std::cout);
    return kExitOk;
  }
  std::ofstream file(args.out, std::ios::binary);
  if (!file) throw wallbc::Error(wallbc::ErrorCode::IoError, "cannot write '" + args.out + "'");
  emit(file);
  if (!file) throw wallbc::Error(wallbc::ErrorCode::IoError, "write failed for '" + args.out + "'");
  std::cerr << "wrote " << rows.size() << " rows to " << args.out << "\n";
  return kExitOk;
}

int run_verify(std::uint64_t seed, int trials, bool inject) {
  wallbc::verify::VerifyOptions options;
  options.seed = seed;
  options.trials = trials;
  options.inject_roe_threshold_fault = inject;
  const auto report = wallbc::verify::run_verification(options);
  wallbc::verify::print_report(std::cout, report);
  return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

int run_simulate(const std::string& config_path, const std::string& out) {
  const wallbc::dg::SolverConfig cfg = wallbc::dg::load_config(config_path);
  std::ostream& log = (out.empty() || out == "-") ? std::cerr : std::cout;
  try {
    const auto result = wallbc::dg::run_simulation(cfg);
    const auto& budget = result.budget;
    if (out.empty() || out == "-") wallbc::dg::write_budget_csv(std::cout, budget);
    else wallbc::dg::write_budget_csv(out, budget);
    char line[256];
    std::snprintf(line, sizeof line,
                  "steps=%d t_end=%.6g max|defect|=%.3e min_boundary_contribution=%.3e "
                  "entropy_drift=%.3e mass_change=%.3e blow_up=no\n",
                  budget.steps, result.final_field.t, budget.max_abs_defect(),
                  budget.min_boundary_term, budget.entropy_drift(),
                  budget.final_mass - budget.initial_mass);
    log << line;
    return kExitOk;
  } catch (const wallbc::BlowUpError& e) {
    std::cerr << "blow_up=yes " << e.what() << "\n";
    return kExitBlowUp;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wall boundary fluxes for the compressible Euler equations"};
  app.require_subcommand(1);

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Wall entropy production over a range of Ma_n");
  sweep->add_option("--preset", sweep_args.preset, "full (|Ma_n| <= 5) or zoom (|Ma_n| <= 1)")
      ->check(CLI::IsMember({"full", "zoom"}));
  sweep->add_option("--gamma", sweep_args.gamma, "adiabatic coefficient (default 1.4)");
  sweep->add_option("--ma-min", sweep_args.ma_min, "lower end of the Ma_n range");
  sweep->add_option("--ma-max", sweep_args.ma_max, "upper end of the Ma_n range");
  sweep->add_option("--samples", sweep_args.samples, "number of Ma_n samples (default 2001)");
  sweep->add_option("--rho-c", sweep_args.rho_c, "rho*c scale (default 1)");
  sweep->add_option("--kinds", sweep_args.kinds, "comma-separated wall flux kinds (default all)");
  sweep->add_option("--out", sweep_args.out, "output file (default stdout)");
  sweep->add_option("--format", sweep_args.format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));

  std::uint64_t seed = wallbc::verify::VerifyOptions{}.seed;
  int trials = 1;
  bool inject = false;
  auto* verify = app.add_subcommand("verify", "Run the property verification suite");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--trials", trials, "repetitions of the randomized properties")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--inject-roe-threshold-fault", inject)->group("");

  std::string config_path, sim_out;
  auto* simulate = app.add_subcommand("simulate", "Run a 1D DGSEM wall simulation");
  simulate->add_option("config", config_path, "solver configuration file")->required();
  simulate->add_option("--out", sim_out, "entropy budget CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sweep) return run_sweep(sweep_args);
    if (*verify) return run_verify(seed, trials, inject);
    if (*simulate) return run_simulate(config_path, sim_out);
  } catch (const wallbc::BlowUpError& e) {
    std::cerr << e.what() << "\n";
    return kExitBlowUp;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
