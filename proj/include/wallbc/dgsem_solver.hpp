#pragma once

// One-dimensional flux-differencing DGSEM on LGL nodes for the Euler
// equations, with slip-wall fluxes (or periodic coupling) at both ends and
// SSP-RK3 time stepping. The run records the semi-discrete entropy budget
//   dS/dt = -B_left - B_right - (interface dissipation),
// where B is the wall entropy term W^T (F* - f.n) + f_ent.n.

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "wallbc/euler_core.hpp"
#include "wallbc/lgl.hpp"
#include "wallbc/wall_fluxes.hpp"

namespace wallbc::dg {

enum class InterfaceFlux { EC, ECPlusLF };
enum class BoundaryType { Wall, Periodic };

std::string_view to_string(InterfaceFlux flux);
std::string_view to_string(BoundaryType type);

/// Named initial states on [0, L]:
///   uniform       constant rho, p, v_x = mach * c, v_y = tangential_velocity
///   density_wave  rho (1 + amplitude sin(2 pi x / L)), constant p and velocity
///   pulse         isentropic density bump of relative height `amplitude` and
///                 half-width `width` centred at L/2, uniform velocity
struct InitialCondition {
  std::string preset = "uniform";
  double rho = 1.0;
  double p = 1.0;
  double mach = 0.0;
  double tangential_velocity = 0.0;
  double amplitude = 0.0;
  double width = 0.1;
};

struct SolverConfig {
  int num_elements = 8;
  int poly_degree = 3;
  double gamma = 1.4;
  double cfl = 0.5;
  double end_time = 1.0;
  double domain_length = 1.0;
  BoundaryType boundary = BoundaryType::Wall;
  WallFluxKind wall_left = WallFluxKind::LaxFriedrichs;
  WallFluxKind wall_right = WallFluxKind::LaxFriedrichs;
  InterfaceFlux interface_flux = InterfaceFlux::ECPlusLF;
  InitialCondition initial_condition;
  /// When set, every step uses this dt (the last one is shortened to hit end_time).
  std::optional<double> fixed_dt;

  /// Throws InvalidConfig for out-of-range values.
  void validate() const;
};

struct SolutionField {
  int num_elements = 0;
  int poly_degree = 0;
  double dx = 0.0;
  double t = 0.0;
  std::vector<StateVector> values;  ///< element-major, (N + 1) nodes per element

  int nodes_per_element() const { return poly_degree + 1; }
  StateVector& at(int element, int node) { return values[element * nodes_per_element() + node]; }
  const StateVector& at(int element, int node) const {
    return values[element * nodes_per_element() + node];
  }
};

/// Wall entropy terms produced while evaluating the right-hand side.
struct BoundaryEntropy {
  double left = 0.0;
  double right = 0.0;
};

class DgOperator {
 public:
  explicit DgOperator(const SolverConfig& config);

  const SolverConfig& config() const { return config_; }
  const LglRule& rule() const { return rule_; }
  const Eigen::MatrixXd& derivative() const { return D_; }
  double dx() const { return config_.domain_length / config_.num_elements; }
  double node_coordinate(int element, int node) const;

  SolutionField initial_field() const;

  /// Semi-discrete time derivative. Throws InvalidState for unphysical nodes.
  SolutionField rhs(const SolutionField& field, BoundaryEntropy* boundary = nullptr) const;

  double total_entropy(const SolutionField& field) const;
  /// Quadrature integral of a conserved component (0 mass, 4 energy).
  double total(const SolutionField& field, int component) const;
  /// sum (dx/2) w_j W_j^T dudt_j.
  double entropy_rate(const SolutionField& field, const SolutionField& dudt) const;
  double stable_time_step(const SolutionField& field) const;

 private:
  StateVector interface_flux(const StateVector& left, const StateVector& right) const;

  SolverConfig config_;
  GasModel gas_;
  LglRule rule_;
  Eigen::MatrixXd D_;
};

/// Free-function form of DgOperator::rhs.
SolutionField dg_rhs(const SolutionField& field, const SolverConfig& config);

struct BudgetRow {
  double t = 0.0;
  double S_total = 0.0;
  double dSdt_discrete = 0.0;
  double boundary_left = 0.0;
  double boundary_right = 0.0;
  double defect = 0.0;  ///< dSdt + boundary_left + boundary_right
};

struct EntropyBudget {
  std::vector<BudgetRow> rows;  ///< one row per accepted step plus the final state
  double initial_mass = 0.0;
  double final_mass = 0.0;
  double initial_energy = 0.0;
  double final_energy = 0.0;
  /// Smallest wall entropy term over every stage evaluation of the run.
  double min_boundary_term = 0.0;
  int steps = 0;

  double max_abs_defect() const;
  double min_boundary_contribution() const;
  double entropy_drift() const;  ///< S(t_end) - S(0)
};

struct SimulationResult {
  EntropyBudget budget;
  SolutionField final_field;
};

/// SSP-RK3 integration to end_time. Throws BlowUpError on NaN or unphysical states.
SimulationResult run_simulation(const SolverConfig& config);

}  // namespace wallbc::dg
