#include "wallbc/dgsem_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "wallbc/ec_flux.hpp"

namespace wallbc::dg {

namespace {

const Vec3 kPlusX = Vec3::UnitX();
const Vec3 kMinusX = -Vec3::UnitX();

struct InvalidNode {
  int element;
  int node;
  std::string detail;
};

std::optional<InvalidNode> find_invalid(const SolutionField& field, double gamma) {
  for (int e = 0; e < field.num_elements; ++e) {
    for (int j = 0; j < field.nodes_per_element(); ++j) {
      const StateVector& u = field.at(e, j);
      if (!u.allFinite()) return InvalidNode{e, j, "non-finite state"};
      if (!(u[0] > 0.0)) {
        std::ostringstream os;
        os << "density " << u[0];
        return InvalidNode{e, j, os.str()};
      }
      const double p = wallbc::kernels::pressure(u, gamma);
      if (!(p > 0.0)) {
        std::ostringstream os;
        os << "pressure " << p;
        return InvalidNode{e, j, os.str()};
      }
    }
  }
  return std::nullopt;
}

void axpy(SolutionField& out, double a, const SolutionField& x, double b,
          const SolutionField& y) {
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    out.values[i] = a * x.values[i] + b * y.values[i];
  }
}

}  // namespace

std::string_view to_string(InterfaceFlux flux) {
  return flux == InterfaceFlux::EC ? "EC" : "ECPlusLF";
}

std::string_view to_string(BoundaryType type) {
  return type == BoundaryType::Wall ? "wall" : "periodic";
}

void SolverConfig::validate() const {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::InvalidConfig, what); };
  if (num_elements < 1) fail("num_elements must be >= 1");
  if (poly_degree < 1) fail("poly_degree must be >= 1");
  GasModel{gamma};
  if (!(cfl > 0.0 && cfl <= 1.0)) fail("cfl must lie in (0, 1]");
  if (!(end_time >= 0.0)) fail("end_time must be >= 0");
  if (!(domain_length > 0.0)) fail("domain_length must be > 0");
  if (fixed_dt && !(*fixed_dt > 0.0)) fail("dt must be > 0");
  const InitialCondition& ic = initial_condition;
  if (ic.preset != "uniform" && ic.preset != "density_wave" && ic.preset != "pulse") {
    fail("unknown initial condition preset '" + ic.preset + "'");
  }
  if (!(ic.rho > 0.0) || !(ic.p > 0.0)) fail("initial rho and p must be positive");
  if (ic.preset == "density_wave" && !(std::abs(ic.amplitude) < 1.0)) {
    fail("density_wave amplitude must satisfy |amplitude| < 1");
  }
  if (ic.preset == "pulse" && !(ic.width > 0.0 && ic.amplitude > -1.0)) {
    fail("pulse needs width > 0 and amplitude > -1");
  }
}

DgOperator::DgOperator(const SolverConfig& config)
    : config_(config), gas_(config.gamma) {
  config_.validate();
  rule_ = lgl_nodes_weights(config_.poly_degree);
  D_ = derivative_matrix(rule_.nodes);
}

double DgOperator::node_coordinate(int element, int node) const {
  return dx() * (element + 0.5 * (1.0 + rule_.nodes[node]));
}

SolutionField DgOperator::initial_field() const {
  const InitialCondition& ic = config_.initial_condition;
  const double gamma = config_.gamma;
  const double L = config_.domain_length;
  const double c0 = std::sqrt(gamma * ic.p / ic.rho);
  const Vec3 velocity(ic.mach * c0, ic.tangential_velocity, 0.0);

  SolutionField field;
  field.num_elements = config_.num_elements;
  field.poly_degree = config_.poly_degree;
  field.dx = dx();
  field.values.resize(static_cast<std::size_t>(field.num_elements) * field.nodes_per_element());
  for (int e = 0; e < field.num_elements; ++e) {
    for (int j = 0; j < field.nodes_per_element(); ++j) {
      const double x = node_coordinate(e, j);
      PrimitiveState q{ic.rho, velocity, ic.p};
      if (ic.preset == "density_wave") {
        q.rho = ic.rho * (1.0 + ic.amplitude * std::sin(2.0 * std::numbers::pi * x / L));
      } else if (ic.preset == "pulse") {
        const double xi = (x - 0.5 * L) / ic.width;
        q.rho = ic.rho * (1.0 + ic.amplitude * std::exp(-xi * xi));
        q.p = ic.p * std::pow(q.rho / ic.rho, gamma);
      }
      field.at(e, j) = conservative_from_primitive(q, gas_).to_vector();
    }
  }
  return field;
}

StateVector DgOperator::interface_flux(const StateVector& left,
                                       const StateVector& right) const {
  StateVector f = kernels::ec_flux(left, right, kPlusX, config_.gamma);
  if (config_.interface_flux == InterfaceFlux::ECPlusLF) {
    f -= 0.5 * kernels::max_wave_speed(left, right, kPlusX, config_.gamma) * (right - left);
  }
  return f;
}

SolutionField DgOperator::rhs(const SolutionField& field, BoundaryEntropy* boundary) const {
  const double gamma = config_.gamma;
  if (auto bad = find_invalid(field, gamma)) {
    std::ostringstream os;
    os << "element " << bad->element << ", node " << bad->node << ": " << bad->detail;
    throw Error(ErrorCode::InvalidState, os.str());
  }

  const int K = field.num_elements;
  const int N = field.poly_degree;
  const int n_nodes = N + 1;

  // faces[k] is the x-directed numerical flux between elements k-1 and k.
  std::vector<StateVector> faces(K + 1);
  for (int k = 1; k < K; ++k) faces[k] = interface_flux(field.at(k - 1, N), field.at(k, 0));
  BoundaryEntropy wall_terms;
  if (config_.boundary == BoundaryType::Periodic) {
    faces[0] = faces[K] = interface_flux(field.at(K - 1, N), field.at(0, 0));
  } else {
    const ConservativeState u_left = ConservativeState::from_vector(field.at(0, 0));
    const ConservativeState u_right = ConservativeState::from_vector(field.at(K - 1, N));
    const GasModel& gas = gas_;
    const NormalFlux f_left = wall_flux(config_.wall_left, u_left, kMinusX, gas);
    const NormalFlux f_right = wall_flux(config_.wall_right, u_right, kPlusX, gas);
    faces[0] = -f_left;
    faces[K] = f_right;
    wall_terms.left = entropy_boundary_term(u_left, f_left, kMinusX, gas);
    wall_terms.right = entropy_boundary_term(u_right, f_right, kPlusX, gas);
  }
  if (boundary) *boundary = wall_terms;

  SolutionField out = field;
  const double jacobian_inv = 2.0 / field.dx;
  std::vector<StateVector> volume(n_nodes);
  std::vector<StateVector> physical(n_nodes);
  for (int e = 0; e < K; ++e) {
    for (int i = 0; i < n_nodes; ++i) {
      physical[i] = wallbc::kernels::normal_flux(field.at(e, i), kPlusX, gamma);
      volume[i] = 2.0 * D_(i, i) * physical[i];
    }
    for (int i = 0; i < n_nodes; ++i) {
      for (int j = i + 1; j < n_nodes; ++j) {
        const StateVector f = kernels::ec_flux(field.at(e, i), field.at(e, j), kPlusX, gamma);
        volume[i] += 2.0 * D_(i, j) * f;
        volume[j] += 2.0 * D_(j, i) * f;
      }
    }
    volume[N] += (faces[e + 1] - physical[N]) / rule_.weights[N];
    volume[0] -= (faces[e] - physical[0]) / rule_.weights[0];
    for (int i = 0; i < n_nodes; ++i) out.at(e, i) = -jacobian_inv * volume[i];
  }
  return out;
}

double DgOperator::total_entropy(const SolutionField& field) const {
  double S = 0.0;
  for (int e = 0; e < field.num_elements; ++e) {
    for (int j = 0; j < field.nodes_per_element(); ++j) {
      S += rule_.weights[j] * wallbc::kernels::entropy_density(field.at(e, j), config_.gamma);
    }
  }
  return 0.5 * field.dx * S;
}

double DgOperator::total(const SolutionField& field, int component) const {
  double sum = 0.0;
  for (int e = 0; e < field.num_elements; ++e) {
    for (int j = 0; j < field.nodes_per_element(); ++j) {
      sum += rule_.weights[j] * field.at(e, j)[component];
    }
  }
  return 0.5 * field.dx * sum;
}

double DgOperator::entropy_rate(const SolutionField& field, const SolutionField& dudt) const {
  double rate = 0.0;
  for (int e = 0; e < field.num_elements; ++e) {
    for (int j = 0; j < field.nodes_per_element(); ++j) {
      const StateVector w = wallbc::kernels::entropy_variables(field.at(e, j), config_.gamma);
      rate += rule_.weights[j] * w.dot(dudt.at(e, j));
    }
  }
  return 0.5 * field.dx * rate;
}

double DgOperator::stable_time_step(const SolutionField& field) const {
  double speed = 0.0;
  for (const StateVector& u : field.values) {
    const double c = std::sqrt(config_.gamma * wallbc::kernels::pressure(u, config_.gamma) / u[0]);
    speed = std::max(speed, std::abs(u[1] / u[0]) + c);
  }
  return config_.cfl * field.dx / ((config_.poly_degree + 1) * speed);
}

SolutionField dg_rhs(const SolutionField& field, const SolverConfig& config) {
  return DgOperator(config).rhs(field);
}

double EntropyBudget::max_abs_defect() const {
  double m = 0.0;
  for (const BudgetRow& r : rows) m = std::max(m, std::abs(r.defect));
  return m;
}

double EntropyBudget::min_boundary_contribution() const {
  double m = std::numeric_limits<double>::infinity();
  for (const BudgetRow& r : rows) m = std::min({m, r.boundary_left, r.boundary_right});
  return rows.empty() ? 0.0 : m;
}

double EntropyBudget::entropy_drift() const {
  return rows.empty() ? 0.0 : rows.back().S_total - rows.front().S_total;
}

SimulationResult run_simulation(const SolverConfig& config) {
  const DgOperator op(config);
  SimulationResult result;
  EntropyBudget& budget = result.budget;
  SolutionField u = op.initial_field();
  budget.initial_mass = op.total(u, 0);
  budget.initial_energy = op.total(u, 4);
  budget.min_boundary_term = std::numeric_limits<double>::infinity();

  auto evaluate = [&](const SolutionField& field, BoundaryEntropy& b) {
    try {
      SolutionField k = op.rhs(field, &b);
      budget.min_boundary_term = std::min({budget.min_boundary_term, b.left, b.right});
      return k;
    } catch (const Error& err) {
      if (err.code() != ErrorCode::InvalidState && err.code() != ErrorCode::VacuumLimitExceeded) {
        throw;
      }
      const auto bad = find_invalid(field, config.gamma);
      throw BlowUpError(field.t, bad ? bad->element : -1, bad ? bad->node : -1, err.what());
    }
  };
  auto record = [&](const SolutionField& field, const SolutionField& k, const BoundaryEntropy& b) {
    BudgetRow row;
    row.t = field.t;
    row.S_total = op.total_entropy(field);
    row.dSdt_discrete = op.entropy_rate(field, k);
    row.boundary_left = b.left;
    row.boundary_right = b.right;
    row.defect = row.dSdt_discrete + b.left + b.right;
    budget.rows.push_back(row);
  };
  auto check = [&](const SolutionField& field) {
    if (auto bad = find_invalid(field, config.gamma)) {
      throw BlowUpError(field.t, bad->element, bad->node, bad->detail);
    }
  };

  const double t_end = config.end_time;
  const double t_tol = 1e-13 * std::max(1.0, t_end);
  SolutionField stage = u;
  while (t_end - u.t > t_tol) {
    BoundaryEntropy b;
    const SolutionField k1 = evaluate(u, b);
    record(u, k1, b);

    double dt = config.fixed_dt ? *config.fixed_dt : op.stable_time_step(u);
    if (!(dt > 0.0) || !std::isfinite(dt)) throw BlowUpError(u.t, -1, -1, "non-positive time step");
    dt = std::min(dt, t_end - u.t);

    axpy(stage, 1.0, u, dt, k1);
    stage.t = u.t + dt;
    check(stage);
    const SolutionField k2 = evaluate(stage, b);
    axpy(stage, 0.75, u, 0.25, stage);
    for (std::size_t i = 0; i < stage.values.size(); ++i) stage.values[i] += 0.25 * dt * k2.values[i];
    stage.t = u.t + 0.5 * dt;
    check(stage);
    const SolutionField k3 = evaluate(stage, b);
    for (std::size_t i = 0; i < u.values.size(); ++i) {
      u.values[i] = (1.0 / 3.0) * u.values[i] + (2.0 / 3.0) * (stage.values[i] + dt * k3.values[i]);
    }
    u.t += dt;
    check(u);
    ++budget.steps;
  }
  u.t = std::max(u.t, t_end);
  BoundaryEntropy b;
  const SolutionField k_final = evaluate(u, b);
  record(u, k_final, b);

  budget.final_mass = op.total(u, 0);
  budget.final_energy = op.total(u, 4);
  result.final_field = std::move(u);
  return result;
}

}  // namespace wallbc::dg
