#include "wallbc/linear_acoustics.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace wallbc::linear {

namespace {

constexpr double kWallTolerance = 1e-12;

void require_valid_mean(const MeanState& mean) {
  if (!(mean.rho_bar > 0.0)) {
    throw Error(ErrorCode::NonPositiveDensity, "mean density must be positive");
  }
  if (!(mean.p_bar > 0.0)) {
    throw Error(ErrorCode::NonPositivePressure, "mean pressure must be positive");
  }
  GasModel{mean.gamma};
}

void require_wall_mean(const MeanState& mean, const Vec3& n) {
  const double vn = mean.normal_velocity(n);
  if (std::abs(vn) > kWallTolerance * std::max(1.0, mean.sound_speed())) {
    std::ostringstream os;
    os << "closed-form wall operators need vbar . n = 0, got " << vn;
    throw Error(ErrorCode::NonzeroMeanNormalVelocity, os.str());
  }
}

StateVector wall_direction_t(const MeanState& mean) {
  // Unit vector along the (rho', P') combination that forms Q.
  StateVector t = StateVector::Zero();
  const double c = mean.sound_speed();
  t[0] = mean.b() / c;
  t[4] = mean.a() / c;
  return t;
}

StateVector wall_direction_m(const Vec3& n) {
  StateVector m = StateVector::Zero();
  m.segment<3>(1) = n;
  return m;
}

}  // namespace

double MeanState::sound_speed() const { return std::sqrt(gamma * p_bar / rho_bar); }
double MeanState::a() const { return std::sqrt((gamma - 1.0) / gamma) * sound_speed(); }
double MeanState::b() const { return sound_speed() / std::sqrt(gamma); }

StateVector LinearState::to_vector() const {
  StateVector u;
  u << rho_p, V[0], V[1], V[2], P_p;
  return u;
}

LinearState LinearState::from_vector(const StateVector& u) {
  return LinearState{u[0], u.segment<3>(1), u[4]};
}

Matrix5 coefficient_matrix(const MeanState& mean, const Vec3& n) {
  require_unit_normal(n);
  require_valid_mean(mean);
  const double a = mean.a();
  const double b = mean.b();
  Matrix5 A = mean.normal_velocity(n) * Matrix5::Identity();
  for (int i = 0; i < 3; ++i) {
    A(0, 1 + i) = A(1 + i, 0) = b * n[i];
    A(4, 1 + i) = A(1 + i, 4) = a * n[i];
  }
  return A;
}

AbsAndMinus matrix_abs_and_minus(const MeanState& mean, const Vec3& n) {
  const Matrix5 A = coefficient_matrix(mean, n);
  require_wall_mean(mean, n);
  // A_n = c (t m^T + m t^T): eigenvectors (t +- m)/sqrt(2) for +-c, the rest null.
  const StateVector t = wall_direction_t(mean);
  const StateVector m = wall_direction_m(n);
  AbsAndMinus out;
  out.abs = mean.sound_speed() * (t * t.transpose() + m * m.transpose());
  out.minus = 0.5 * (A - out.abs);
  return out;
}

Matrix5 symmetric_abs(const Matrix5& a) {
  Eigen::SelfAdjointEigenSolver<Matrix5> eig(a);
  const auto& V = eig.eigenvectors();
  return V * eig.eigenvalues().cwiseAbs().asDiagonal() * V.transpose();
}

LinearState mirror_state_linear(const LinearState& U, const Vec3& n) {
  LinearState out = U;
  out.V = U.V - 2.0 * U.normal_velocity(n) * n;
  return out;
}

double default_lambda_max(const MeanState& mean, const Vec3& n) {
  return std::abs(mean.normal_velocity(n)) + mean.sound_speed();
}

NormalFlux linear_boundary_flux(const LinearState& U, const LinearState& U_ext,
                                const MeanState& mean, const Vec3& n,
                                LinearScheme scheme,
                                std::optional<double> lambda_max) {
  const Matrix5 A = coefficient_matrix(mean, n);
  const StateVector u = U.to_vector();
  const StateVector u_ext = U_ext.to_vector();
  NormalFlux f = 0.5 * (A * u + A * u_ext);
  switch (scheme) {
    case LinearScheme::Central:
      break;
    case LinearScheme::Upwind: {
      const bool at_wall =
          std::abs(mean.normal_velocity(n)) <= kWallTolerance * std::max(1.0, mean.sound_speed());
      const Matrix5 abs_a = at_wall ? matrix_abs_and_minus(mean, n).abs : symmetric_abs(A);
      f -= 0.5 * abs_a * (u_ext - u);
      break;
    }
    case LinearScheme::LaxFriedrichs: {
      const double lam = lambda_max.value_or(default_lambda_max(mean, n));
      f -= 0.5 * lam * (u_ext - u);
      break;
    }
  }
  return f;
}

double boundary_energy_term(const LinearState& U, const NormalFlux& F_star,
                            const MeanState& mean, const Vec3& n) {
  const Matrix5 A = coefficient_matrix(mean, n);
  const StateVector u = U.to_vector();
  return u.dot(F_star - 0.5 * A * u);
}

DirectWallValues direct_wall_values(const LinearState& U, const MeanState& mean,
                                    const Vec3& n, DirectVariant variant,
                                    std::optional<double> lambda_max) {
  require_unit_normal(n);
  require_valid_mean(mean);
  const double vn = U.normal_velocity(n);
  const double Q = U.Q(mean);
  double jump = 0.0;  // Q* - Q
  switch (variant) {
    case DirectVariant::Neutral:
      break;
    case DirectVariant::LFDissipative:
      jump = lambda_max.value_or(default_lambda_max(mean, n)) * vn;
      break;
    case DirectVariant::UpwindEquivalent:
      jump = mean.sound_speed() * vn;
      break;
  }
  // rho* stays at the interior value, so the whole jump goes through P*.
  return DirectWallValues{U.rho_p, U.P_p + jump / mean.a(), Q + jump};
}

NormalFlux direct_wall_flux_linear(const LinearState& U, const MeanState& mean,
                                   const Vec3& n, DirectVariant variant,
                                   std::optional<double> lambda_max) {
  const DirectWallValues star = direct_wall_values(U, mean, n, variant, lambda_max);
  NormalFlux f = NormalFlux::Zero();
  f.segment<3>(1) = star.Q_star * n;
  return f;
}

}  // namespace wallbc::linear
