#pragma once

// Symmetrized linearized Euler equations about a constant mean state.
// The perturbation vector is U = [rho', V1, V2, V3, P'] and the normal flux is
// A_n U with
//   A_n = (vbar . n) I + b (e_0 m^T + m e_0^T) + a (e_4 m^T + m e_4^T),
// m = [0, n, 0]. With a^2 + b^2 = cbar^2 the nonzero eigenvalues at a wall
// (vbar . n = 0) are +-cbar.

#include <optional>

#include <Eigen/Core>

#include "wallbc/euler_core.hpp"

namespace wallbc::linear {

using Matrix5 = Eigen::Matrix<double, 5, 5>;

struct MeanState {
  double rho_bar = 1.0;
  Vec3 v_bar = Vec3::Zero();
  double p_bar = 1.0;
  double gamma = 1.4;

  double sound_speed() const;  ///< cbar
  double a() const;            ///< sqrt((gamma-1)/gamma) cbar
  double b() const;            ///< cbar / sqrt(gamma)
  double normal_velocity(const Vec3& n) const { return v_bar.dot(n); }
};

struct LinearState {
  double rho_p = 0.0;
  Vec3 V = Vec3::Zero();
  double P_p = 0.0;

  StateVector to_vector() const;
  static LinearState from_vector(const StateVector& u);

  double Q(const MeanState& mean) const { return mean.b() * rho_p + mean.a() * P_p; }
  double normal_velocity(const Vec3& n) const { return V.dot(n); }
  double normal_mach(const MeanState& mean, const Vec3& n) const {
    return normal_velocity(n) / mean.sound_speed();
  }
};

enum class LinearScheme { Central, Upwind, LaxFriedrichs };
enum class DirectVariant {
  Neutral,          ///< Q* = Q
  LFDissipative,    ///< matches the reflection + Lax-Friedrichs energy term
  UpwindEquivalent  ///< matches the reflection + exact upwind energy term
};

/// A_n = n1 A1 + n2 A2 + n3 A3.
Matrix5 coefficient_matrix(const MeanState& mean, const Vec3& n);

struct AbsAndMinus {
  Matrix5 abs;    ///< |A_n|
  Matrix5 minus;  ///< A_n^- = (A_n - |A_n|) / 2
};

/// Closed-form |A_n| and A_n^- for a wall normal. Requires vbar . n = 0
/// (NonzeroMeanNormalVelocity otherwise).
AbsAndMinus matrix_abs_and_minus(const MeanState& mean, const Vec3& n);

/// |A| of an arbitrary symmetric matrix through a symmetric eigensolve.
Matrix5 symmetric_abs(const Matrix5& a);

LinearState mirror_state_linear(const LinearState& U, const Vec3& n);

/// Largest |eigenvalue| of A_n: |vbar . n| + cbar.
double default_lambda_max(const MeanState& mean, const Vec3& n);

/// F* = (A_n U + A_n U_ext)/2 - (eps/2) D (U_ext - U) with D = |A_n| (upwind),
/// D = lambda_max I (Lax-Friedrichs) or D = 0 (central).
NormalFlux linear_boundary_flux(const LinearState& U, const LinearState& U_ext,
                                const MeanState& mean, const Vec3& n,
                                LinearScheme scheme,
                                std::optional<double> lambda_max = std::nullopt);

/// B_L = U^T (F* - A_n U / 2). Nonnegative values are energy stable.
double boundary_energy_term(const LinearState& U, const NormalFlux& F_star,
                            const MeanState& mean, const Vec3& n);

/// [b V*_n, n Q*, a V*_n] with V*_n = 0.
NormalFlux direct_wall_flux_linear(const LinearState& U, const MeanState& mean,
                                   const Vec3& n, DirectVariant variant,
                                   std::optional<double> lambda_max = std::nullopt);

/// Wall values (rho*, P*) used by direct_wall_flux_linear.
struct DirectWallValues {
  double rho_star;
  double P_star;
  double Q_star;
};
DirectWallValues direct_wall_values(const LinearState& U, const MeanState& mean,
                                    const Vec3& n, DirectVariant variant,
                                    std::optional<double> lambda_max = std::nullopt);

}  // namespace wallbc::linear
