#pragma once

// State algebra for the compressible Euler equations with an ideal-gas
// closure: conversions, normal fluxes, and the entropy pair
//   s = -rho * sigma / (gamma - 1),   sigma = ln p - gamma ln rho,
// whose gradient w = ds/du gives the entropy variables.
//
// The checked entry points validate their inputs and throw wallbc::Error.
// The functions in wallbc::kernels skip validation and are meant for inner
// loops whose callers already guarantee the documented preconditions.

#include <cmath>

#include <Eigen/Dense>

#include "wallbc/errors.hpp"

namespace wallbc {

using Vec3 = Eigen::Vector3d;
using StateVector = Eigen::Matrix<double, 5, 1>;
/// Flux through a surface with a given unit normal: (mass, momentum x3, energy).
using NormalFlux = StateVector;

/// Ideal gas with adiabatic coefficient 1 < gamma < 3.
class GasModel {
 public:
  explicit GasModel(double gamma = 1.4);
  double gamma() const noexcept { return gamma_; }

 private:
  double gamma_;
};

struct ConservativeState {
  double rho = 1.0;
  Vec3 mom = Vec3::Zero();
  double E = 1.0;

  StateVector to_vector() const;
  static ConservativeState from_vector(const StateVector& u);
};

struct PrimitiveState {
  double rho = 1.0;
  Vec3 v = Vec3::Zero();
  double p = 1.0;

  double sound_speed(const GasModel& gas) const;
};

struct EntropyQuantities {
  double s = 0.0;      ///< entropy density -rho*sigma/(gamma-1)
  StateVector w;       ///< entropy variables ds/du
  double beta = 0.0;   ///< rho / (2p)
  double sigma = 0.0;  ///< physical entropy ln p - gamma ln rho
};

PrimitiveState primitive_from_conservative(const ConservativeState& u,
                                           const GasModel& gas);
ConservativeState conservative_from_primitive(const PrimitiveState& q,
                                              const GasModel& gas);

/// Pressure from the equation of state; throws on non-positive density or pressure.
double pressure(const ConservativeState& u, const GasModel& gas);
double sound_speed(const ConservativeState& u, const GasModel& gas);

/// f(u) . n = [rho v_n, rho v_n v + p n, (E + p) v_n].
NormalFlux physical_normal_flux(const ConservativeState& u, const Vec3& n,
                                const GasModel& gas);

EntropyQuantities entropy_quantities(const ConservativeState& u,
                                     const GasModel& gas);

/// f_ent . n = s v_n.
double entropy_normal_flux(const ConservativeState& u, const Vec3& n,
                           const GasModel& gas);

/// Throws NonUnitNormal unless | |n| - 1 | <= 1e-12.
void require_unit_normal(const Vec3& n);

/// Throws NonPositiveDensity / NonPositivePressure for unphysical states.
void require_valid(const ConservativeState& u, const GasModel& gas);

namespace kernels {

// Preconditions for everything in this namespace: rho > 0, p > 0, |n| = 1.

inline double pressure(const StateVector& u, double gamma) {
  const double kinetic = 0.5 * (u[1] * u[1] + u[2] * u[2] + u[3] * u[3]) / u[0];
  return (gamma - 1.0) * (u[4] - kinetic);
}

inline NormalFlux normal_flux(const StateVector& u, const Vec3& n, double gamma) {
  const double p = pressure(u, gamma);
  const Vec3 v = u.segment<3>(1) / u[0];
  const double vn = v.dot(n);
  NormalFlux f;
  f[0] = u[0] * vn;
  f.segment<3>(1) = u[0] * vn * v + p * n;
  f[4] = (u[4] + p) * vn;
  return f;
}

/// Entropy variables w = [ (gamma - sigma)/(gamma - 1) - beta |v|^2, 2 beta v, -2 beta ].
inline StateVector entropy_variables(const StateVector& u, double gamma) {
  const double p = pressure(u, gamma);
  const Vec3 v = u.segment<3>(1) / u[0];
  const double beta = 0.5 * u[0] / p;
  const double sigma = std::log(p) - gamma * std::log(u[0]);
  StateVector w;
  w[0] = (gamma - sigma) / (gamma - 1.0) - beta * v.squaredNorm();
  w.segment<3>(1) = 2.0 * beta * v;
  w[4] = -2.0 * beta;
  return w;
}

inline double entropy_density(const StateVector& u, double gamma) {
  const double sigma = std::log(pressure(u, gamma)) - gamma * std::log(u[0]);
  return -u[0] * sigma / (gamma - 1.0);
}

}  // namespace kernels

}  // namespace wallbc
