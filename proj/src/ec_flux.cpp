#include "wallbc/ec_flux.hpp"

#include <algorithm>
#include <cmath>

namespace wallbc::dg {

double logarithmic_mean(double a, double b) {
  // u = ((a - b) / (a + b))^2; below 1e-4 the truncated series is exact to
  // round-off, above it the direct formula has no cancellation problem.
  const double d = a - b, sum = a + b;
  const double u = (d * d) / (sum * sum);
  if (u < 1e-4) {
    return sum / (2.0 + u * (2.0 / 3.0 + u * (2.0 / 5.0 + u * (2.0 / 7.0))));
  }
  return (a - b) / std::log(a / b);
}

namespace kernels {

NormalFlux ec_flux(const StateVector& left, const StateVector& right, const Vec3& n,
                   double gamma) {
  const double rhoL = left[0], rhoR = right[0];
  const Vec3 vL = left.segment<3>(1) / rhoL;
  const Vec3 vR = right.segment<3>(1) / rhoR;
  const double betaL = 0.5 * rhoL / wallbc::kernels::pressure(left, gamma);
  const double betaR = 0.5 * rhoR / wallbc::kernels::pressure(right, gamma);

  const double rho_ln = logarithmic_mean(rhoL, rhoR);
  const double beta_ln = logarithmic_mean(betaL, betaR);
  const double rho_avg = 0.5 * (rhoL + rhoR);
  const double beta_avg = 0.5 * (betaL + betaR);
  const Vec3 v_avg = 0.5 * (vL + vR);
  const double v2_avg = 0.5 * (vL.squaredNorm() + vR.squaredNorm());
  const double p_hat = 0.5 * rho_avg / beta_avg;

  NormalFlux f;
  f[0] = rho_ln * v_avg.dot(n);
  f.segment<3>(1) = f[0] * v_avg + p_hat * n;
  f[4] = f[0] * (0.5 / ((gamma - 1.0) * beta_ln) - 0.5 * v2_avg) +
         v_avg.dot(f.segment<3>(1));
  return f;
}

double max_wave_speed(const StateVector& left, const StateVector& right, const Vec3& n,
                      double gamma) {
  auto speed = [&](const StateVector& u) {
    const double c = std::sqrt(gamma * wallbc::kernels::pressure(u, gamma) / u[0]);
    return std::abs(u.segment<3>(1).dot(n) / u[0]) + c;
  };
  return std::max(speed(left), speed(right));
}

}  // namespace kernels

NormalFlux ec_volume_flux(const ConservativeState& left, const ConservativeState& right,
                          const GasModel& gas, const Vec3& n) {
  require_unit_normal(n);
  require_valid(left, gas);
  require_valid(right, gas);
  return kernels::ec_flux(left.to_vector(), right.to_vector(), n, gas.gamma());
}

NormalFlux ec_lf_flux(const ConservativeState& left, const ConservativeState& right,
                      const GasModel& gas, const Vec3& n) {
  const NormalFlux f = ec_volume_flux(left, right, gas, n);
  const StateVector uL = left.to_vector();
  const StateVector uR = right.to_vector();
  return f - 0.5 * kernels::max_wave_speed(uL, uR, n, gas.gamma()) * (uR - uL);
}

}  // namespace wallbc::dg
