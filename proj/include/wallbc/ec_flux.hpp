#pragma once

// Entropy-conservative two-point flux (Chandrashekar's kinetic-energy
// preserving variant) for the entropy s = -rho sigma / (gamma - 1). It
// satisfies the Tadmor shuffle condition
//   (w_R - w_L)^T F_EC = psi_R - psi_L,   psi = rho v_n.

#include "wallbc/euler_core.hpp"

namespace wallbc::dg {

/// (a - b) / (ln a - ln b), with a series expansion when a and b are close.
double logarithmic_mean(double a, double b);

/// EC flux along n (the x axis by default). Symmetric in its two states.
NormalFlux ec_volume_flux(const ConservativeState& left, const ConservativeState& right,
                          const GasModel& gas, const Vec3& n = Vec3::UnitX());

/// EC flux plus scalar dissipation -lambda/2 (u_R - u_L), lambda = max(|v_n| + c).
NormalFlux ec_lf_flux(const ConservativeState& left, const ConservativeState& right,
                      const GasModel& gas, const Vec3& n = Vec3::UnitX());

namespace kernels {

NormalFlux ec_flux(const StateVector& left, const StateVector& right, const Vec3& n,
                   double gamma);

/// max(|v_n| + c) over both states.
double max_wave_speed(const StateVector& left, const StateVector& right, const Vec3& n,
                      double gamma);

}  // namespace kernels

}  // namespace wallbc::dg
