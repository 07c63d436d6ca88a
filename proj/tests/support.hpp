#pragma once

// Test-side reference implementations. Nothing here calls into the library's
// closed forms; they are re-derived so the tests compare two routes.

#include <wallbc/euler_core.hpp>
#include <wallbc/wall_fluxes.hpp>

#include <cmath>
#include <random>

namespace wallbc::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Vec3 random_unit(Rng& rng) {
  std::normal_distribution<double> g;
  Vec3 n(g(rng), g(rng), g(rng));
  while (n.norm() < 1e-3) n = Vec3(g(rng), g(rng), g(rng));
  return n.normalized();
}

inline ConservativeState random_state(Rng& rng, const GasModel& gas) {
  const PrimitiveState q{uniform(rng, 0.2, 5.0),
                         Vec3(uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, -2, 2)),
                         uniform(rng, 0.2, 5.0)};
  return conservative_from_primitive(q, gas);
}

/// Random state whose velocity along n is exactly ma * c, plus a random tangential part.
inline ConservativeState wall_state(Rng& rng, const GasModel& gas, const Vec3& n, double ma) {
  const double rho = uniform(rng, 0.3, 3.0), p = uniform(rng, 0.3, 3.0);
  const double c = std::sqrt(gas.gamma() * p / rho);
  Vec3 t(uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1));
  t -= t.dot(n) * n;
  return conservative_from_primitive({rho, ma * c * n + t, p}, gas);
}

// P*/P written out term by term.
inline double ratio_oracle(WallFluxKind kind, double m, double g) {
  switch (kind) {
    case WallFluxKind::InternalPressure:
      return 1.0;
    case WallFluxKind::ExactRP:
      if (m > 0) {
        const double k = 0.25 * (g + 1) * m;
        return 1 + g * m * (k + std::sqrt(k * k + 1));
      }
      return std::pow(1 + 0.5 * (g - 1) * m, 2 * g / (g - 1));
    case WallFluxKind::LaxFriedrichs:
      return 1 + g * m * (m + std::abs(m) + 1);
    case WallFluxKind::HLL:
    case WallFluxKind::HLLC:
    case WallFluxKind::ECRoe:
      return 1 + g * m;
    case WallFluxKind::Roe:
      return 1 + g * m * (m + std::sqrt(1 + 0.5 * (g - 1) * m * m));
    case WallFluxKind::ECLF:
      return 1 + g * m * (std::abs(m) + 1);
  }
  return NAN;
}

// Toro's pressure function for one side.
inline double side_function(double p, double rho, double pk, double g) {
  const double c = std::sqrt(g * pk / rho);
  if (p > pk) {
    const double A = 2 / ((g + 1) * rho), B = (g - 1) / (g + 1) * pk;
    return (p - pk) * std::sqrt(A / (p + B));
  }
  return 2 * c / (g - 1) * (std::pow(p / pk, (g - 1) / (2 * g)) - 1);
}

/// Star pressure of the symmetric problem (V_n, -V_n) by bisection in log p.
inline double symmetric_star_pressure(double rho, double p, double vn, double g) {
  auto f = [&](double x) { return 2 * side_function(x, rho, p, g) - 2 * vn; };
  double lo = std::log(p) - 200, hi = std::log(p) + 20;
  for (int i = 0; i < 400; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(std::exp(mid)) > 0 ? hi : lo) = mid;
  }
  return std::exp(0.5 * (lo + hi));
}

inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

}  // namespace wallbc::testing
