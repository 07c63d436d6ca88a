#include "wallbc/euler_core.hpp"

#include <cmath>
#include <sstream>

namespace wallbc {

GasModel::GasModel(double gamma) : gamma_(gamma) {
  if (!(gamma > 1.0 && gamma < 3.0)) {
    std::ostringstream os;
    os << "adiabatic coefficient must satisfy 1 < gamma < 3, got " << gamma;
    throw Error(ErrorCode::GammaOutOfRange, os.str());
  }
}

StateVector ConservativeState::to_vector() const {
  StateVector u;
  u << rho, mom[0], mom[1], mom[2], E;
  return u;
}

ConservativeState ConservativeState::from_vector(const StateVector& u) {
  return ConservativeState{u[0], u.segment<3>(1), u[4]};
}

double PrimitiveState::sound_speed(const GasModel& gas) const {
  return std::sqrt(gas.gamma() * p / rho);
}

void require_unit_normal(const Vec3& n) {
  if (!(std::abs(n.norm() - 1.0) <= 1e-12)) {
    std::ostringstream os;
    os.precision(17);
    os << "normal must have unit length, |n| = " << n.norm();
    throw Error(ErrorCode::NonUnitNormal, os.str());
  }
}

void require_valid(const ConservativeState& u, const GasModel& gas) {
  if (!(u.rho > 0.0)) {
    std::ostringstream os;
    os << "density must be positive, got " << u.rho;
    throw Error(ErrorCode::NonPositiveDensity, os.str());
  }
  const double p = kernels::pressure(u.to_vector(), gas.gamma());
  if (!(p > 0.0)) {
    std::ostringstream os;
    os << "pressure must be positive, got " << p;
    throw Error(ErrorCode::NonPositivePressure, os.str());
  }
}

double pressure(const ConservativeState& u, const GasModel& gas) {
  require_valid(u, gas);
  return kernels::pressure(u.to_vector(), gas.gamma());
}

double sound_speed(const ConservativeState& u, const GasModel& gas) {
  return std::sqrt(gas.gamma() * pressure(u, gas) / u.rho);
}

PrimitiveState primitive_from_conservative(const ConservativeState& u,
                                           const GasModel& gas) {
  const double p = pressure(u, gas);
  return PrimitiveState{u.rho, u.mom / u.rho, p};
}

ConservativeState conservative_from_primitive(const PrimitiveState& q,
                                              const GasModel& gas) {
  if (!(q.rho > 0.0)) {
    throw Error(ErrorCode::NonPositiveDensity, "primitive density must be positive");
  }
  if (!(q.p > 0.0)) {
    throw Error(ErrorCode::NonPositivePressure, "primitive pressure must be positive");
  }
  const double E = q.p / (gas.gamma() - 1.0) + 0.5 * q.rho * q.v.squaredNorm();
  return ConservativeState{q.rho, q.rho * q.v, E};
}

NormalFlux physical_normal_flux(const ConservativeState& u, const Vec3& n,
                                const GasModel& gas) {
  require_unit_normal(n);
  require_valid(u, gas);
  return kernels::normal_flux(u.to_vector(), n, gas.gamma());
}

EntropyQuantities entropy_quantities(const ConservativeState& u,
                                     const GasModel& gas) {
  const double gamma = gas.gamma();
  const double p = pressure(u, gas);
  EntropyQuantities e;
  e.sigma = std::log(p) - gamma * std::log(u.rho);
  e.s = -u.rho * e.sigma / (gamma - 1.0);
  e.beta = 0.5 * u.rho / p;
  e.w = kernels::entropy_variables(u.to_vector(), gamma);
  return e;
}

double entropy_normal_flux(const ConservativeState& u, const Vec3& n,
                           const GasModel& gas) {
  require_unit_normal(n);
  const EntropyQuantities e = entropy_quantities(u, gas);
  return e.s * u.mom.dot(n) / u.rho;
}

}  // namespace wallbc
