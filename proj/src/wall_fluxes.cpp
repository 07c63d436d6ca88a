#include "wallbc/wall_fluxes.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <string>

namespace wallbc {

std::string_view to_string(WallFluxKind kind) {
  switch (kind) {
    case WallFluxKind::InternalPressure: return "InternalPressure";
    case WallFluxKind::ExactRP: return "ExactRP";
    case WallFluxKind::LaxFriedrichs: return "LaxFriedrichs";
    case WallFluxKind::HLL: return "HLL";
    case WallFluxKind::HLLC: return "HLLC";
    case WallFluxKind::Roe: return "Roe";
    case WallFluxKind::ECLF: return "ECLF";
    case WallFluxKind::ECRoe: return "ECRoe";
  }
  return "Unknown";
}

std::optional<WallFluxKind> parse_wall_flux_kind(std::string_view name) {
  std::string key;
  for (char ch : name) {
    if (ch == '-' || ch == '_' || ch == ' ') continue;
    key += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  if (key == "internalpressure" || key == "internal" || key == "neutral") {
    return WallFluxKind::InternalPressure;
  }
  if (key == "exactrp" || key == "rp" || key == "exact") return WallFluxKind::ExactRP;
  if (key == "laxfriedrichs" || key == "lf" || key == "rusanov") {
    return WallFluxKind::LaxFriedrichs;
  }
  if (key == "hll") return WallFluxKind::HLL;
  if (key == "hllc") return WallFluxKind::HLLC;
  if (key == "roe") return WallFluxKind::Roe;
  if (key == "eclf") return WallFluxKind::ECLF;
  if (key == "ecroe") return WallFluxKind::ECRoe;
  return std::nullopt;
}

bool is_entropy_stable(WallFluxKind kind) { return kind != WallFluxKind::Roe; }

std::pair<ConservativeState, ConservativeState> mirror_state(const ConservativeState& u,
                                                             const Vec3& n) {
  require_unit_normal(n);
  ConservativeState right = u;
  right.mom = u.mom - 2.0 * u.mom.dot(n) * n;
  return {u, right};
}

double vacuum_limit(const GasModel& gas) { return -2.0 / (gas.gamma() - 1.0); }

double roe_threshold(const GasModel& gas) {
  if (!(gas.gamma() < 3.0)) {
    throw Error(ErrorCode::GammaOutOfRange, "Roe threshold needs gamma < 3");
  }
  return -std::sqrt(2.0 / (3.0 - gas.gamma()));
}

namespace kernels {

double pstar_ratio(WallFluxKind kind, double m, double gamma) {
  switch (kind) {
    case WallFluxKind::InternalPressure:
      return 1.0;
    case WallFluxKind::ExactRP: {
      if (m > 0.0) {
        const double g = 0.25 * (gamma + 1.0) * m;
        return 1.0 + gamma * m * (g + std::sqrt(g * g + 1.0));
      }
      const double base = 1.0 + 0.5 * (gamma - 1.0) * m;
      if (base <= 0.0) return 0.0;
      return std::pow(base, 2.0 * gamma / (gamma - 1.0));
    }
    case WallFluxKind::LaxFriedrichs:
      return 1.0 + gamma * m * (m + std::abs(m) + 1.0);
    case WallFluxKind::HLL:
    case WallFluxKind::HLLC:
    case WallFluxKind::ECRoe:
      return 1.0 + gamma * m;
    case WallFluxKind::Roe:
      return 1.0 + gamma * m * (m + std::sqrt(1.0 + 0.5 * (gamma - 1.0) * m * m));
    case WallFluxKind::ECLF:
      return 1.0 + gamma * m * (std::abs(m) + 1.0);
  }
  return 1.0;
}

}  // namespace kernels

double pstar_ratio(WallFluxKind kind, double ma_n, const GasModel& gas) {
  if (kind == WallFluxKind::ExactRP && ma_n <= vacuum_limit(gas)) {
    std::ostringstream os;
    os << "exact wall Riemann problem has no positive-pressure solution for Ma_n = "
       << ma_n << " <= " << vacuum_limit(gas);
    throw Error(ErrorCode::VacuumLimitExceeded, os.str());
  }
  return kernels::pstar_ratio(kind, ma_n, gas.gamma());
}

double delta_s(double rho, double c, double ma_n, double ratio) {
  return rho * c * ma_n * (ratio - 1.0);
}

WallPressureResult wall_pressure(WallFluxKind kind, double ma_n, double rho_c,
                                 double pressure, const GasModel& gas) {
  WallPressureResult r;
  r.ma_n = ma_n;
  r.ratio = pstar_ratio(kind, ma_n, gas);
  r.pstar = pressure * r.ratio;
  r.delta_s = rho_c * ma_n * (r.ratio - 1.0);
  r.stable = r.delta_s >= -kEntropyTolerance;
  r.negative_pstar = r.ratio < 0.0;
  r.below_vacuum_limit = ma_n <= vacuum_limit(gas);
  return r;
}

WallPressureResult wall_pressure(WallFluxKind kind, const ConservativeState& u,
                                 const Vec3& n, const GasModel& gas) {
  require_unit_normal(n);
  const double p = pressure(u, gas);
  const double c = std::sqrt(gas.gamma() * p / u.rho);
  const double ma_n = u.mom.dot(n) / (u.rho * c);
  return wall_pressure(kind, ma_n, u.rho * c, p, gas);
}

NormalFlux wall_flux(WallFluxKind kind, const ConservativeState& u, const Vec3& n,
                     const GasModel& gas) {
  const WallPressureResult r = wall_pressure(kind, u, n, gas);
  NormalFlux f = NormalFlux::Zero();
  f.segment<3>(1) = r.pstar * n;
  return f;
}

double entropy_boundary_term(const ConservativeState& u, const NormalFlux& f_star,
                             const Vec3& n, const GasModel& gas) {
  const EntropyQuantities e = entropy_quantities(u, gas);
  const NormalFlux f = physical_normal_flux(u, n, gas);
  return e.w.dot(f_star - f) + entropy_normal_flux(u, n, gas);
}

}  // namespace wallbc
