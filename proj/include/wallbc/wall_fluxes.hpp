#pragma once

// Nonlinear slip-wall fluxes of the form [0, P* n, 0]. Every kind of wall
// treatment reduces to a closed-form wall pressure ratio P*/P that depends
// only on the normal Mach number Ma_n = V_n / c and gamma. The entropy
// produced at the wall is then rho V_n (P*/P - 1).

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "wallbc/euler_core.hpp"

namespace wallbc {

enum class WallFluxKind {
  InternalPressure,
  ExactRP,
  LaxFriedrichs,
  HLL,
  HLLC,
  Roe,
  ECLF,
  ECRoe,
};

inline constexpr std::array<WallFluxKind, 8> kAllWallFluxKinds = {
    WallFluxKind::InternalPressure, WallFluxKind::ExactRP, WallFluxKind::LaxFriedrichs,
    WallFluxKind::HLL,              WallFluxKind::HLLC,    WallFluxKind::Roe,
    WallFluxKind::ECLF,             WallFluxKind::ECRoe,
};

std::string_view to_string(WallFluxKind kind);
/// Accepts canonical names and common aliases (LF, RP, EC-LF, ...), case-insensitive.
std::optional<WallFluxKind> parse_wall_flux_kind(std::string_view name);

/// Kinds whose wall entropy production is nonnegative for every admissible Ma_n.
bool is_entropy_stable(WallFluxKind kind);

struct WallPressureResult {
  double ratio = 1.0;     ///< P*/P
  double pstar = 0.0;     ///< P* = P * ratio
  double ma_n = 0.0;
  double delta_s = 0.0;   ///< (rho c) Ma_n (P*/P - 1)
  bool stable = true;     ///< delta_s >= -kEntropyTolerance
  bool negative_pstar = false;
  bool below_vacuum_limit = false;
};

/// Classification threshold for "entropy stable".
inline constexpr double kEntropyTolerance = 1e-14;

/// uL = u, uR = u with the normal momentum reflected.
std::pair<ConservativeState, ConservativeState> mirror_state(const ConservativeState& u,
                                                             const Vec3& n);

/// -2 / (gamma - 1): the exact rarefaction reaches zero pressure here.
double vacuum_limit(const GasModel& gas);

/// -sqrt(2 / (3 - gamma)): below this the Roe wall flux removes entropy.
double roe_threshold(const GasModel& gas);

/// Closed-form P*/P. ExactRP throws VacuumLimitExceeded for ma_n <= vacuum_limit.
double pstar_ratio(WallFluxKind kind, double ma_n, const GasModel& gas);

/// (rho c) Ma_n (ratio - 1).
double delta_s(double rho, double c, double ma_n, double ratio);

/// Wall pressure data for a normal Mach number with a given rho*c scale and
/// interior pressure.
WallPressureResult wall_pressure(WallFluxKind kind, double ma_n, double rho_c,
                                 double pressure, const GasModel& gas);

/// Wall pressure data evaluated from an interior state.
WallPressureResult wall_pressure(WallFluxKind kind, const ConservativeState& u,
                                 const Vec3& n, const GasModel& gas);

/// [0, P* n, 0] with P* = p(u) * pstar_ratio(kind, V_n / c).
NormalFlux wall_flux(WallFluxKind kind, const ConservativeState& u, const Vec3& n,
                     const GasModel& gas);

/// B_NL = W^T (F* - f(u).n) + f_ent(u).n, evaluated for an arbitrary boundary flux.
double entropy_boundary_term(const ConservativeState& u, const NormalFlux& f_star,
                             const Vec3& n, const GasModel& gas);

namespace kernels {

/// Unchecked closed forms; ExactRP below the vacuum limit returns 0.
double pstar_ratio(WallFluxKind kind, double ma_n, double gamma);

}  // namespace kernels

}  // namespace wallbc
