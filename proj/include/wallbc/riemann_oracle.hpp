#pragma once

// General-purpose Riemann solvers for arbitrary left/right states. They are
// written without any knowledge of the wall closed forms so that evaluating
// them on a mirrored pair gives an independent check of those formulas.

#include "wallbc/euler_core.hpp"

namespace wallbc::oracle {

struct RiemannPair {
  ConservativeState left;
  ConservativeState right;
  Vec3 n = Vec3::UnitX();
};

struct StarState {
  double p_star = 0.0;
  double u_star = 0.0;  ///< contact velocity along n
  int iterations = 0;
};

/// Star-region pressure and velocity of the exact Riemann problem along n.
/// Throws VacuumGenerated when the data produce a vacuum and NoConvergence
/// after 100 Newton iterations.
StarState exact_riemann_star(const RiemannPair& pair, const GasModel& gas);

/// Value of f_L(p) + f_R(p) + (u_R - u_L) for the pair; zero at p_star.
double exact_pressure_function(const RiemannPair& pair, double p, const GasModel& gas);

enum class Solver { LaxFriedrichs, HLL, HLLC, Roe };
enum class WaveSpeedMethod {
  WallExact,  ///< S_R = -V_n + c, S_L = -S_R; mirror pairs only
  Davis,      ///< min/max of v_n -+ c over both sides
  SideLocal,  ///< S_L = v_nL - c_L, S_R = v_nR + c_R (Davis if these cross)
};

struct WaveSpeeds {
  double left;
  double right;
};

/// Throws NotAMirrorPair for WallExact on a pair that is not a reflection.
WaveSpeeds wave_speed_estimates(const RiemannPair& pair, const GasModel& gas,
                                WaveSpeedMethod method);

bool is_mirror_pair(const RiemannPair& pair, const GasModel& gas, double tol = 1e-12);

/// Numerical flux through n. HLL and HLLC use `speeds` for the outer waves;
/// LF uses max(|v_n| + c) over both sides; Roe has no entropy fix.
NormalFlux approximate_flux(Solver solver, const RiemannPair& pair, const GasModel& gas,
                            WaveSpeedMethod speeds = WaveSpeedMethod::SideLocal);

/// Contact speed estimate used by HLLC.
double hllc_contact_speed(const RiemannPair& pair, const GasModel& gas,
                          WaveSpeedMethod speeds = WaveSpeedMethod::SideLocal);

/// Intermediate quantities of the Roe linearization along n.
struct RoeDiagnostics {
  double rho_tilde;
  Vec3 v_tilde;
  double vn_tilde;
  double H_tilde;
  double c_tilde;
  double lambda[5];  ///< v_n - c, v_n (x3), v_n + c
  double alpha[5];   ///< wave strengths; alpha[1] entropy, alpha[2..3] shear magnitudes
  StateVector acoustic_minus_eigenvector;  ///< K1 = [1, v - c n, H - v_n c]
};

RoeDiagnostics roe_diagnostics(const RiemannPair& pair, const GasModel& gas);

}  // namespace wallbc::oracle
