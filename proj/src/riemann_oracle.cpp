#include "wallbc/riemann_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace wallbc::oracle {

namespace {

struct Side {
  double rho;
  Vec3 v;
  double un;
  double p;
  double c;
  StateVector u;
  NormalFlux f;
};

Side side_from(const ConservativeState& state, const Vec3& n, const GasModel& gas) {
  const PrimitiveState q = primitive_from_conservative(state, gas);
  Side s;
  s.rho = q.rho;
  s.v = q.v;
  s.un = q.v.dot(n);
  s.p = q.p;
  s.c = q.sound_speed(gas);
  s.u = state.to_vector();
  s.f = kernels::normal_flux(s.u, n, gas.gamma());
  return s;
}

// Toro's pressure function for one side and its derivative.
void pressure_function(double p, const Side& k, double gamma, double& f, double& df) {
  if (p > k.p) {
    const double A = 2.0 / ((gamma + 1.0) * k.rho);
    const double B = (gamma - 1.0) / (gamma + 1.0) * k.p;
    const double root = std::sqrt(A / (p + B));
    f = (p - k.p) * root;
    df = root * (1.0 - 0.5 * (p - k.p) / (B + p));
  } else {
    const double ratio = p / k.p;
    f = 2.0 * k.c / (gamma - 1.0) * (std::pow(ratio, 0.5 * (gamma - 1.0) / gamma) - 1.0);
    df = 1.0 / (k.rho * k.c) * std::pow(ratio, -0.5 * (gamma + 1.0) / gamma);
  }
}

// Orthonormal tangents completing n.
void tangents(const Vec3& n, Vec3& t1, Vec3& t2) {
  const Vec3 seed = std::abs(n[0]) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  t1 = (seed - seed.dot(n) * n).normalized();
  t2 = n.cross(t1);
}

NormalFlux hll_flux(const Side& L, const Side& R, WaveSpeeds s) {
  if (s.left >= 0.0) return L.f;
  if (s.right <= 0.0) return R.f;
  return (s.right * L.f - s.left * R.f + s.left * s.right * (R.u - L.u)) /
         (s.right - s.left);
}

double contact_speed(const Side& L, const Side& R, WaveSpeeds s) {
  const double mL = L.rho * (s.left - L.un);
  const double mR = R.rho * (s.right - R.un);
  return (R.p - L.p + mL * L.un - mR * R.un) / (mL - mR);
}

StateVector hllc_star_state(const Side& k, double S, double s_star, const Vec3& n) {
  const double factor = k.rho * (S - k.un) / (S - s_star);
  StateVector u;
  u[0] = factor;
  u.segment<3>(1) = factor * (k.v + (s_star - k.un) * n);
  u[4] = factor * (k.u[4] / k.rho +
                   (s_star - k.un) * (s_star + k.p / (k.rho * (S - k.un))));
  return u;
}

NormalFlux hllc_flux(const Side& L, const Side& R, WaveSpeeds s, const Vec3& n) {
  if (s.left >= 0.0) return L.f;
  if (s.right <= 0.0) return R.f;
  const double s_star = contact_speed(L, R, s);
  if (s_star >= 0.0) return L.f + s.left * (hllc_star_state(L, s.left, s_star, n) - L.u);
  return R.f + s.right * (hllc_star_state(R, s.right, s_star, n) - R.u);
}

struct RoeWaves {
  RoeDiagnostics diag;
  StateVector K[5];
};

RoeWaves roe_waves(const Side& L, const Side& R, const Vec3& n, double gamma) {
  RoeWaves w;
  RoeDiagnostics& d = w.diag;
  const double sL = std::sqrt(L.rho);
  const double sR = std::sqrt(R.rho);
  const double HL = (L.u[4] + L.p) / L.rho;
  const double HR = (R.u[4] + R.p) / R.rho;
  d.rho_tilde = sL * sR;
  d.v_tilde = (sL * L.v + sR * R.v) / (sL + sR);
  d.vn_tilde = d.v_tilde.dot(n);
  d.H_tilde = (sL * HL + sR * HR) / (sL + sR);
  d.c_tilde = std::sqrt((gamma - 1.0) * (d.H_tilde - 0.5 * d.v_tilde.squaredNorm()));

  const double c = d.c_tilde;
  const double dp = R.p - L.p;
  const double drho = R.rho - L.rho;
  const double dun = R.un - L.un;
  const Vec3 dv = R.v - L.v;
  Vec3 t1, t2;
  tangents(n, t1, t2);

  d.lambda[0] = d.vn_tilde - c;
  d.lambda[1] = d.lambda[2] = d.lambda[3] = d.vn_tilde;
  d.lambda[4] = d.vn_tilde + c;

  d.alpha[0] = (dp - d.rho_tilde * c * dun) / (2.0 * c * c);
  d.alpha[1] = drho - dp / (c * c);
  d.alpha[2] = d.rho_tilde * dv.dot(t1);
  d.alpha[3] = d.rho_tilde * dv.dot(t2);
  d.alpha[4] = (dp + d.rho_tilde * c * dun) / (2.0 * c * c);

  const Vec3& v = d.v_tilde;
  w.K[0] << 1.0, v - c * n, d.H_tilde - d.vn_tilde * c;
  w.K[1] << 1.0, v, 0.5 * v.squaredNorm();
  w.K[2] << 0.0, t1, v.dot(t1);
  w.K[3] << 0.0, t2, v.dot(t2);
  w.K[4] << 1.0, v + c * n, d.H_tilde + d.vn_tilde * c;
  d.acoustic_minus_eigenvector = w.K[0];
  return w;
}

NormalFlux roe_flux(const Side& L, const Side& R, const Vec3& n, double gamma) {
  const RoeWaves w = roe_waves(L, R, n, gamma);
  NormalFlux f = 0.5 * (L.f + R.f);
  for (int i = 0; i < 5; ++i) {
    f -= 0.5 * std::abs(w.diag.lambda[i]) * w.diag.alpha[i] * w.K[i];
  }
  return f;
}

}  // namespace

double exact_pressure_function(const RiemannPair& pair, double p, const GasModel& gas) {
  const Side L = side_from(pair.left, pair.n, gas);
  const Side R = side_from(pair.right, pair.n, gas);
  double fL, fR, d;
  pressure_function(p, L, gas.gamma(), fL, d);
  pressure_function(p, R, gas.gamma(), fR, d);
  return fL + fR + (R.un - L.un);
}

StarState exact_riemann_star(const RiemannPair& pair, const GasModel& gas) {
  require_unit_normal(pair.n);
  const double gamma = gas.gamma();
  const Side L = side_from(pair.left, pair.n, gas);
  const Side R = side_from(pair.right, pair.n, gas);
  const double du = R.un - L.un;

  if (2.0 / (gamma - 1.0) * (L.c + R.c) <= du) {
    std::ostringstream os;
    os << "initial data generate vacuum: du = " << du
       << " >= 2(cL + cR)/(gamma - 1) = " << 2.0 / (gamma - 1.0) * (L.c + R.c);
    throw Error(ErrorCode::VacuumGenerated, os.str());
  }

  // Two-rarefaction guess, exact when both waves are rarefactions.
  const double z = 0.5 * (gamma - 1.0) / gamma;
  const double floor = 1e-12 * std::min(L.p, R.p);
  const double guess = std::pow((L.c + R.c - 0.5 * (gamma - 1.0) * du) /
                                    (L.c / std::pow(L.p, z) + R.c / std::pow(R.p, z)),
                                1.0 / z);
  double p = std::max(guess, floor);

  StarState star;
  double fL = 0.0, fR = 0.0;
  for (int it = 1; it <= 100; ++it) {
    double dfL, dfR;
    pressure_function(p, L, gamma, fL, dfL);
    pressure_function(p, R, gamma, fR, dfR);
    const double residual = fL + fR + du;
    // Below this the residual is pure cancellation noise.
    const double noise = 8.0 * std::numeric_limits<double>::epsilon() *
                         (std::abs(fL) + std::abs(fR) + std::abs(du));
    double p_new = p - residual / (dfL + dfR);
    if (p_new <= 0.0) p_new = 0.5 * p;
    const double change = 2.0 * std::abs(p_new - p) / (p_new + p);
    p = p_new;
    star.iterations = it;
    if (change < 1e-14 || std::abs(residual) <= noise) {
      pressure_function(p, L, gamma, fL, dfL);
      pressure_function(p, R, gamma, fR, dfR);
      star.p_star = p;
      star.u_star = 0.5 * (L.un + R.un) + 0.5 * (fR - fL);
      return star;
    }
  }
  throw Error(ErrorCode::NoConvergence, "exact Riemann solver exceeded 100 Newton iterations");
}

bool is_mirror_pair(const RiemannPair& pair, const GasModel& gas, double tol) {
  (void)gas;
  const ConservativeState& L = pair.left;
  const ConservativeState& R = pair.right;
  const double scale = std::max({1.0, std::abs(L.rho), std::abs(L.E), L.mom.norm()});
  const Vec3 reflected = L.mom - 2.0 * L.mom.dot(pair.n) * pair.n;
  return std::abs(L.rho - R.rho) <= tol * scale && std::abs(L.E - R.E) <= tol * scale &&
         (R.mom - reflected).norm() <= tol * scale;
}

WaveSpeeds wave_speed_estimates(const RiemannPair& pair, const GasModel& gas,
                                WaveSpeedMethod method) {
  require_unit_normal(pair.n);
  const Side L = side_from(pair.left, pair.n, gas);
  const Side R = side_from(pair.right, pair.n, gas);
  switch (method) {
    case WaveSpeedMethod::WallExact: {
      if (!is_mirror_pair(pair, gas)) {
        throw Error(ErrorCode::NotAMirrorPair,
                    "wall wave speeds need a reflected pair (equal rho, E; mirrored momentum)");
      }
      const double s_right = -L.un + L.c;
      return {-s_right, s_right};
    }
    case WaveSpeedMethod::Davis:
      return {std::min(L.un - L.c, R.un - R.c), std::max(L.un + L.c, R.un + R.c)};
    case WaveSpeedMethod::SideLocal:
      // Strong collisions can cross the two estimates; widen to Davis then.
      if (L.un - L.c > R.un + R.c) {
        return {std::min(L.un - L.c, R.un - R.c), std::max(L.un + L.c, R.un + R.c)};
      }
      return {L.un - L.c, R.un + R.c};
  }
  return {L.un - L.c, R.un + R.c};
}

double hllc_contact_speed(const RiemannPair& pair, const GasModel& gas,
                          WaveSpeedMethod speeds) {
  const Side L = side_from(pair.left, pair.n, gas);
  const Side R = side_from(pair.right, pair.n, gas);
  return contact_speed(L, R, wave_speed_estimates(pair, gas, speeds));
}

NormalFlux approximate_flux(Solver solver, const RiemannPair& pair, const GasModel& gas,
                            WaveSpeedMethod speeds) {
  require_unit_normal(pair.n);
  const Side L = side_from(pair.left, pair.n, gas);
  const Side R = side_from(pair.right, pair.n, gas);
  switch (solver) {
    case Solver::LaxFriedrichs: {
      const double lam = std::max(std::abs(L.un) + L.c, std::abs(R.un) + R.c);
      return 0.5 * (L.f + R.f) - 0.5 * lam * (R.u - L.u);
    }
    case Solver::HLL:
      return hll_flux(L, R, wave_speed_estimates(pair, gas, speeds));
    case Solver::HLLC:
      return hllc_flux(L, R, wave_speed_estimates(pair, gas, speeds), pair.n);
    case Solver::Roe:
      return roe_flux(L, R, pair.n, gas.gamma());
  }
  return 0.5 * (L.f + R.f);
}

RoeDiagnostics roe_diagnostics(const RiemannPair& pair, const GasModel& gas) {
  require_unit_normal(pair.n);
  const Side L = side_from(pair.left, pair.n, gas);
  const Side R = side_from(pair.right, pair.n, gas);
  return roe_waves(L, R, pair.n, gas.gamma()).diag;
}

}  // namespace wallbc::oracle
