#pragma once

// Normal-Mach-number sweeps of the wall entropy production
//   delta_s = (rho c) Ma_n (P*/P - 1)
// for a list of wall flux kinds, with CSV and SVG writers.

#include <iosfwd>
#include <string>
#include <vector>

#include "wallbc/wall_fluxes.hpp"

namespace wallbc::sweep {

struct SweepSpec {
  double gamma = 1.4;
  double ma_min = -5.0 + 1e-3;
  double ma_max = 5.0;
  int samples = 2001;
  std::vector<WallFluxKind> kinds{kAllWallFluxKinds.begin(), kAllWallFluxKinds.end()};
  double rho_c = 1.0;
  /// ExactRP samples at or below vacuum_limit + vacuum_guard are dropped.
  double vacuum_guard = 1e-3;

  static SweepSpec full_range();  ///< |Ma_n| <= 5
  static SweepSpec zoom();        ///< |Ma_n| <= 1

  /// Throws InvalidRange.
  void validate() const;
};

struct SweepRow {
  double ma_n;
  WallFluxKind kind;
  double pstar_ratio;
  double delta_s;
};

/// Uniform samples on [ma_min, ma_max]; when 0 lies inside the range the
/// closest sample is replaced by exactly 0.
std::vector<double> sweep_grid(const SweepSpec& spec);

/// Rows ordered by sample index, then by the order of spec.kinds.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// Header `ma_n,kind,pstar_ratio,delta_s`, 17 significant digits, LF endings.
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);
/// One polyline per kind, axes labelled Ma_n and delta s.
void write_svg(std::ostream& out, const SweepSpec& spec, const std::vector<SweepRow>& rows);

/// Bisection for the root of delta_s(kind, m) inside [lo, hi]; the signs at the
/// ends must differ.
double locate_sign_change(WallFluxKind kind, const GasModel& gas, double lo, double hi,
                          double tol = 1e-13);

}  // namespace wallbc::sweep
