#include "wallbc/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace wallbc::sweep {

namespace {

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fixed(double x, int digits = 2) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

const char* color_for(WallFluxKind kind) {
  switch (kind) {
    case WallFluxKind::InternalPressure: return "#7f7f7f";
    case WallFluxKind::ExactRP: return "#000000";
    case WallFluxKind::LaxFriedrichs: return "#1f77b4";
    case WallFluxKind::HLL: return "#2ca02c";
    case WallFluxKind::HLLC: return "#98df8a";
    case WallFluxKind::Roe: return "#d62728";
    case WallFluxKind::ECLF: return "#ff7f0e";
    case WallFluxKind::ECRoe: return "#9467bd";
  }
  return "#000000";
}

}  // namespace

SweepSpec SweepSpec::full_range() { return SweepSpec{}; }

SweepSpec SweepSpec::zoom() {
  SweepSpec s;
  s.ma_min = -1.0;
  s.ma_max = 1.0;
  return s;
}

void SweepSpec::validate() const {
  GasModel{gamma};
  if (!(ma_min < ma_max)) throw Error(ErrorCode::InvalidRange, "need ma_min < ma_max");
  if (samples < 2) throw Error(ErrorCode::InvalidRange, "need at least 2 samples");
  if (kinds.empty()) throw Error(ErrorCode::InvalidRange, "no wall flux kinds requested");
  if (!(rho_c > 0.0)) throw Error(ErrorCode::InvalidRange, "rho_c must be positive");
  if (!(vacuum_guard >= 0.0)) throw Error(ErrorCode::InvalidRange, "vacuum guard must be >= 0");
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
  spec.validate();
  std::vector<double> grid(spec.samples);
  const double step = (spec.ma_max - spec.ma_min) / (spec.samples - 1);
  for (int i = 0; i < spec.samples; ++i) grid[i] = spec.ma_min + i * step;
  grid.back() = spec.ma_max;
  if (spec.ma_min < 0.0 && spec.ma_max > 0.0) {
    const auto closest = std::min_element(grid.begin(), grid.end(), [](double a, double b) {
      return std::abs(a) < std::abs(b);
    });
    *closest = 0.0;
  }
  return grid;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  const GasModel gas(spec.gamma);
  const std::vector<double> grid = sweep_grid(spec);
  const double exact_floor = vacuum_limit(gas) + spec.vacuum_guard;
  std::vector<SweepRow> rows;
  rows.reserve(grid.size() * spec.kinds.size());
  for (double m : grid) {
    for (WallFluxKind kind : spec.kinds) {
      if (kind == WallFluxKind::ExactRP && m <= exact_floor) continue;
      const WallPressureResult r = wall_pressure(kind, m, spec.rho_c, 1.0, gas);
      rows.push_back(SweepRow{m, kind, r.ratio, r.delta_s});
    }
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "ma_n,kind,pstar_ratio,delta_s\n";
  for (const SweepRow& r : rows) {
    out << g17(r.ma_n) << ',' << to_string(r.kind) << ',' << g17(r.pstar_ratio) << ','
        << g17(r.delta_s) << '\n';
  }
}

void write_svg(std::ostream& out, const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  constexpr double width = 800.0, height = 500.0;
  constexpr double left = 80.0, right = 170.0, top = 30.0, bottom = 60.0;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;

  double y_min = 0.0, y_max = 0.0;
  for (const SweepRow& r : rows) {
    y_min = std::min(y_min, r.delta_s);
    y_max = std::max(y_max, r.delta_s);
  }
  if (y_max - y_min < 1e-12) {
    y_min -= 1.0;
    y_max += 1.0;
  }
  const double x_min = spec.ma_min, x_max = spec.ma_max;
  auto sx = [&](double x) { return left + (x - x_min) / (x_max - x_min) * plot_w; };
  auto sy = [&](double y) { return top + (y_max - y) / (y_max - y_min) * plot_h; };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";
  out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w << "\" height=\""
      << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";
  if (y_min < 0.0 && y_max > 0.0) {
    out << "<line x1=\"" << left << "\" y1=\"" << fixed(sy(0.0)) << "\" x2=\"" << left + plot_w
        << "\" y2=\"" << fixed(sy(0.0)) << "\" stroke=\"#cccccc\"/>\n";
  }
  if (x_min < 0.0 && x_max > 0.0) {
    out << "<line x1=\"" << fixed(sx(0.0)) << "\" y1=\"" << top << "\" x2=\"" << fixed(sx(0.0))
        << "\" y2=\"" << top + plot_h << "\" stroke=\"#cccccc\"/>\n";
  }
  for (int i = 0; i <= 4; ++i) {
    const double xv = x_min + (x_max - x_min) * i / 4.0;
    const double yv = y_min + (y_max - y_min) * i / 4.0;
    out << "<text x=\"" << fixed(sx(xv)) << "\" y=\"" << top + plot_h + 18
        << "\" font-size=\"12\" text-anchor=\"middle\">" << fixed(xv) << "</text>\n";
    out << "<text x=\"" << left - 6 << "\" y=\"" << fixed(sy(yv) + 4)
        << "\" font-size=\"12\" text-anchor=\"end\">" << fixed(yv) << "</text>\n";
  }
  out << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 15
      << "\" font-size=\"14\" text-anchor=\"middle\">Ma_n</text>\n";
  out << "<text x=\"20\" y=\"" << top + plot_h / 2 << "\" font-size=\"14\" text-anchor=\"middle\""
      << " transform=\"rotate(-90 20 " << top + plot_h / 2 << ")\">&#916;s</text>\n";

  int legend_row = 0;
  for (WallFluxKind kind : spec.kinds) {
    std::ostringstream points;
    bool any = false;
    for (const SweepRow& r : rows) {
      if (r.kind != kind) continue;
      points << (any ? " " : "") << fixed(sx(r.ma_n), 3) << ',' << fixed(sy(r.delta_s), 3);
      any = true;
    }
    out << "<polyline data-kind=\"" << to_string(kind) << "\" fill=\"none\" stroke=\""
        << color_for(kind) << "\" stroke-width=\"1.5\" points=\"" << points.str() << "\"/>\n";
    const double ly = top + 15 + 18 * legend_row++;
    const double lx = left + plot_w + 15;
    out << "<line x1=\"" << lx << "\" y1=\"" << ly << "\" x2=\"" << lx + 25 << "\" y2=\"" << ly
        << "\" stroke=\"" << color_for(kind) << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << lx + 32 << "\" y=\"" << ly + 4 << "\" font-size=\"12\">"
        << to_string(kind) << "</text>\n";
  }
  out << "</svg>\n";
}

double locate_sign_change(WallFluxKind kind, const GasModel& gas, double lo, double hi,
                          double tol) {
  auto f = [&](double m) {
    return delta_s(1.0, 1.0, m, kernels::pstar_ratio(kind, m, gas.gamma()));
  };
  double f_lo = f(lo);
  if ((f_lo < 0.0) == (f(hi) < 0.0)) {
    throw Error(ErrorCode::InvalidRange, "delta_s has the same sign at both bracket ends");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = f(mid);
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace wallbc::sweep
