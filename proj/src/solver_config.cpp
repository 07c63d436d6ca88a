#include "wallbc/solver_config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace wallbc::dg {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_error(const std::string& origin, int line, const std::string& what) {
  std::ostringstream os;
  os << origin << ":" << line << ": " << what;
  throw Error(ErrorCode::ConfigParseError, os.str());
}

double to_double(const std::string& value, const std::string& origin, int line) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(value, &used);
  } catch (const std::exception&) {
    parse_error(origin, line, "expected a number, got '" + value + "'");
  }
  if (used != value.size()) parse_error(origin, line, "expected a number, got '" + value + "'");
  return x;
}

int to_int(const std::string& value, const std::string& origin, int line) {
  const double x = to_double(value, origin, line);
  if (x != std::floor(x)) parse_error(origin, line, "expected an integer, got '" + value + "'");
  return static_cast<int>(x);
}

std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

SolverConfig parse_config(std::istream& in, const std::string& origin) {
  SolverConfig cfg;
  std::optional<double> transit_multiple;
  std::string raw;
  int line = 0;

  using Setter = std::function<void(const std::string&, int)>;
  auto wall = [&](WallFluxKind& slot) {
    return [target = &slot, origin](const std::string& v, int ln) {
      const auto kind = parse_wall_flux_kind(v);
      if (!kind) parse_error(origin, ln, "unknown wall flux kind '" + v + "'");
      *target = *kind;
    };
  };
  auto number = [&](double& slot) {
    return [target = &slot, origin](const std::string& v, int ln) {
      *target = to_double(v, origin, ln);
    };
  };
  InitialCondition& ic = cfg.initial_condition;
  const std::map<std::string, Setter> setters = {
      {"num_elements", [&](const std::string& v, int ln) { cfg.num_elements = to_int(v, origin, ln); }},
      {"poly_degree", [&](const std::string& v, int ln) { cfg.poly_degree = to_int(v, origin, ln); }},
      {"gamma", number(cfg.gamma)},
      {"cfl", number(cfg.cfl)},
      {"domain_length", number(cfg.domain_length)},
      {"end_time",
       [&](const std::string& v, int ln) {
         std::istringstream is(v);
         std::string amount, unit;
         is >> amount >> unit;
         if (unit == "transit") {
           transit_multiple = to_double(amount, origin, ln);
         } else if (unit.empty()) {
           cfg.end_time = to_double(amount, origin, ln);
           transit_multiple.reset();
         } else {
           parse_error(origin, ln, "end_time unit must be 'transit', got '" + unit + "'");
         }
       }},
      {"dt", [&](const std::string& v, int ln) { cfg.fixed_dt = to_double(v, origin, ln); }},
      {"boundary",
       [&](const std::string& v, int ln) {
         if (v == "wall") cfg.boundary = BoundaryType::Wall;
         else if (v == "periodic") cfg.boundary = BoundaryType::Periodic;
         else parse_error(origin, ln, "boundary must be 'wall' or 'periodic'");
       }},
      {"wall_left", wall(cfg.wall_left)},
      {"wall_right", wall(cfg.wall_right)},
      {"interface_flux",
       [&](const std::string& v, int ln) {
         if (v == "EC" || v == "ec") cfg.interface_flux = InterfaceFlux::EC;
         else if (v == "ECPlusLF" || v == "ec+lf" || v == "eclf") cfg.interface_flux = InterfaceFlux::ECPlusLF;
         else parse_error(origin, ln, "interface_flux must be 'EC' or 'ECPlusLF'");
       }},
      {"initial_condition", [&](const std::string& v, int) { ic.preset = v; }},
      {"rho", number(ic.rho)},
      {"p", number(ic.p)},
      {"mach", number(ic.mach)},
      {"tangential_velocity", number(ic.tangential_velocity)},
      {"amplitude", number(ic.amplitude)},
      {"width", number(ic.width)},
  };

  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string text = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) parse_error(origin, line, "expected 'key = value'");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (value.empty()) parse_error(origin, line, "missing value for '" + key + "'");
    const auto it = setters.find(key);
    if (it == setters.end()) parse_error(origin, line, "unknown key '" + key + "'");
    it->second(value, line);
  }

  if (transit_multiple) {
    const double c = std::sqrt(cfg.gamma * ic.p / ic.rho);
    cfg.end_time = *transit_multiple * cfg.domain_length / c;
  }
  try {
    cfg.validate();
  } catch (const Error& err) {
    throw Error(ErrorCode::ConfigParseError, origin + ": " + err.what());
  }
  return cfg;
}

SolverConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigParseError, "cannot open config file '" + path + "'");
  return parse_config(in, path);
}

void write_budget_csv(std::ostream& out, const EntropyBudget& budget) {
  out << "t,S_total,dSdt_discrete,boundary_left,boundary_right,defect\n";
  for (const BudgetRow& r : budget.rows) {
    out << format_g17(r.t) << ',' << format_g17(r.S_total) << ',' << format_g17(r.dSdt_discrete)
        << ',' << format_g17(r.boundary_left) << ',' << format_g17(r.boundary_right) << ','
        << format_g17(r.defect) << '\n';
  }
}

void write_budget_csv(const std::string& path, const EntropyBudget& budget) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  write_budget_csv(out, budget);
  if (!out) throw Error(ErrorCode::IoError, "write failed for '" + path + "'");
}

}  // namespace wallbc::dg
