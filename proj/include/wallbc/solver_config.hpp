#pragma once

// Plain-text solver configuration: one `key = value` per line, `#` starts a
// comment. Recognised keys:
//
//   num_elements, poly_degree, gamma, cfl, end_time, domain_length, dt,
//   boundary (wall | periodic), wall_left, wall_right, interface_flux
//   (EC | ECPlusLF), initial_condition (uniform | density_wave | pulse),
//   rho, p, mach, tangential_velocity, amplitude, width
//
// `end_time` also accepts `<x> transit` meaning x * L / c of the initial state.

#include <iosfwd>
#include <string>

#include "wallbc/dgsem_solver.hpp"

namespace wallbc::dg {

/// Throws ConfigParseError (with the path in the message) on unreadable files,
/// malformed lines, unknown keys and bad values.
SolverConfig load_config(const std::string& path);
SolverConfig parse_config(std::istream& in, const std::string& origin = "<stream>");

/// Header `t,S_total,dSdt_discrete,boundary_left,boundary_right,defect`,
/// 17 significant digits, LF line endings.
void write_budget_csv(std::ostream& out, const EntropyBudget& budget);
void write_budget_csv(const std::string& path, const EntropyBudget& budget);

}  // namespace wallbc::dg
