#include <doctest.h>

#include <wallbc/errors.hpp>
#include <wallbc/riemann_oracle.hpp>
#include <wallbc/wall_fluxes.hpp>

#include "support.hpp"

using namespace wallbc;
using namespace wallbc::oracle;
using testing::Rng;

namespace {

const GasModel air(1.4);

RiemannPair mirror_pair(const ConservativeState& u, const Vec3& n) {
  const auto [l, r] = mirror_state(u, n);
  return {l, r, n};
}

}  // namespace

TEST_CASE("exact star state") {
  const ConservativeState u = conservative_from_primitive({1.0, Vec3(0.1, 0, 0), 1.0}, air);
  const StarState s = exact_riemann_star(mirror_pair(u, Vec3::UnitX()), air);
  CHECK(std::abs(s.u_star) < 1e-14);
  CHECK(s.p_star == doctest::Approx(1.1245).epsilon(1e-4));
  CHECK(s.p_star == doctest::Approx(pstar_ratio(WallFluxKind::ExactRP, 0.1 / std::sqrt(1.4), air))
                        .epsilon(1e-12));

  const ConservativeState w = conservative_from_primitive({0.7, Vec3(0.3, -0.2, 0.1), 1.9}, air);
  const StarState same = exact_riemann_star({w, w, Vec3::UnitX()}, air);
  CHECK(same.p_star == doctest::Approx(1.9).epsilon(1e-13));
  CHECK(same.u_star == doctest::Approx(0.3).epsilon(1e-13));

  const StarState sod = exact_riemann_star(
      {conservative_from_primitive({1.0, Vec3::Zero(), 1.0}, air),
       conservative_from_primitive({0.125, Vec3::Zero(), 0.1}, air), Vec3::UnitX()},
      air);
  CHECK(std::abs(sod.p_star - 0.30313) < 1e-4);
  CHECK(std::abs(exact_pressure_function(
            {conservative_from_primitive({1.0, Vec3::Zero(), 1.0}, air),
             conservative_from_primitive({0.125, Vec3::Zero(), 0.1}, air), Vec3::UnitX()},
            sod.p_star, air)) < 1e-12);

  const ConservativeState fast = conservative_from_primitive({1.0, Vec3(-6 * std::sqrt(1.4), 0, 0), 1.0}, air);
  try {
    exact_riemann_star(mirror_pair(fast, Vec3::UnitX()), air);
    FAIL("expected VacuumGenerated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::VacuumGenerated);
  }
}

TEST_CASE("exact solver on random mirror pairs matches the closed form") {
  Rng rng(41);
  for (int i = 0; i < 1000; ++i) {
    const double m = testing::uniform(rng, -4.9, 5.0);
    const Vec3 n = testing::random_unit(rng);
    const ConservativeState u = testing::wall_state(rng, air, n, m);
    const StarState s = exact_riemann_star(mirror_pair(u, n), air);
    CHECK(testing::rel_diff(s.p_star / pressure(u, air), pstar_ratio(WallFluxKind::ExactRP, m, air)) <
          1e-10);
  }
}

TEST_CASE("wave speed estimates") {
  const double c = std::sqrt(1.4);
  const ConservativeState u = conservative_from_primitive({1.0, Vec3(0.5 * c, 0, 0), 1.0}, air);
  const WaveSpeeds s = wave_speed_estimates(mirror_pair(u, Vec3::UnitX()), air, WaveSpeedMethod::WallExact);
  CHECK(s.right == doctest::Approx(0.5 * c));
  CHECK(s.left == doctest::Approx(-0.5 * c));

  const ConservativeState rest = conservative_from_primitive({1.0, Vec3::Zero(), 1.0}, air);
  for (WaveSpeedMethod method : {WaveSpeedMethod::WallExact, WaveSpeedMethod::Davis, WaveSpeedMethod::SideLocal}) {
    const WaveSpeeds r = wave_speed_estimates({rest, rest, Vec3::UnitX()}, air, method);
    CHECK(r.left == doctest::Approx(-c));
    CHECK(r.right == doctest::Approx(c));
  }
  const ConservativeState other = conservative_from_primitive({1.2, Vec3::Zero(), 1.0}, air);
  CHECK_FALSE(is_mirror_pair({rest, other, Vec3::UnitX()}, air));
  try {
    wave_speed_estimates({rest, other, Vec3::UnitX()}, air, WaveSpeedMethod::WallExact);
    FAIL("expected NotAMirrorPair");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAMirrorPair);
  }
}

TEST_CASE("approximate solvers are consistent and conservative") {
  Rng rng(42);
  for (int i = 0; i < 200; ++i) {
    const ConservativeState a = testing::random_state(rng, air);
    const ConservativeState b = testing::random_state(rng, air);
    const Vec3 n = testing::random_unit(rng);
    for (Solver solver : {Solver::LaxFriedrichs, Solver::HLL, Solver::HLLC, Solver::Roe}) {
      const NormalFlux f = approximate_flux(solver, {a, a, n}, air);
      CHECK((f - physical_normal_flux(a, n, air)).norm() < 1e-12 * (1 + f.norm()));
      // F(uL, uR; n) = -F(uR, uL; -n)
      const NormalFlux fwd = approximate_flux(solver, {a, b, n}, air);
      const NormalFlux back = approximate_flux(solver, {b, a, -n}, air);
      CHECK((fwd + back).norm() < 1e-12 * (1 + fwd.norm()));
    }
  }
}

TEST_CASE("solvers on mirror pairs reproduce the wall closed forms") {
  Rng rng(43);
  const std::pair<Solver, WallFluxKind> cases[] = {{Solver::LaxFriedrichs, WallFluxKind::LaxFriedrichs},
                                                   {Solver::HLL, WallFluxKind::HLL},
                                                   {Solver::HLLC, WallFluxKind::HLLC},
                                                   {Solver::Roe, WallFluxKind::Roe}};
  for (int i = 0; i < 1000; ++i) {
    const Vec3 n = testing::random_unit(rng);
    for (const auto& [solver, kind] : cases) {
      const bool subsonic_only = solver == Solver::HLL || solver == Solver::HLLC;
      const double m = subsonic_only ? testing::uniform(rng, -0.95, 0.95) : testing::uniform(rng, -3, 3);
      const ConservativeState u = testing::wall_state(rng, air, n, m);
      const NormalFlux f = approximate_flux(solver, mirror_pair(u, n), air, WaveSpeedMethod::WallExact);
      const NormalFlux ref = wall_flux(kind, u, n, air);
      const double scale = std::max(ref.norm(), pressure(u, air));
      // Mass and energy vanish by cancellation of the one-sided fluxes.
      const double cancel = physical_normal_flux(u, n, air).norm();
      CHECK(std::abs(f[0]) < 1e-13 * cancel);
      CHECK(std::abs(f[4]) < 1e-13 * cancel);
      CHECK((f.segment<3>(1) - ref.segment<3>(1)).norm() < 1e-12 * scale);
    }
  }
}

TEST_CASE("HLLC contact and Roe linearization on a mirror pair") {
  const double c = std::sqrt(1.4);
  const ConservativeState u = conservative_from_primitive({1.3, Vec3(0.4 * c, 0.2, -0.1), 1.1}, air);
  const RiemannPair pair = mirror_pair(u, Vec3::UnitX());
  CHECK(std::abs(hllc_contact_speed(pair, air, WaveSpeedMethod::WallExact)) < 1e-14);

  const RoeDiagnostics roe = roe_diagnostics(pair, air);
  const PrimitiveState q = primitive_from_conservative(u, air);
  const double H = (u.E + q.p) / u.rho;
  CHECK(roe.vn_tilde == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(roe.rho_tilde == doctest::Approx(1.3));
  const double vt2 = q.v[1] * q.v[1] + q.v[2] * q.v[2];
  CHECK(roe.c_tilde == doctest::Approx(std::sqrt(0.4 * (H - 0.5 * vt2))).epsilon(1e-14));
  CHECK(roe.alpha[0] == doctest::Approx(u.rho * q.v[0] / roe.c_tilde).epsilon(1e-13));
}

TEST_CASE("Davis speeds widen HLL toward Lax-Friedrichs") {
  const double c = std::sqrt(1.4);
  const ConservativeState u = conservative_from_primitive({1.0, Vec3(0.3 * c, 0, 0), 1.0}, air);
  const RiemannPair pair = mirror_pair(u, Vec3::UnitX());
  const NormalFlux davis = approximate_flux(Solver::HLL, pair, air, WaveSpeedMethod::Davis);
  const NormalFlux lf = approximate_flux(Solver::LaxFriedrichs, pair, air);
  CHECK((davis - lf).norm() < 1e-13);
}
