#include <doctest.h>

#include <cmath>

#include "qes/susy.hpp"

using namespace qes;

namespace {

SusyPartner morse1_partner() {
  CaseInstance c =
      instantiate("morse1", {{"a", 1}, {"b", 1}, {"c", 1}, {"alpha", 1}}, 1);
  auto spec = solve_spectrum(c.form, c.z_lo, c.z_hi);
  return make_partner(c, spec);
}

SusyPartner sextic6_partner() {
  CaseInstance c = instantiate("sextic6", {{"a", 1}, {"b", 1}}, 1);
  auto spec = solve_spectrum(c.form, c.z_lo, c.z_hi);
  return make_partner(c, spec);
}

} // namespace

TEST_CASE("make_partner defaults to the lowest-energy seed") {
  SusyPartner p = morse1_partner();
  CHECK(p.seed.energy.real() == doctest::Approx(-3.0));
  CHECK(p.other.energy.real() == doctest::Approx(2.0));
  CHECK(p.gap.real() == doctest::Approx(-5.0));
  CHECK(p.seed_pole_zs[0].real() == doctest::Approx(-0.5));

  CaseInstance c =
      instantiate("morse1", {{"a", 1}, {"b", 1}, {"c", 1}, {"alpha", 1}}, 1);
  auto spec = solve_spectrum(c.form, c.z_lo, c.z_hi);
  CHECK_THROWS_AS(make_partner(c, spec, 0, 0), Error);
  SusyPartner swapped = make_partner(c, spec, 1, 0);
  CHECK(swapped.gap.real() == doctest::Approx(5.0));
}

TEST_CASE("partner_poly") {
  SusyPartner p = morse1_partner();
  // n = 1: sqrt(P4) (q - p) / (z - p)
  CHECK(p.phi2(1.0).real() == doctest::Approx(10.0 / 6.0));

  // Wronskian of identical states vanishes
  CHECK(std::abs(partner_poly(p.seed, p.seed, p.cse.form, 1.3)) < 1e-14);

  SusyPartner s = sextic6_partner();
  CHECK(s.phi2(1.0).real() == doctest::Approx(1.4641).epsilon(1e-4));
}

TEST_CASE("partner_ode_potential") {
  SusyPartner s = sextic6_partner();
  CHECK(s.V2_z(1.0).real() == doctest::Approx(4.73847).epsilon(1e-5));

  // n = 0 seed: all root sums vanish
  CaseInstance c = instantiate("sextic6", {{"a", 1}, {"b", 1}}, 0);
  auto spec = solve_spectrum(c.form, c.z_lo, c.z_hi);
  BetheSolution seed = spec[0];
  double z = 1.5;
  double expected =
      c.form.V1(z).real() +
      0.25 * (2 * (c.form.P4(z, 2).real() - 2 * c.form.P3(z, 1).real()) +
              (2 * c.form.P3(z).real() - c.form.P4(z, 1).real()) *
                  c.form.P4(z, 1).real() / c.form.P4(z).real());
  CHECK(partner_ode_potential(seed, c.form, z).real() == doctest::Approx(expected));

  // P4(0) = 0 is rejected
  CHECK_THROWS_AS(partner_ode_potential(seed, c.form, 0.0), Error);
}

TEST_CASE("bare supercharges") {
  SusyPartner p = morse1_partner();
  DiffFn sq = [](cplx z) { return Jet1{z * z, 2.0 * z}; };
  CHECK(apply_A_bare(p.seed, p.cse.form, sq, 1.0).real() ==
        doctest::Approx(2.0 - 1.0 / 1.5));

  // annihilation of the seed
  DiffFn seed_fn = [&](cplx z) {
    return Jet1{eval_poly(p.seed.poly, z), eval_poly(p.seed.poly, z, 1)};
  };
  for (double z : {0.4, 1.0, 2.6})
    CHECK(std::abs(apply_A_bare(p.seed, p.cse.form, seed_fn, z)) < 1e-12);

  // B phi2 = gap * phi_other; at z = 1 this is (-5)(1-2) = 5
  DiffFn phi2_fn = [&](cplx z) {
    double h = 1e-6;
    return Jet1{p.phi2(z), (p.phi2(z + h) - p.phi2(z - h)) / (2 * h)};
  };
  CHECK(apply_B_bare(p.seed, p.other, p.cse.form, phi2_fn, 1.0).real() ==
        doctest::Approx(5.0).epsilon(1e-6));
}

TEST_CASE("identity suite over the ten closed-form cases") {
  SusyPartner p = morse1_partner();
  SusyIdentityReport r = susy_identity_suite(p, p.cse.z_lo, p.cse.z_hi);
  CHECK(r.annihilation < 1e-11);
  CHECK(r.mapping < 1e-11);
  CHECK(r.reverse_mapping < 1e-8);
  CHECK(r.factorization < 1e-8);
  CHECK(r.intertwining < 1e-7);
  CHECK(r.partner_residual < 1e-8);
}

TEST_CASE("schrodinger-side evaluators") {
  SusyPartner s = sextic6_partner();
  // rho = 1: V2(x) = -V + 2 Lambda + 2 ((ln psi_seed)')^2
  double x = 0.9, z = x * x;
  double up = (log_deriv_sums(s.seed.roots, z).s1.real() - s.cse.gauge_K(z)) *
              s.cse.dzdx(x);
  double expected = -s.cse.V_x(x) + 2 * s.seed.energy.real() + 2 * up * up;
  auto got = s.V2_x(x);
  REQUIRE(got.has_value());
  CHECK(*got == doctest::Approx(expected));

  auto w = s.wavefunctions(0.0);
  CHECK(w.psi_seed == doctest::Approx(1.3660254).epsilon(1e-6));

  CaseInstance cp = instantiate("periodic10", {{"a", 1}, {"alpha", 1}}, 1);
  auto spp = solve_spectrum(cp.form, cp.z_lo, cp.z_hi);
  SusyPartner pp = make_partner(cp, spp);
  auto wp = pp.wavefunctions(0.0);
  REQUIRE(wp.psi2.has_value());
  CHECK(std::abs(*wp.psi2) < 1e-12); // sin(alpha x) factor

  // pole marker at the seed node
  CaseInstance cm =
      instantiate("morse1", {{"a", 1}, {"b", 1}, {"c", 1}, {"alpha", 1}}, 1);
  auto spm = solve_spectrum(cm.form, cm.z_lo, cm.z_hi);
  SusyPartner pm = make_partner(cm, spm, 1, 0); // seed root z = 2
  CHECK_FALSE(pm.V2_x(-std::log(2.0)).has_value());
}

TEST_CASE("radial wrap") {
  CaseInstance c = instantiate(
      "sextic7", {{"a", 2}, {"b", 1}, {"c", 1}, {"l", 1}, {"d", 2}}, 1);
  auto spec = solve_spectrum(c.form, c.z_lo, c.z_hi);
  SusyPartner p = make_partner(c, spec);
  double r = 1.3;
  auto w = p.wavefunctions(r);
  auto ws = p.wavefunctions_radial(r);
  double h = std::pow(r, -0.5); // d = 2
  CHECK(ws.psi_seed == doctest::Approx(w.psi_seed * h));
  auto v2 = p.V2_x(r), vs2 = p.VS2_x(r);
  REQUIRE((v2 && vs2));
  CHECK(*vs2 == doctest::Approx(*v2 - c.radial_N() / (4 * r * r)));
  CHECK_THROWS_AS(p.wavefunctions_radial(-1.0), Error);
}

TEST_CASE("algebraic-only cases stay in z-space") {
  CaseInstance c = instantiate("lame12", {{"g2", 4}, {"g3", 0}, {"mu", 1}}, 1);
  auto spec = solve_spectrum(c.form, c.z_lo, c.z_hi);
  SusyPartner p = make_partner(c, spec);
  CHECK_THROWS_AS(p.V2_x(2.5), Error);
  CHECK_THROWS_AS(p.wavefunctions(2.5), Error);
  CHECK(std::isfinite(p.phi2(c.z_lo).real()));
}
