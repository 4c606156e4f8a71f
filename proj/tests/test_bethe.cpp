#include <doctest.h>

#include <cmath>

#include "qes/bethe.hpp"
#include "qes/catalog.hpp"

using namespace qes;

TEST_CASE("algebraize builds the invariant-subspace matrix") {
  CaseInstance morse = instantiate("morse1", {{"a", 1}, {"b", 1}, {"c", 1}, {"alpha", 1}}, 1);
  auto M = algebraize(morse.form);
  REQUIRE(M.size() == 2);
  // eigenvalues of M are -E; trace/det fix the set {2, -3}
  double tr = M[0][0] + M[1][1];
  double det = M[0][0] * M[1][1] - M[0][1] * M[1][0];
  CHECK(tr == doctest::Approx(1.0));  // (-2) + 3
  CHECK(det == doctest::Approx(-6.0));

  // broken constraint: overflow row becomes nonzero
  OdeStandardForm bad = morse.form;
  bad.v1[1] += 0.5;
  CHECK_THROWS_AS(algebraize(bad), Error);
  try {
    algebraize(bad);
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::NotQes);
  }

  // n = 0: 1x1 matrix, E = v1 constant (linear V1 term must vanish)
  OdeStandardForm z0 = morse.form;
  z0.n = 0;
  z0.v1[1] = 0;
  auto M0 = algebraize(z0);
  REQUIRE(M0.size() == 1);
  CHECK(-M0[0][0] == doctest::Approx(z0.v1[0]));
}

TEST_CASE("solve_spectrum n=1 pairings") {
  CaseInstance morse = instantiate("morse1", {{"a", 1}, {"b", 1}, {"c", 1}, {"alpha", 1}}, 1);
  auto spec = solve_spectrum(morse.form, morse.z_lo, morse.z_hi);
  REQUIRE(spec.size() == 2);
  CHECK(spec[0].energy.real() == doctest::Approx(-3.0));
  CHECK(spec[0].roots[0].real() == doctest::Approx(-0.5));
  CHECK(spec[1].energy.real() == doctest::Approx(2.0));
  CHECK(spec[1].roots[0].real() == doctest::Approx(2.0));
  for (const auto& s : spec) {
    CHECK(s.is_real);
    CHECK(s.bae_residual < 1e-8);
    CHECK(s.ode_residual_max < 1e-9);
  }

  CaseInstance sext = instantiate("sextic6", {{"a", 1}, {"b", 1}}, 1);
  auto ss = solve_spectrum(sext.form, sext.z_lo, sext.z_hi);
  double S = std::sqrt(3.0);
  CHECK(ss[0].energy.real() == doctest::Approx(3.0 - 2.0 * S));
  CHECK(ss[1].energy.real() == doctest::Approx(3.0 + 2.0 * S));

  CaseInstance m2 = instantiate("morse2", {{"a", -6}, {"b", 1}, {"d", 2}, {"alpha", 1}}, 1);
  auto sm = solve_spectrum(m2.form, m2.z_lo, m2.z_hi);
  CHECK(sm[0].energy.real() == doctest::Approx(-6.0 - std::sqrt(48.0)));
  CHECK(sm[1].energy.real() == doctest::Approx(-6.0 + std::sqrt(48.0)));

  CaseInstance per = instantiate("periodic10", {{"a", 1}, {"alpha", 1}}, 1);
  auto sp = solve_spectrum(per.form, per.z_lo, per.z_hi);
  double R = std::sqrt(17.0);
  CHECK(sp[0].energy.real() == doctest::Approx((1.0 - R) / 2.0));
  CHECK(sp[0].roots[0].real() == doctest::Approx(-(1.0 + R) / 4.0));
  CHECK(sp[1].roots[0].real() == doctest::Approx(-(1.0 - R) / 4.0));
}

TEST_CASE("solve_spectrum invariants") {
  CaseInstance m2 = instantiate("morse2", {{"a", 1}, {"b", 1}, {"d", 1}, {"alpha", 1}}, 10);
  auto spec = solve_spectrum(m2.form, m2.z_lo, m2.z_hi);
  REQUIRE(spec.size() == 11);
  for (const auto& s : spec) {
    CHECK(s.is_real);
    CHECK(s.bae_residual < 1e-8);
    // poly == poly_from_roots(roots) and consistency certificate
    CHECK(qes_consistency_check(m2.form, s.roots, s.energy).pass());
    // root sum matches -coeff of z^{n-1}
    cplx sum = 0.0;
    for (cplx r : s.roots) sum += r;
    CHECK(std::abs(sum + s.poly.coeffs[s.n - 1]) < 1e-9 * (1 + std::abs(sum)));
  }
  for (size_t i = 1; i < spec.size(); ++i)
    CHECK(spec[i].energy.real() > spec[i - 1].energy.real());
}

TEST_CASE("bae_residual") {
  CaseInstance sext = instantiate("sextic6", {{"a", 1}, {"b", 1}}, 1);
  CHECK(bae_residual(sext.form, {cplx(0.3660254)}) < 1e-6);
  CHECK_THROWS_AS(bae_residual(sext.form, {cplx(0.0)}), Error); // P4(0)=0
  CaseInstance morse = instantiate("morse1", {{"a", 1}, {"b", 1}, {"c", 1}, {"alpha", 1}}, 1);
  CHECK(bae_residual(morse.form, {cplx(2.0)}) < 1e-10);
}

TEST_CASE("refine_bae recovers perturbed roots") {
  CaseInstance sext = instantiate("sextic6", {{"a", 1}, {"b", 1}}, 1);
  double exact = 1.0 / (1.0 + std::sqrt(3.0));
  auto refined = refine_bae(sext.form, {cplx(exact + 1e-3)});
  CHECK(std::abs(refined[0] - exact) < 1e-11);
  CHECK(bae_residual(sext.form, refined) < 1e-12);

  // exact fixed point is returned unchanged
  auto fixed = refine_bae(sext.form, refined);
  CHECK(std::abs(fixed[0] - refined[0]) < 1e-14);

  // n = 10 run refines cleanly
  CaseInstance m2 = instantiate("morse2", {{"a", 1}, {"b", 1}, {"d", 1}, {"alpha", 1}}, 10);
  auto spec = solve_spectrum(m2.form, m2.z_lo, m2.z_hi);
  auto r = refine_bae(m2.form, spec[5].roots);
  CHECK(bae_residual(m2.form, r) < 1e-8);
}
