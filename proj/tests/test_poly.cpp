#include <doctest.h>

#include <limits>

#include "qes/poly.hpp"

using namespace qes;

TEST_CASE("poly_from_roots expands monic products") {
  MonicPoly one = poly_from_roots({});
  CHECK(one.degree() == 0);
  CHECK(one.coeffs[0] == cplx(1.0));

  MonicPoly p = poly_from_roots({-0.5, 2.0});
  REQUIRE(p.degree() == 2);
  CHECK(p.coeffs[2].real() == doctest::Approx(1.0));
  CHECK(p.coeffs[1].real() == doctest::Approx(-1.5));
  CHECK(p.coeffs[0].real() == doctest::Approx(-1.0));
  REQUIRE(p.roots.has_value());
  CHECK(p.roots->at(0) == cplx(-0.5));

  MonicPoly q = poly_from_roots({0.3660254, -1.3660254});
  CHECK(q.coeffs[1].real() == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(q.coeffs[0].real() == doctest::Approx(-0.5).epsilon(1e-6));

  double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(poly_from_roots({cplx(inf)}), Error);
}

TEST_CASE("eval_poly computes value and derivatives") {
  MonicPoly p = poly_from_roots({-0.5, 2.0}); // z^2 - 1.5 z - 1
  CHECK(eval_poly(p, 0.0).real() == doctest::Approx(-1.0));
  CHECK(eval_poly(p, 1.0, 1).real() == doctest::Approx(0.5));
  MonicPoly lin = poly_from_roots({3.0});
  CHECK(eval_poly(lin, 7.0, 2) == cplx(0.0));

  // derivative matches a central finite difference
  for (double z : {-4.2, -1.1, 0.7, 3.9}) {
    double fd = (eval_poly(p, z + 1e-6).real() - eval_poly(p, z - 1e-6).real()) /
                2e-6;
    CHECK(eval_poly(p, z, 1).real() == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("wronskian2 of linear factors is the root gap") {
  MonicPoly p = poly_from_roots({1.0}), q = poly_from_roots({3.0});
  CHECK(wronskian2(p, q, 0.37).real() == doctest::Approx(2.0));
  CHECK(wronskian2(p, p, 1.6) == cplx(0.0));
  MonicPoly a = poly_from_roots({-0.5}), b = poly_from_roots({2.0});
  CHECK(wronskian2(a, b, 0.0).real() == doctest::Approx(2.5));
}

TEST_CASE("log_deriv_sums") {
  LogDerivSums s0 = log_deriv_sums({}, 1.0);
  CHECK(s0.s1 == cplx(0.0));
  CHECK(s0.s2 == cplx(0.0));

  LogDerivSums s1 = log_deriv_sums({cplx(1.0)}, 3.0);
  CHECK(s1.s1.real() == doctest::Approx(0.5));
  CHECK(s1.s2.real() == doctest::Approx(0.25));

  LogDerivSums s2 = log_deriv_sums({cplx(-0.5), cplx(2.0)}, 0.0);
  CHECK(s2.s1.real() == doctest::Approx(1.5));
  CHECK(s2.s2.real() == doctest::Approx(4.25));

  // collision carries the offending root index
  try {
    log_deriv_sums({cplx(-0.5), cplx(2.0)}, 2.0);
    FAIL("expected pole error");
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::Pole);
    CHECK(e.index == 1);
  }

  // s1 equals p'/p for the expanded polynomial
  std::vector<cplx> roots = {cplx(-1.2), cplx(0.4), cplx(2.9)};
  MonicPoly p = poly_from_roots(roots);
  for (double z : {-3.0, 0.0, 1.7, 5.2}) {
    cplx s = log_deriv_sums(roots, z).s1;
    cplx ref = eval_poly(p, z, 1) / eval_poly(p, z);
    CHECK(std::abs(s - ref) < 1e-10 * std::abs(ref));
  }
}
