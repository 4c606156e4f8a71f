#pragma once
#include <array>

#include "qes/poly.hpp"

namespace qes {

// Standard second-order ODE with polynomial coefficients:
//   P4(z) phi'' + P3(z) phi' + (E - V1(z)) phi = 0,
// deg P4 <= 4, deg P3 <= 3, deg V1 <= 2, seeking degree-n polynomial phi.
struct OdeStandardForm {
  std::array<double, 5> a{};  // P4 coefficients, ascending (a[0]..a[4])
  std::array<double, 4> b{};  // P3 coefficients, ascending
  std::array<double, 3> v1{}; // V1 coefficients, ascending
  int n = 0;

  cplx P4(cplx z, int order = 0) const;
  cplx P3(cplx z, int order = 0) const;
  cplx V1(cplx z, int order = 0) const;
};

// The three P2 coefficients forced by a Bethe root configuration:
//   c2 = -n(n-1)a4 - n b3
//   c1 = -[2(n-1)a4 + b3] S1 - n(n-1)a3 - n b2
//   c0 = -[2(n-1)a4 + b3] S2 - 2 a4 S11 - [2(n-1)a3 + b2] S1 - n(n-1)a2 - n b1
// with S1 = sum z_i, S2 = sum z_i^2, S11 = sum_{i<j} z_i z_j.
struct CConstraints {
  cplx c2, c1, c0;
};
CConstraints c_constraints(const OdeStandardForm& form,
                           const std::vector<cplx>& roots);

// |P4 p'' + P3 p' + (E - V1) p| / max(1, sum of term magnitudes) at z.
double ode_residual(const OdeStandardForm& form, cplx E, const MonicPoly& p,
                    cplx z);

// Certifies the QES parameter constraints for a root set: c2 = -v1[2],
// c1 = -v1[1], c0 = E - v1[0].
struct ConsistencyReport {
  double d2, d1, d0; // per-coefficient discrepancies
  double max_discrepancy() const;
  bool pass(double tol = 1e-8) const { return max_discrepancy() < tol; }
};
ConsistencyReport qes_consistency_check(const OdeStandardForm& form,
                                        const std::vector<cplx>& roots, cplx E);

} // namespace qes
