#include "qes/odeform.hpp"

#include <algorithm>
#include <cmath>

namespace qes {

namespace {
template <size_t N>
cplx poly_eval(const std::array<double, N>& c, cplx z, int order) {
  cplx acc = 0.0;
  if (order == 0) {
    for (int k = N - 1; k >= 0; --k) acc = acc * z + c[k];
  } else if (order == 1) {
    for (int k = N - 1; k >= 1; --k) acc = acc * z + double(k) * c[k];
  } else if (order == 2) {
    for (int k = N - 1; k >= 2; --k)
      acc = acc * z + double(k) * double(k - 1) * c[k];
  } else {
    throw Error(ErrorKind::InvalidInput, "derivative order must be 0, 1 or 2");
  }
  return acc;
}
} // namespace

cplx OdeStandardForm::P4(cplx z, int order) const { return poly_eval(a, z, order); }
cplx OdeStandardForm::P3(cplx z, int order) const { return poly_eval(b, z, order); }
cplx OdeStandardForm::V1(cplx z, int order) const { return poly_eval(v1, z, order); }

CConstraints c_constraints(const OdeStandardForm& form,
                           const std::vector<cplx>& roots) {
  const int n = form.n;
  if (static_cast<int>(roots.size()) != n)
    throw Error(ErrorKind::InvalidInput, "root count does not match n");
  const double a4 = form.a[4], a3 = form.a[3], a2 = form.a[2];
  const double b3 = form.b[3], b2 = form.b[2], b1 = form.b[1];
  cplx S1 = 0.0, S2 = 0.0, S11 = 0.0;
  for (size_t i = 0; i < roots.size(); ++i) {
    S1 += roots[i];
    S2 += roots[i] * roots[i];
    for (size_t j = i + 1; j < roots.size(); ++j) S11 += roots[i] * roots[j];
  }
  const double nn1 = double(n) * double(n - 1);
  CConstraints c;
  c.c2 = -nn1 * a4 - double(n) * b3;
  c.c1 = -(2.0 * (n - 1) * a4 + b3) * S1 - nn1 * a3 - double(n) * b2;
  c.c0 = -(2.0 * (n - 1) * a4 + b3) * S2 - 2.0 * a4 * S11 -
         (2.0 * (n - 1) * a3 + b2) * S1 - nn1 * a2 - double(n) * b1;
  return c;
}

double ode_residual(const OdeStandardForm& form, cplx E, const MonicPoly& p,
                    cplx z) {
  cplx t4 = form.P4(z) * eval_poly(p, z, 2);
  cplx t3 = form.P3(z) * eval_poly(p, z, 1);
  cplx t2 = (E - form.V1(z)) * eval_poly(p, z);
  double norm = std::max(1.0, std::abs(t4) + std::abs(t3) + std::abs(t2));
  return std::abs(t4 + t3 + t2) / norm;
}

double ConsistencyReport::max_discrepancy() const {
  return std::max({d2, d1, d0});
}

ConsistencyReport qes_consistency_check(const OdeStandardForm& form,
                                        const std::vector<cplx>& roots,
                                        cplx E) {
  CConstraints c = c_constraints(form, roots);
  ConsistencyReport r;
  r.d2 = std::abs(c.c2 - (-form.v1[2]));
  r.d1 = std::abs(c.c1 - (-form.v1[1]));
  r.d0 = std::abs(c.c0 - (E - form.v1[0]));
  return r;
}

} // namespace qes
