#pragma once
#include <complex>
#include <optional>
#include <vector>

#include "qes/errors.hpp"

namespace qes {

using cplx = std::complex<double>;

// Magnitude below which an imaginary part is considered numerical noise.
inline constexpr double kRealTol = 1e-9;

inline bool is_real(cplx z, double tol = kRealTol) {
  return std::abs(z.imag()) <= tol;
}

// Monic polynomial with ascending coefficients; coeffs.back() == 1.
struct MonicPoly {
  std::vector<cplx> coeffs;                     // length degree+1, ascending
  std::optional<std::vector<cplx>> roots;       // cached when known

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Expand prod (z - z_i); caches the roots verbatim. Empty list gives the
// constant polynomial 1 (the n = 0 convention).
MonicPoly poly_from_roots(const std::vector<cplx>& roots);

// Horner evaluation of p, p' or p'' at z.
cplx eval_poly(const MonicPoly& p, cplx z, int order = 0);

// p(z) q'(z) - p'(z) q(z).
cplx wronskian2(const MonicPoly& p, const MonicPoly& q, cplx z);

struct LogDerivSums {
  cplx s1; // sum 1/(z - z_j)   = (ln phi)'
  cplx s2; // sum 1/(z - z_j)^2 = -(ln phi)''
};

// Root sums at z; throws a Pole error (with the root index) if z falls within
// 1e-12 of a root, relative to the root-scale.
LogDerivSums log_deriv_sums(const std::vector<cplx>& roots, cplx z);

} // namespace qes
