#include "qes/poly.hpp"

#include <cmath>

namespace qes {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::SingularWeight: return "singular-weight";
    case ErrorKind::DegenerateSpectrum: return "degenerate-spectrum";
    case ErrorKind::Collision: return "collision";
    case ErrorKind::NotQes: return "not-qes";
    case ErrorKind::DegreeDrop: return "degree-drop";
    case ErrorKind::Branch: return "branch";
    case ErrorKind::Node: return "node";
    case ErrorKind::Domain: return "domain";
  }
  return "unknown";
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::DegenerateSpectrum:
    case ErrorKind::Collision:
      return 3;
    default:
      return 2;
  }
}

MonicPoly poly_from_roots(const std::vector<cplx>& roots) {
  for (size_t i = 0; i < roots.size(); ++i)
    if (!std::isfinite(roots[i].real()) || !std::isfinite(roots[i].imag()))
      throw Error(ErrorKind::InvalidInput, "non-finite root", static_cast<int>(i));
  std::vector<cplx> c{1.0};
  for (cplx r : roots) {
    c.insert(c.begin(), 0.0);
    for (size_t k = 0; k + 1 < c.size(); ++k) c[k] -= r * c[k + 1];
  }
  MonicPoly p;
  p.coeffs = std::move(c);
  p.roots = roots;
  return p;
}

cplx eval_poly(const MonicPoly& p, cplx z, int order) {
  if (order < 0 || order > 2)
    throw Error(ErrorKind::InvalidInput, "derivative order must be 0, 1 or 2");
  const auto& c = p.coeffs;
  const int n = p.degree();
  cplx acc = 0.0;
  if (order == 0) {
    for (int k = n; k >= 0; --k) acc = acc * z + c[k];
  } else if (order == 1) {
    for (int k = n; k >= 1; --k) acc = acc * z + double(k) * c[k];
  } else {
    for (int k = n; k >= 2; --k) acc = acc * z + double(k) * double(k - 1) * c[k];
  }
  return acc;
}

cplx wronskian2(const MonicPoly& p, const MonicPoly& q, cplx z) {
  return eval_poly(p, z) * eval_poly(q, z, 1) - eval_poly(p, z, 1) * eval_poly(q, z);
}

LogDerivSums log_deriv_sums(const std::vector<cplx>& roots, cplx z) {
  double scale = 1.0;
  for (cplx r : roots) scale = std::max(scale, std::abs(r));
  LogDerivSums s{0.0, 0.0};
  for (size_t j = 0; j < roots.size(); ++j) {
    cplx d = z - roots[j];
    if (std::abs(d) < 1e-12 * scale)
      throw Error(ErrorKind::Pole, "evaluation point collides with root",
                  static_cast<int>(j));
    s.s1 += 1.0 / d;
    s.s2 += 1.0 / (d * d);
  }
  return s;
}

} // namespace qes
