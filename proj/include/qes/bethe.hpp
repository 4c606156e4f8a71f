#pragma once
#include "qes/odeform.hpp"

namespace qes {

struct BetheSolution {
  int n = 0;
  cplx energy{};
  MonicPoly poly;
  std::vector<cplx> roots;
  double bae_residual = 0.0;
  double ode_residual_max = 0.0;
  bool is_real = false;
};

// Matrix of L = P4 d^2 + P3 d - V1 on the basis {1, z, ..., z^n}:
// L(z^k) = sum_j M[j][k] z^j. Eigenpairs (lambda, v) give E = -lambda and the
// polynomial coefficients v. Throws NotQes if the invariant subspace is
// violated (overflow coefficients above 1e-10 relative).
std::vector<std::vector<double>> algebraize(const OdeStandardForm& form);

// All n+1 polynomial eigenstates: dense eigensolve of the algebraized matrix,
// monic normalization, companion-matrix root extraction, Newton polish and
// BAE refinement. Sorted by Re(energy) ascending. The optional z-interval is
// used for the 50-point ODE-residual sample (defaults to a root bounding box).
std::vector<BetheSolution> solve_spectrum(const OdeStandardForm& form,
                                          double z_lo = 0.0, double z_hi = 0.0);

// max_i |sum_{j != i} 2/(z_i - z_j) + P3(z_i)/P4(z_i)|.
double bae_residual(const OdeStandardForm& form, const std::vector<cplx>& roots);

// Damped Newton iteration on the BAE system; stops at residual < 1e-12 or 50
// iterations. Five consecutive residual growths return the input with the
// warning flag set. Root collisions (separation < 1e-10) raise Collision.
std::vector<cplx> refine_bae(const OdeStandardForm& form,
                             const std::vector<cplx>& roots,
                             bool* warned = nullptr);

} // namespace qes
