#include "qes/bethe.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace qes {

namespace {

double root_scale(const std::vector<cplx>& roots) {
  double s = 1.0;
  for (cplx r : roots) s = std::max(s, std::abs(r));
  return s;
}

void check_distinct(const std::vector<cplx>& roots, ErrorKind kind) {
  double scale = root_scale(roots);
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j)
      if (std::abs(roots[i] - roots[j]) < 1e-8 * scale)
        throw Error(kind, "Bethe roots collide", static_cast<int>(j));
}

// BAE left-hand sides F_i and the Jacobian dF_i/dz_j.
void bae_system(const OdeStandardForm& form, const std::vector<cplx>& z,
                Eigen::VectorXcd& F, Eigen::MatrixXcd* J) {
  const int n = static_cast<int>(z.size());
  F.resize(n);
  if (J) J->setZero(n, n);
  double scale = root_scale(z);
  for (int i = 0; i < n; ++i) {
    cplx p4 = form.P4(z[i]);
    if (std::abs(p4) < 1e-12 * std::max(1.0, std::pow(scale, 4)))
      throw Error(ErrorKind::SingularWeight, "P4 vanishes at a Bethe root", i);
    cplx p3 = form.P3(z[i]);
    cplx acc = p3 / p4;
    cplx dii = (form.P3(z[i], 1) * p4 - p3 * form.P4(z[i], 1)) / (p4 * p4);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      cplx d = z[i] - z[j];
      acc += 2.0 / d;
      if (J) {
        dii -= 2.0 / (d * d);
        (*J)(i, j) = 2.0 / (d * d);
      }
    }
    F(i) = acc;
    if (J) (*J)(i, i) = dii;
  }
}

std::vector<cplx> companion_roots(const std::vector<cplx>& monic_coeffs) {
  const int n = static_cast<int>(monic_coeffs.size()) - 1;
  if (n == 0) return {};
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) C(i, n - 1) = -monic_coeffs[i];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
  std::vector<cplx> roots(n);
  for (int i = 0; i < n; ++i) roots[i] = es.eigenvalues()(i);
  return roots;
}

} // namespace

std::vector<std::vector<double>> algebraize(const OdeStandardForm& form) {
  const int n = form.n;
  if (n < 0) throw Error(ErrorKind::InvalidInput, "n must be non-negative");
  // rows 0..n are the invariant subspace; n+1, n+2 are overflow
  std::vector<std::vector<double>> M(n + 3, std::vector<double>(n + 1, 0.0));
  auto add = [&](int row, int col, double v) {
    if (row >= 0 && row <= n + 2) M[row][col] += v;
  };
  for (int k = 0; k <= n; ++k) {
    for (int m = 0; m <= 4; ++m)
      if (k >= 2) add(k - 2 + m, k, double(k) * double(k - 1) * form.a[m]);
    for (int m = 0; m <= 3; ++m)
      if (k >= 1) add(k - 1 + m, k, double(k) * form.b[m]);
    for (int m = 0; m <= 2; ++m) add(k + m, k, -form.v1[m]);
  }
  double scale = 1.0;
  for (int j = 0; j <= n; ++j)
    for (int k = 0; k <= n; ++k) scale = std::max(scale, std::abs(M[j][k]));
  for (int j = n + 1; j <= n + 2; ++j)
    for (int k = 0; k <= n; ++k)
      if (std::abs(M[j][k]) > 1e-10 * scale)
        throw Error(ErrorKind::NotQes,
                    "invariant subspace violated: QES constraints do not hold",
                    k);
  M.resize(n + 1);
  return M;
}

std::vector<BetheSolution> solve_spectrum(const OdeStandardForm& form,
                                          double z_lo, double z_hi) {
  const int n = form.n;
  auto Mv = algebraize(form);
  Eigen::MatrixXd M(n + 1, n + 1);
  for (int j = 0; j <= n; ++j)
    for (int k = 0; k <= n; ++k) M(j, k) = Mv[j][k];
  Eigen::EigenSolver<Eigen::MatrixXd> es(M, true);
  if (es.info() != Eigen::Success)
    throw Error(ErrorKind::DegenerateSpectrum, "eigensolver failed");

  std::vector<cplx> lambdas(n + 1);
  double lscale = 1.0;
  for (int i = 0; i <= n; ++i) {
    lambdas[i] = es.eigenvalues()(i);
    lscale = std::max(lscale, std::abs(lambdas[i]));
  }
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (std::abs(lambdas[i] - lambdas[j]) < 1e-10 * lscale)
        throw Error(ErrorKind::DegenerateSpectrum, "near-degenerate spectrum", j);

  std::vector<BetheSolution> out;
  for (int i = 0; i <= n; ++i) {
    BetheSolution s;
    s.n = n;
    s.energy = -lambdas[i];
    std::vector<cplx> c(n + 1);
    double cmax = 0.0;
    for (int j = 0; j <= n; ++j) {
      c[j] = es.eigenvectors()(j, i);
      cmax = std::max(cmax, std::abs(c[j]));
    }
    if (std::abs(c[n]) < 1e-12 * cmax)
      throw Error(ErrorKind::DegreeDrop,
                  "eigenvector yields a polynomial of lower degree", i);
    for (int j = 0; j <= n; ++j) c[j] /= c[n];

    std::vector<cplx> roots = companion_roots(c);
    MonicPoly raw;
    raw.coeffs = c;
    for (cplx& r : roots) { // one Newton polish per root
      for (int it = 0; it < 2; ++it) {
        cplx d = eval_poly(raw, r, 1);
        if (std::abs(d) > 0) r -= eval_poly(raw, r) / d;
      }
    }
    if (n >= 1) {
      check_distinct(roots, ErrorKind::Collision);
      roots = refine_bae(form, roots);
      s.bae_residual = bae_residual(form, roots);
    }
    s.roots = roots;
    s.poly = poly_from_roots(roots);

    double lo = z_lo, hi = z_hi;
    if (!(lo < hi)) { // default sample box around the roots
      lo = -1.0;
      hi = 1.0;
      for (cplx r : roots) {
        lo = std::min(lo, r.real() - 1.0);
        hi = std::max(hi, r.real() + 1.0);
      }
    }
    double rmax = 0.0;
    for (int k = 0; k < 50; ++k) {
      cplx z = lo + (hi - lo) * (k + 0.5) / 50.0;
      rmax = std::max(rmax, ode_residual(form, s.energy, s.poly, z));
    }
    s.ode_residual_max = rmax;

    s.is_real = is_real(s.energy);
    for (cplx r : roots) s.is_real = s.is_real && is_real(r);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const BetheSolution& x, const BetheSolution& y) {
    if (x.energy.real() != y.energy.real()) return x.energy.real() < y.energy.real();
    return x.energy.imag() < y.energy.imag();
  });
  return out;
}

double bae_residual(const OdeStandardForm& form, const std::vector<cplx>& roots) {
  if (roots.empty()) return 0.0;
  Eigen::VectorXcd F;
  std::vector<cplx> z = roots;
  bae_system(form, z, F, nullptr);
  double r = 0.0;
  for (int i = 0; i < F.size(); ++i) r = std::max(r, std::abs(F(i)));
  return r;
}

std::vector<cplx> refine_bae(const OdeStandardForm& form,
                             const std::vector<cplx>& roots, bool* warned) {
  if (warned) *warned = false;
  if (roots.empty()) return roots;
  const int n = static_cast<int>(roots.size());
  std::vector<cplx> z = roots;
  double best = bae_residual(form, z);
  int growths = 0;
  for (int it = 0; it < 50 && best >= 1e-12; ++it) {
    Eigen::VectorXcd F;
    Eigen::MatrixXcd J;
    bae_system(form, z, F, &J);
    Eigen::VectorXcd step = J.fullPivLu().solve(-F);
    double damp = 1.0;
    std::vector<cplx> trial(n);
    double res = best;
    for (int half = 0; half < 8; ++half, damp *= 0.5) {
      for (int i = 0; i < n; ++i) trial[i] = z[i] + damp * step(i);
      double scale = root_scale(trial);
      bool collided = false;
      for (int i = 0; i < n && !collided; ++i)
        for (int j = i + 1; j < n; ++j)
          if (std::abs(trial[i] - trial[j]) < 1e-10 * scale) {
            if (damp < 1e-2)
              throw Error(ErrorKind::Collision, "roots collided during refinement", j);
            collided = true;
            break;
          }
      if (collided) continue;
      res = bae_residual(form, trial);
      if (res < best) break;
    }
    if (res >= best) {
      if (++growths >= 5) {
        if (warned) *warned = true;
        return roots;
      }
    } else {
      growths = 0;
      best = res;
    }
    z = trial;
  }
  return z;
}

} // namespace qes
