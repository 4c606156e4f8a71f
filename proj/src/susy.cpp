#include "qes/susy.hpp"

#include <algorithm>
#include <cmath>

namespace qes {

namespace {

struct RootSums {
  cplx s1{}, s2{}, s3{};
};

RootSums root_sums(const std::vector<cplx>& roots, cplx z) {
  double scale = 1.0;
  for (cplx r : roots) scale = std::max(scale, std::abs(r));
  RootSums s;
  for (size_t i = 0; i < roots.size(); ++i) {
    cplx d = z - roots[i];
    if (std::abs(d) < 1e-12 * scale)
      throw Error(ErrorKind::Pole, "evaluation point hits a seed root",
                  static_cast<int>(i));
    cplx inv = 1.0 / d;
    s.s1 += inv;
    s.s2 += inv * inv;
    s.s3 += inv * inv * inv;
  }
  return s;
}

// Value..third derivative of a probe at z.
struct Jet3 {
  cplx f{}, f1{}, f2{}, f3{};
};

Jet3 monomial_jet(int k, cplx z) {
  auto pw = [&](int e) { return e < 0 ? cplx(0.0) : std::pow(z, e); };
  Jet3 j;
  j.f = pw(k);
  j.f1 = double(k) * pw(k - 1);
  j.f2 = double(k) * double(k - 1) * pw(k - 2);
  j.f3 = double(k) * double(k - 1) * double(k - 2) * pw(k - 3);
  return j;
}

Jet3 poly_jet(const MonicPoly& p, cplx z) {
  Jet3 j;
  j.f = eval_poly(p, z);
  j.f1 = eval_poly(p, z, 1);
  // third derivative by Horner on the twice-differentiated coefficients
  j.f2 = eval_poly(p, z, 2);
  cplx acc = 0.0;
  for (int k = p.degree(); k >= 3; --k)
    acc = acc * z + double(k) * double(k - 1) * double(k - 2) * p.coeffs[k];
  j.f3 = acc;
  return j;
}

// Jets of g = sqrt(P4) (f' - s1 f), the bare A-image of a probe.
struct Jet2 {
  cplx g{}, g1{}, g2{};
};

Jet2 a_image_jet(const OdeStandardForm& form, const std::vector<cplx>& roots,
                 const Jet3& j, cplx z) {
  RootSums s = root_sums(roots, z);
  cplx h = j.f1 - s.s1 * j.f;
  cplx h1 = j.f2 + s.s2 * j.f - s.s1 * j.f1;
  cplx h2 = j.f3 - 2.0 * s.s3 * j.f + 2.0 * s.s2 * j.f1 - s.s1 * j.f2;
  cplx p4 = form.P4(z), p4p = form.P4(z, 1), p4pp = form.P4(z, 2);
  cplx r = std::sqrt(p4);
  if (std::abs(r) == 0.0)
    throw Error(ErrorKind::SingularWeight, "P4 vanishes at evaluation point");
  Jet2 g;
  g.g = r * h;
  g.g1 = p4p / (2.0 * r) * h + r * h1;
  g.g2 = (p4pp / (2.0 * r) - p4p * p4p / (4.0 * p4 * r)) * h +
         p4p / r * h1 + r * h2;
  return g;
}

double rel(cplx lhs, cplx rhs) {
  return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs) + std::abs(rhs));
}

} // namespace

cplx partner_poly(const BetheSolution& seed, const BetheSolution& other,
                  const OdeStandardForm& form, cplx z) {
  root_sums(seed.roots, z); // pole guard
  cplx w = wronskian2(seed.poly, other.poly, z);
  return std::sqrt(form.P4(z)) * w / eval_poly(seed.poly, z);
}

cplx partner_ode_potential(const BetheSolution& seed,
                           const OdeStandardForm& form, cplx z) {
  cplx p4 = form.P4(z);
  if (std::abs(p4) == 0.0)
    throw Error(ErrorKind::SingularWeight, "P4 vanishes at evaluation point");
  RootSums s = root_sums(seed.roots, z);
  cplx p4p = form.P4(z, 1);
  return form.V1(z) +
         0.25 * (2.0 * (form.P4(z, 2) - 2.0 * form.P3(z, 1)) +
                 (2.0 * form.P3(z) - p4p) * p4p / p4 - 4.0 * p4p * s.s1 +
                 8.0 * p4 * s.s2);
}

cplx apply_A_bare(const BetheSolution& seed, const OdeStandardForm& form,
                  const DiffFn& f, cplx z) {
  RootSums s = root_sums(seed.roots, z);
  Jet1 j = f(z);
  return std::sqrt(form.P4(z)) * (j.fp - s.s1 * j.f);
}

cplx apply_B_bare(const BetheSolution& seed, const BetheSolution& other,
                  const OdeStandardForm& form, const DiffFn& f, cplx z) {
  RootSums s = root_sums(seed.roots, z);
  cplx p4 = form.P4(z);
  if (std::abs(p4) == 0.0)
    throw Error(ErrorKind::SingularWeight, "P4 vanishes at evaluation point");
  cplx phs = eval_poly(seed.poly, z), pho = eval_poly(other.poly, z);
  cplx w = wronskian2(seed.poly, other.poly, z);
  double wscale = std::max(1.0, std::abs(phs) * std::abs(pho));
  if (std::abs(w) < 1e-12 * wscale)
    throw Error(ErrorKind::Node, "Wronskian node at evaluation point");
  cplx wp = phs * eval_poly(other.poly, z, 2) -
            eval_poly(seed.poly, z, 2) * pho; // W' = phi_s phi_o'' - phi_s'' phi_o
  cplx gap = seed.energy - other.energy;
  Jet1 j = f(z);
  return std::sqrt(p4) *
         (j.fp + (gap * phs * pho / (p4 * w) - 0.5 * form.P4(z, 1) / p4 -
                  wp / w + s.s1) *
                     j.f);
}

SusyPartner make_partner(const CaseInstance& cse,
                         const std::vector<BetheSolution>& spectrum,
                         int seed_index, int other_index) {
  if (spectrum.size() < 2)
    throw Error(ErrorKind::InvalidInput,
                "need at least two states to build a partner");
  int ns = static_cast<int>(spectrum.size());
  if (seed_index < 0) seed_index = 0; // lowest-energy default
  if (other_index < 0) other_index = seed_index == 0 ? 1 : 0;
  if (seed_index >= ns || other_index >= ns)
    throw Error(ErrorKind::InvalidInput, "state index out of range");
  if (seed_index == other_index)
    throw Error(ErrorKind::InvalidInput, "seed and other must differ");
  SusyPartner p;
  p.cse = cse;
  p.seed = spectrum[seed_index];
  p.other = spectrum[other_index];
  p.gap = p.seed.energy - p.other.energy;
  if (std::abs(p.gap) == 0.0)
    throw Error(ErrorKind::DegenerateSpectrum, "zero spectral gap");
  p.seed_pole_zs = p.seed.roots;
  return p;
}

cplx SusyPartner::phi2(cplx z) const {
  return partner_poly(seed, other, cse.form, z);
}

cplx SusyPartner::V2_z(cplx z) const {
  return partner_ode_potential(seed, cse.form, z);
}

std::optional<double> SusyPartner::V2_x(double x) const {
  if (cse.algebraic_only)
    throw Error(ErrorKind::Domain, "algebraic-only case has no x-space potential");
  double z = cse.z_of_x(x);
  double zp = cse.dzdx(x);
  RootSums s;
  try {
    s = root_sums(seed.roots, z);
  } catch (const Error& e) {
    if (e.kind == ErrorKind::Pole) return std::nullopt;
    throw;
  }
  double up = (s.s1.real() - cse.gauge_K(z)) * zp; // (ln psi_seed)'(x)
  double lam = seed.energy.real();
  double rho = cse.rho_x(x);
  double Lp = 0.0, Lpp = 0.0; // (ln rho)' and (ln rho)''
  if (cse.rho_power != 0) {
    double k = cse.rho_power;
    double zpp = cse.d2zdx2(x);
    Lp = k * zp / z;
    Lpp = k * (zpp / z - zp * zp / (z * z));
  }
  double v = cse.V_x(x);
  return -v + 2.0 * lam / rho - 0.25 * Lp * Lp - Lp * up + 2.0 * up * up +
         (Lpp + Lp * Lp) / 2.0;
}

std::optional<double> SusyPartner::VS2_x(double x) const {
  if (!cse.radial)
    throw Error(ErrorKind::Domain, "case has no radial data");
  auto v = V2_x(x);
  if (!v) return std::nullopt;
  return *v - cse.radial_N() / (4.0 * x * x);
}

SusyPartner::Wavefns SusyPartner::wavefunctions(double x) const {
  if (cse.algebraic_only)
    throw Error(ErrorKind::Domain, "algebraic-only case has no wavefunctions");
  double z = cse.z_of_x(x);
  double G = cse.gauge_G(z);
  double e = std::abs(G) > 700.0 ? 0.0 : std::exp(-G);
  Wavefns w;
  w.psi_seed = eval_poly(seed.poly, z).real() * e;
  w.psi_other = eval_poly(other.poly, z).real() * e;
  try {
    double sgn = cse.dzdx(x) < 0 ? -1.0 : 1.0;
    w.psi2 = sgn * phi2(z).real() * e;
  } catch (const Error& err) {
    if (err.kind != ErrorKind::Pole) throw;
    w.psi2 = std::nullopt;
  }
  return w;
}

SusyPartner::Wavefns SusyPartner::wavefunctions_radial(double x) const {
  if (!cse.radial)
    throw Error(ErrorKind::Domain, "case has no radial data");
  if (x <= 0) throw Error(ErrorKind::Domain, "r must be positive");
  Wavefns w = wavefunctions(x);
  double h = std::pow(x, -(cse.radial->d_dim - 1) / 2.0);
  w.psi_seed *= h;
  w.psi_other *= h;
  if (w.psi2) *w.psi2 *= h;
  return w;
}

namespace {

// Sample points in [lo, hi] offset from endpoints; callers skip points where
// the evaluators raise Pole/Node/SingularWeight.
std::vector<double> sample_grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * (i + 0.5) / n;
  return g;
}

bool skippable(const Error& e) {
  return e.kind == ErrorKind::Pole || e.kind == ErrorKind::Node ||
         e.kind == ErrorKind::SingularWeight;
}

} // namespace

SusyIdentityReport susy_identity_suite(const SusyPartner& p, double z_lo,
                                       double z_hi, int samples) {
  const OdeStandardForm& form = p.cse.form;
  SusyIdentityReport r{};
  DiffFn seed_fn = [&](cplx z) {
    return Jet1{eval_poly(p.seed.poly, z), eval_poly(p.seed.poly, z, 1)};
  };
  DiffFn other_fn = [&](cplx z) {
    return Jet1{eval_poly(p.other.poly, z), eval_poly(p.other.poly, z, 1)};
  };
  for (double zr : sample_grid(z_lo, z_hi, std::max(samples, 50))) {
    cplx z = zr;
    try {
      cplx a_seed = apply_A_bare(p.seed, form, seed_fn, z);
      cplx a_other = apply_A_bare(p.seed, form, other_fn, z);
      cplx ph2 = p.phi2(z);
      r.annihilation = std::max(
          r.annihilation,
          std::abs(a_seed) /
              std::max(1.0, std::abs(std::sqrt(form.P4(z)) *
                                     eval_poly(p.seed.poly, z, 1))));
      r.mapping = std::max(r.mapping, rel(a_other, ph2));

      DiffFn phi2_fn = [&](cplx zz) {
        Jet3 j = poly_jet(p.other.poly, zz);
        Jet2 g = a_image_jet(form, p.seed.roots, j, zz);
        return Jet1{g.g, g.g1};
      };
      cplx b_phi2 = apply_B_bare(p.seed, p.other, form, phi2_fn, z);
      r.reverse_mapping =
          std::max(r.reverse_mapping,
                   rel(b_phi2, p.gap * eval_poly(p.other.poly, z)));
    } catch (const Error& e) {
      if (!skippable(e)) throw;
    }
  }

  cplx lam = p.seed.energy;
  for (double zr : sample_grid(z_lo, z_hi, samples)) {
    cplx z = zr;
    for (int k = 0; k <= 3; ++k) {
      try {
        Jet3 j = monomial_jet(k, z);
        // factorization: B(A f) vs (T1 + Lambda) f
        DiffFn af = [&](cplx zz) {
          Jet2 g = a_image_jet(form, p.seed.roots, monomial_jet(k, zz), zz);
          return Jet1{g.g, g.g1};
        };
        cplx ba = apply_B_bare(p.seed, p.other, form, af, z);
        // T1 is the gauged algebraic operator P4 d^2 + P3 d - V1 (T1 phi =
        // -E phi), so B A = T1 + Lambda annihilates the seed.
        cplx t1f = form.P4(z) * j.f2 + form.P3(z) * j.f1 +
                   (lam - form.V1(z)) * j.f;
        r.factorization = std::max(r.factorization, rel(ba, t1f));

        // intertwining: A((T1 + Lambda) f) vs (T2 + Lambda)(A f)
        DiffFn t1_jet = [&](cplx zz) {
          Jet3 q = monomial_jet(k, zz);
          cplx w = form.P4(zz) * q.f2 + form.P3(zz) * q.f1 +
                   (lam - form.V1(zz)) * q.f;
          cplx w1 = form.P4(zz, 1) * q.f2 + form.P4(zz) * q.f3 +
                    form.P3(zz, 1) * q.f1 + form.P3(zz) * q.f2 -
                    form.V1(zz, 1) * q.f + (lam - form.V1(zz)) * q.f1;
          return Jet1{w, w1};
        };
        cplx lhs = apply_A_bare(p.seed, form, t1_jet, z);
        Jet2 g = a_image_jet(form, p.seed.roots, j, z);
        cplx rhs = form.P4(z) * g.g2 + form.P3(z) * g.g1 +
                   (lam - p.V2_z(z)) * g.g;
        r.intertwining = std::max(r.intertwining, rel(lhs, rhs));
      } catch (const Error& e) {
        if (!skippable(e)) throw;
      }
    }
  }
  r.partner_residual = partner_state_residual(p, p.other, z_lo, z_hi, samples);
  return r;
}

double partner_state_residual(const SusyPartner& p, const BetheSolution& state,
                              double z_lo, double z_hi, int samples) {
  const OdeStandardForm& form = p.cse.form;
  double worst = 0.0;
  for (double zr : sample_grid(z_lo, z_hi, samples)) {
    cplx z = zr;
    try {
      Jet3 j = poly_jet(state.poly, z);
      Jet2 g = a_image_jet(form, p.seed.roots, j, z);
      cplx t4 = form.P4(z) * g.g2;
      cplx t3 = form.P3(z) * g.g1;
      cplx t2 = (state.energy - p.V2_z(z)) * g.g;
      double norm =
          std::max(1.0, std::abs(t4) + std::abs(t3) + std::abs(t2));
      worst = std::max(worst, std::abs(t4 + t3 + t2) / norm);
    } catch (const Error& e) {
      if (!skippable(e)) throw;
    }
  }
  return worst;
}

} // namespace qes
