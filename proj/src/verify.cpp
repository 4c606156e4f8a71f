#include "qes/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

namespace qes {

namespace {

constexpr double kFdStep = 1e-4;

bool finite(double v) { return std::isfinite(v); }

// Richardson-extrapolated central differences.
bool fd_derivs(const RealFn& f, double x, double& d1, double& d2) {
  const double h = kFdStep;
  double fp1 = f(x + h), fm1 = f(x - h), f0 = f(x);
  double fp2 = f(x + h / 2), fm2 = f(x - h / 2);
  if (!finite(fp1) || !finite(fm1) || !finite(f0) || !finite(fp2) ||
      !finite(fm2))
    return false;
  double d1h = (fp1 - fm1) / (2 * h);
  double d1h2 = (fp2 - fm2) / h;
  double d2h = (fp1 - 2 * f0 + fm1) / (h * h);
  double d2h2 = (fp2 - 2 * f0 + fm2) / (h * h / 4);
  d1 = (4 * d1h2 - d1h) / 3;
  d2 = (4 * d2h2 - d2h) / 3;
  return true;
}

CheckEntry entry(const std::string& name, double max_residual, double tol,
                 double worst_at = 0.0) {
  CheckEntry e;
  e.name = name;
  e.max_residual = max_residual;
  e.tol = tol;
  e.pass = max_residual < tol;
  e.worst_at = worst_at;
  return e;
}

std::vector<double> midpoint_grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * (i + 0.5) / n;
  return g;
}

} // namespace

bool VerificationReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return new_poles.empty();
}

std::string report_to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["case"] = r.case_id;
  j["n"] = r.n;
  j["params"] = r.params;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : r.checks)
    j["checks"].push_back({{"name", c.name},
                           {"max_residual", c.max_residual},
                           {"tol", c.tol},
                           {"pass", c.pass},
                           {"worst_at", c.worst_at}});
  j["new_poles"] = r.new_poles;
  return j.dump(2);
}

double fd_hamiltonian_residual(const RealFn& V, const RealFn& rho,
                               const std::optional<RadialData>& radial,
                               const RealFn& psi, double E,
                               const std::vector<double>& grid,
                               double* worst_at) {
  std::vector<double> num, den, where;
  double psimax = 0.0, denmax = 0.0;
  for (double x : grid) {
    double d1, d2;
    if (!fd_derivs(psi, x, d1, d2)) continue;
    double p = psi(x), v = V(x), w = rho(x);
    if (!finite(p) || !finite(v) || !finite(w)) continue;
    psimax = std::max(psimax, std::abs(p));
    double H = -d2 + v * p;
    if (radial) {
      double l = radial->l, d = radial->d_dim;
      H += -(d - 1) / x * d1 - l * (l + d - 2) / (x * x) * p;
    }
    double r = std::abs(w * H - E * p);
    double q = std::abs(E * p) + std::abs(w * d2);
    denmax = std::max(denmax, q);
    num.push_back(r);
    den.push_back(q);
    where.push_back(x);
  }
  if (num.empty() || psimax < 1e-300)
    throw Error(ErrorKind::InvalidInput,
                "degenerate input: wavefunction vanishes on the grid");
  // Denominators are floored at 0.1% of the grid-max Hamiltonian scale so
  // that FD roundoff next to wavefunction nodes does not dominate.
  double eps = std::max(1e-12, 1e-3 * denmax);
  double worst = 0.0, wx = where.front();
  for (size_t i = 0; i < num.size(); ++i) {
    double r = num[i] / (den[i] + eps);
    if (r > worst) {
      worst = r;
      wx = where[i];
    }
  }
  if (worst_at) *worst_at = wx;
  return worst;
}

PoleScan singularity_scan(const OptFn& V, double x_lo, double x_hi,
                          int resolution,
                          const std::vector<double>& original_poles) {
  if (resolution < 100)
    throw Error(ErrorKind::InvalidInput, "scan resolution must be >= 100");
  std::vector<std::optional<double>> vals(resolution + 1);
  std::vector<double> xs(resolution + 1);
  for (int i = 0; i <= resolution; ++i) {
    xs[i] = x_lo + (x_hi - x_lo) * i / resolution;
    vals[i] = V(xs[i]);
    if (vals[i] && !finite(*vals[i])) vals[i] = std::nullopt;
  }
  auto candidate = [&](int i) {
    return !vals[i] || std::abs(*vals[i]) > 1e8;
  };
  auto confirmed = [&](int i) {
    for (int j : {i - 1, i + 1})
      if (j >= 0 && j <= resolution && vals[j] &&
          std::abs(*vals[j]) > 1e6)
        return true;
    return false;
  };
  PoleScan scan;
  for (int i = 0; i <= resolution; ++i) {
    if (!candidate(i) || !confirmed(i)) continue;
    if (!scan.poles.empty() &&
        xs[i] - scan.poles.back() < 2.1 * (x_hi - x_lo) / resolution)
      continue; // same pole, consecutive samples
    scan.poles.push_back(xs[i]);
  }
  for (double p : scan.poles) {
    bool shared = false;
    for (double q : original_poles)
      shared = shared || std::abs(p - q) < 1e-6 * (1 + std::abs(p));
    if (!shared) scan.new_poles.push_back(p);
  }
  return scan;
}

std::vector<CheckEntry> oracle_crosscheck(const CaseInstance& cse,
                                          const SusyPartner& partner) {
  std::vector<CheckEntry> out;
  if (cse.n != 1 || !cse.oracle) return out;
  const OracleN1& o = *cse.oracle;

  auto relerr = [](double got, double want) {
    return std::abs(got - want) / (1 + std::abs(want));
  };
  double rs = relerr(partner.seed.roots[0].real(), o.root_seed);
  double ro = relerr(partner.other.roots[0].real(), o.root_other);
  out.push_back(entry("oracle_roots", std::max(rs, ro), 1e-10));
  double es = relerr(partner.seed.energy.real(), o.energy_seed);
  double eo = relerr(partner.other.energy.real(), o.energy_other);
  out.push_back(entry("oracle_energies", std::max(es, eo), 1e-10));

  // maps on a grid, skipping pole-adjacent samples
  auto sweep = [&](const std::string& name,
                   const std::function<std::optional<double>(double)>& got,
                   const RealFn& want, double lo, double hi, double tol,
                   bool sign_free = false) {
    auto grid = midpoint_grid(lo, hi, 50);
    double gsign = 1.0;
    if (sign_free) { // one global sign, fixed at the largest oracle value
      double best = -1.0;
      for (double t : grid) {
        double w = want(t);
        auto g = got(t);
        if (!g || !finite(w) || !finite(*g)) continue;
        if (std::abs(w) > best && std::abs(*g) > 0) {
          best = std::abs(w);
          gsign = (w < 0) == (*g < 0) ? 1.0 : -1.0;
        }
      }
    }
    double worst = 0.0, wx = lo;
    for (double t : grid) {
      double w = want(t);
      auto g = got(t);
      if (!g || !finite(w) || !finite(*g)) continue;
      double r = std::abs(gsign * *g - w) / (1 + std::abs(w));
      if (r > worst) {
        worst = r;
        wx = t;
      }
    }
    out.push_back(entry(name, worst, tol, wx));
  };

  auto guard = [&](const std::function<double(double)>& f) {
    return [f](double t) -> std::optional<double> {
      try {
        return f(t);
      } catch (const Error& e) {
        if (e.kind == ErrorKind::Pole || e.kind == ErrorKind::Node ||
            e.kind == ErrorKind::SingularWeight)
          return std::nullopt;
        throw;
      }
    };
  };

  if (o.phi2)
    sweep("oracle_phi2",
          guard([&](double z) { return partner.phi2(z).real(); }), o.phi2,
          cse.z_lo, cse.z_hi, 1e-9);
  if (o.V2_z)
    sweep("oracle_V2_z",
          guard([&](double z) { return partner.V2_z(z).real(); }), o.V2_z,
          cse.z_lo, cse.z_hi, 1e-9);
  if (!cse.algebraic_only) {
    if (o.V2_x)
      sweep("oracle_V2_x",
            [&](double x) { return partner.V2_x(x); }, o.V2_x, cse.x_lo,
            cse.x_hi, 1e-9);
    if (o.psi2_x)
      sweep("oracle_psi2_x",
            [&](double x) { return partner.wavefunctions(x).psi2; }, o.psi2_x,
            cse.x_lo, cse.x_hi, 1e-9, true);
    if (cse.radial && o.VS2_x)
      sweep("oracle_VS2_x",
            [&](double x) { return partner.VS2_x(x); }, o.VS2_x, cse.x_lo,
            cse.x_hi, 1e-9);
    if (cse.radial && o.psiS2_x)
      sweep("oracle_psiS2_x",
            [&](double x) { return partner.wavefunctions_radial(x).psi2; },
            o.psiS2_x, cse.x_lo, cse.x_hi, 1e-9, true);
  }
  return out;
}

VerificationReport run_verification(const CaseInstance& cse, int seed_index,
                                    int other_index, double tol_scale) {
  const double s = std::max(1.0, tol_scale);
  VerificationReport r;
  r.case_id = cse.id;
  r.n = cse.n;
  r.params = cse.params;

  auto spectrum = solve_spectrum(cse.form, cse.z_lo, cse.z_hi);
  double cons = 0.0, bae = 0.0;
  for (const auto& st : spectrum) {
    cons = std::max(cons, qes_consistency_check(cse.form, st.roots, st.energy)
                              .max_discrepancy());
    bae = std::max(bae, st.bae_residual);
  }
  r.checks.push_back(entry("qes_consistency", cons, 1e-8 * s));
  r.checks.push_back(entry("bae_residual", bae, 1e-8 * s));

  SusyPartner partner = make_partner(cse, spectrum, seed_index, other_index);
  SusyIdentityReport id = susy_identity_suite(partner, cse.z_lo, cse.z_hi);
  r.checks.push_back(entry("annihilation", id.annihilation, 1e-11 * s));
  r.checks.push_back(entry("mapping", id.mapping, 1e-11 * s));
  r.checks.push_back(entry("reverse_mapping", id.reverse_mapping, 1e-8 * s));
  r.checks.push_back(entry("factorization", id.factorization, 1e-8 * s));
  r.checks.push_back(entry("intertwining", id.intertwining, 1e-7 * s));
  r.checks.push_back(
      entry("partner_ode_residual", id.partner_residual, 1e-8 * s));

  double states = 0.0;
  for (const auto& st : spectrum) {
    if (std::abs(st.energy - partner.seed.energy) == 0.0) continue;
    states = std::max(
        states, partner_state_residual(partner, st, cse.z_lo, cse.z_hi));
  }
  r.checks.push_back(entry("partner_states", states, 1e-7 * s));

  if (!cse.algebraic_only) {
    auto grid = midpoint_grid(cse.x_lo, cse.x_hi, 200);
    RealFn rho = [&](double x) { return cse.rho_x(x); };
    auto nanguard = [](std::optional<double> v) {
      return v ? *v : std::numeric_limits<double>::quiet_NaN();
    };
    double at = 0.0;
    double fd_seed = fd_hamiltonian_residual(
        cse.V_x, rho, std::nullopt,
        [&](double x) { return partner.wavefunctions(x).psi_seed; },
        partner.seed.energy.real(), grid, &at);
    r.checks.push_back(entry("fd_seed", fd_seed, 1e-4 * s, at));
    double fd_other = fd_hamiltonian_residual(
        cse.V_x, rho, std::nullopt,
        [&](double x) { return partner.wavefunctions(x).psi_other; },
        partner.other.energy.real(), grid, &at);
    r.checks.push_back(entry("fd_other", fd_other, 1e-4 * s, at));
    double fd_partner = fd_hamiltonian_residual(
        [&](double x) { return nanguard(partner.V2_x(x)); }, rho, std::nullopt,
        [&](double x) { return nanguard(partner.wavefunctions(x).psi2); },
        partner.other.energy.real(), grid, &at);
    r.checks.push_back(entry("fd_partner", fd_partner, 1e-4 * s, at));

    if (cse.radial) {
      double fd_rs = fd_hamiltonian_residual(
          cse.VS_x, rho, cse.radial,
          [&](double x) { return partner.wavefunctions_radial(x).psi_seed; },
          partner.seed.energy.real(), grid, &at);
      r.checks.push_back(entry("fd_radial_seed", fd_rs, 1e-4 * s, at));
      double fd_rp = fd_hamiltonian_residual(
          [&](double x) { return nanguard(partner.VS2_x(x)); }, rho,
          cse.radial,
          [&](double x) {
            return nanguard(partner.wavefunctions_radial(x).psi2);
          },
          partner.other.energy.real(), grid, &at);
      r.checks.push_back(entry("fd_radial_partner", fd_rp, 1e-4 * s, at));
    }

    PoleScan scan = singularity_scan(
        [&](double x) { return partner.V2_x(x); }, cse.x_lo, cse.x_hi, 400,
        /*original_poles=*/{});
    r.new_poles = scan.new_poles;
    r.checks.push_back(entry("no_new_singularities",
                             static_cast<double>(scan.new_poles.size()), 0.5));
  }

  for (auto& e : oracle_crosscheck(cse, partner)) {
    e.tol *= s;
    e.pass = e.max_residual < e.tol;
    r.checks.push_back(e);
  }
  return r;
}

} // namespace qes
