#pragma once
#include "qes/bethe.hpp"
#include "qes/catalog.hpp"

namespace qes {

// Differentiable probe: value and first derivative at z.
struct Jet1 {
  cplx f, fp;
};
using DiffFn = std::function<Jet1(cplx)>;

// First-order state-deleting SUSY partner built from a seed eigenstate.
// The bare supercharge convention drops the spectral prefactors sqrt(gap),
// so A phi_other = phi2 and B phi2 = gap * phi_other hold exactly.
struct SusyPartner {
  CaseInstance cse;
  BetheSolution seed, other;
  cplx gap{};                     // seed.energy - other.energy
  std::vector<cplx> seed_pole_zs; // zeros of the seed polynomial

  cplx phi2(cplx z) const;  // sqrt(P4) W(phi_seed, phi_other) / phi_seed
  cplx V2_z(cplx z) const;  // partner ODE potential

  // x-space members; absent (Domain error) for the algebraic-only cases.
  // Seed-node singularities are reported as empty optionals, not garbage.
  std::optional<double> V2_x(double x) const;
  std::optional<double> VS2_x(double x) const; // radial cases only

  struct Wavefns {
    double psi_seed, psi_other;
    std::optional<double> psi2;
  };
  Wavefns wavefunctions(double x) const;
  Wavefns wavefunctions_radial(double x) const; // psi_S = r^{-(d-1)/2} psi
};

// Seed defaults to the lowest-energy state, other to the next one above it.
SusyPartner make_partner(const CaseInstance& cse,
                         const std::vector<BetheSolution>& spectrum,
                         int seed_index = -1, int other_index = -1);

cplx partner_poly(const BetheSolution& seed, const BetheSolution& other,
                  const OdeStandardForm& form, cplx z);

cplx partner_ode_potential(const BetheSolution& seed,
                           const OdeStandardForm& form, cplx z);

// sqrt(P4) (f' - s1_seed f)
cplx apply_A_bare(const BetheSolution& seed, const OdeStandardForm& form,
                  const DiffFn& f, cplx z);

// sqrt(P4) [f' + gap phi_s phi_o/(P4 W) f - (ln P4)'/2 f - (ln W)' f
//           + (ln phi_s)' f]
cplx apply_B_bare(const BetheSolution& seed, const BetheSolution& other,
                  const OdeStandardForm& form, const DiffFn& f, cplx z);

// Operator identity residuals, sampled over [z_lo, z_hi] (points that hit a
// root or Wronskian node are skipped). All residuals are relative.
struct SusyIdentityReport {
  double annihilation;    // |A phi_seed|
  double mapping;         // |A phi_other - phi2|
  double reverse_mapping; // |B phi2 - gap phi_other|
  double factorization;   // |B(A f) - (T1 + L)f| on monomial probes
  double intertwining;    // |A((T1 + L)f) - (T2 + L)(A f)|
  double partner_residual; // |P4 g'' + P3 g' + (E_other - V2) g|
};
SusyIdentityReport susy_identity_suite(const SusyPartner& p, double z_lo,
                                       double z_hi, int samples = 20);

// Partner-ODE residual of the image of one non-seed state (general n).
double partner_state_residual(const SusyPartner& p, const BetheSolution& state,
                              double z_lo, double z_hi, int samples = 20);

} // namespace qes
