#pragma once
#include "qes/susy.hpp"

namespace qes {

struct CheckEntry {
  std::string name;
  double max_residual = 0.0;
  double tol = 0.0;
  bool pass = false;
  double worst_at = 0.0; // sample location of the worst residual
};

struct VerificationReport {
  std::string case_id;
  int n = 0;
  std::map<std::string, double> params;
  std::vector<CheckEntry> checks;
  std::vector<double> new_poles; // x-locations not shared with the original V
  bool pass() const;
};

std::string report_to_json(const VerificationReport& r);

// Max relative residual of rho (-psi'' - (d-1)/x psi' - l(l+d-2)/x^2 psi
// + V psi) = E psi over the grid, using central differences with step 1e-4
// and one Richardson halving. Non-finite samples (pole-adjacent) are skipped.
double fd_hamiltonian_residual(const RealFn& V, const RealFn& rho,
                               const std::optional<RadialData>& radial,
                               const RealFn& psi, double E,
                               const std::vector<double>& grid,
                               double* worst_at = nullptr);

// Scalar map that may signal a pole by returning an empty optional.
using OptFn = std::function<std::optional<double>(double)>;

struct PoleScan {
  std::vector<double> poles;     // all confirmed poles in the window
  std::vector<double> new_poles; // those not shared with the original V
};

// Scans for pole markers and |V| blowup above 1e8; a candidate is confirmed
// only when an adjacent finite sample exceeds 1e6 (removable near-zeros of
// sqrt(P4) are not poles). A confirmed pole within 1e-6 (1+|x|) of an
// original-V pole counts as shared.
PoleScan singularity_scan(const OptFn& V, double x_lo, double x_hi,
                          int resolution,
                          const std::vector<double>& original_poles);

// n = 1 only: compares engine roots, energies, phi2, V2(z) and, when the
// case provides them, V2(x), psi2(x) and their radial variants against the
// catalog closed forms. Wavefunction comparisons allow one global sign.
std::vector<CheckEntry> oracle_crosscheck(const CaseInstance& cse,
                                          const SusyPartner& partner);

// Full invariant suite: consistency, BAE residuals, supercharge identities,
// partner-state residuals, FD residuals, singularity scan, oracle crosscheck.
VerificationReport run_verification(const CaseInstance& cse,
                                    int seed_index = -1, int other_index = -1,
                                    double tol_scale = 1.0);

} // namespace qes
