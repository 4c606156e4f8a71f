#pragma once
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "qes/odeform.hpp"

namespace qes {

using RealFn = std::function<double(double)>;

struct RadialData {
  double d_dim; // spatial dimension parameter d
  double l;     // angular momentum parameter
};

// Closed-form n = 1 reference data used purely as a cross-check oracle
// against the general engine. Index 0 is the seed (lower-energy) state.
struct OracleN1 {
  double root_seed = 0, root_other = 0;
  double energy_seed = 0, energy_other = 0;
  RealFn phi2;    // partner solution, z-space
  RealFn V2_z;    // partner ODE potential, z-space
  RealFn V2_x;    // partner Schrodinger potential (1-D form)
  RealFn psi2_x;  // partner wavefunction, defined up to one global sign
  RealFn VS2_x;   // radial partner potential (radial cases only)
  RealFn psiS2_x; // radial partner wavefunction (radial cases only)
};

struct CaseInstance {
  std::string id, name, potential_tex, domain_text;
  std::vector<std::string> param_names;
  std::map<std::string, double> params;
  int n = 0;
  OdeStandardForm form;
  bool algebraic_only = false; // Lame cases: no x-space members

  RealFn z_of_x, x_of_z, dzdx, d2zdx2;
  double rho_coeff = 1.0; // weight rho(z) = rho_coeff * z^rho_power
  int rho_power = 0;
  RealFn V_x;          // physical 1-D potential (radial: V_S + N/(4 r^2))
  RealFn VS_x;         // radial Schrodinger potential (radial cases only)
  RealFn gauge_G;      // gauge exponent G(z): psi = phi e^{-G}
  RealFn gauge_K;      // K(z) = G'(z)
  std::optional<RadialData> radial;
  std::optional<double> lame_energy_shift; // XI: E = epsilon + m(m+1) sum a_i / 3

  double x_lo = -3, x_hi = 3; // default figure grid
  double z_lo = 0.1, z_hi = 3; // finite z sampling interval (P4 > 0 inside)
  std::optional<OracleN1> oracle;

  double rho_x(double x) const; // weight as a function of x
  // Radial conjugation shift: V_S = V_1D - N/(4 r^2) with h = r^{-(d-1)/2}.
  double radial_N() const;
};

struct CaseMeta {
  std::string id, name, potential_tex, domain_text;
  std::vector<std::string> param_names;
  bool weighted = false, is_radial = false, algebraic_only = false;
};

const std::vector<CaseMeta>& case_registry();
std::vector<std::string> case_ids();

CaseInstance instantiate(const std::string& id,
                         const std::map<std::string, double>& params, int n);

struct DomainInfo {
  double x_lo, x_hi;    // default evaluation window
  bool half_line;       // r > 0 domains
  bool algebraic_only;  // xi/tau-domain only
  double z_lo, z_hi;
  std::string text;
};
DomainInfo physical_domain(const CaseInstance& c);

} // namespace qes
