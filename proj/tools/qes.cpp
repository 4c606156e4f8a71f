#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "qes/verify.hpp"

using nlohmann::json;

namespace {

double tol_scale_from_env() {
  const char* v = std::getenv("QES_TOL");
  if (!v) return 1.0;
  try {
    return std::max(1.0, std::stod(v));
  } catch (...) {
    throw qes::Error(qes::ErrorKind::InvalidInput, "QES_TOL is not a number");
  }
}

std::map<std::string, double> parse_params(const std::vector<std::string>& kv) {
  std::map<std::string, double> out;
  for (const auto& s : kv) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0)
      throw qes::Error(qes::ErrorKind::InvalidInput,
                       "--param expects name=value, got '" + s + "'");
    try {
      out[s.substr(0, eq)] = std::stod(s.substr(eq + 1));
    } catch (...) {
      throw qes::Error(qes::ErrorKind::InvalidInput,
                       "bad numeric value in '" + s + "'");
    }
  }
  return out;
}

struct Grid {
  double lo = 0, hi = 0;
  int points = 0;
};

Grid parse_grid(const std::string& s) {
  Grid g;
  auto p1 = s.find(':'), p2 = s.rfind(':');
  if (p1 == std::string::npos || p2 == p1)
    throw qes::Error(qes::ErrorKind::InvalidInput,
                     "--grid expects min:max:points");
  try {
    g.lo = std::stod(s.substr(0, p1));
    g.hi = std::stod(s.substr(p1 + 1, p2 - p1 - 1));
    g.points = std::stoi(s.substr(p2 + 1));
  } catch (...) {
    throw qes::Error(qes::ErrorKind::InvalidInput, "bad --grid value");
  }
  if (!(g.lo < g.hi) || g.points < 2)
    throw qes::Error(qes::ErrorKind::InvalidInput,
                     "--grid needs min < max and points >= 2");
  return g;
}

json energy_json(qes::cplx e) {
  if (qes::is_real(e)) return e.real();
  return json{{"re", e.real()}, {"im", e.imag()}};
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream f(out_path);
    f << text << "\n";
  }
}

// Serialize a value or an empty pole-marker field.
std::string csv_field(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", *v);
  return buf;
}

int cmd_list(const std::string& case_id, bool as_json) {
  json j = json::array();
  for (const auto& m : qes::case_registry()) {
    if (!case_id.empty() && m.id != case_id) continue;
    j.push_back({{"id", m.id},
                 {"name", m.name},
                 {"params", m.param_names},
                 {"potential", m.potential_tex},
                 {"domain", m.domain_text},
                 {"weighted", m.weighted},
                 {"radial", m.is_radial},
                 {"algebraic_only", m.algebraic_only}});
  }
  if (!case_id.empty() && j.empty())
    throw qes::Error(qes::ErrorKind::InvalidInput,
                     "unknown case id '" + case_id + "'");
  if (as_json) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (const auto& m : j) {
    std::cout << m["id"].get<std::string>() << "  (" <<
        m["name"].get<std::string>() << ")\n";
    std::cout << "  params:";
    for (const auto& p : m["params"]) std::cout << " " << p.get<std::string>();
    std::cout << "\n  domain: " << m["domain"].get<std::string>() << "\n";
    std::cout << "  V: " << m["potential"].get<std::string>() << "\n";
    std::cout << "  weighted: " << (m["weighted"].get<bool>() ? "yes" : "no")
              << "  radial: " << (m["radial"].get<bool>() ? "yes" : "no")
              << "  algebraic-only: "
              << (m["algebraic_only"].get<bool>() ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_solve(const qes::CaseInstance& c, const std::string& out_path,
              double tol_scale) {
  auto spectrum = qes::solve_spectrum(c.form, c.z_lo, c.z_hi);
  json j;
  j["case"] = c.id;
  j["n"] = c.n;
  j["params"] = c.params;
  j["energies"] = json::array();
  j["roots"] = json::array();
  j["bae_residuals"] = json::array();
  j["ode_residuals"] = json::array();
  j["pairing"] = json::array();
  bool ok = true;
  for (size_t i = 0; i < spectrum.size(); ++i) {
    const auto& s = spectrum[i];
    j["energies"].push_back(energy_json(s.energy));
    json roots = json::array();
    for (auto r : s.roots) roots.push_back(energy_json(r));
    j["roots"].push_back(roots);
    j["bae_residuals"].push_back(s.bae_residual);
    j["ode_residuals"].push_back(s.ode_residual_max);
    j["pairing"].push_back(i);
    ok = ok && s.bae_residual < 1e-8 * tol_scale &&
         s.ode_residual_max < 1e-8 * tol_scale;
  }
  emit(j.dump(2), out_path);
  return ok ? 0 : 1;
}

int cmd_susy(const qes::CaseInstance& c, int seed_index, int other_index,
             const std::string& grid_spec, const std::string& out_path,
             double) {
  auto spectrum = qes::solve_spectrum(c.form, c.z_lo, c.z_hi);
  qes::SusyPartner p = qes::make_partner(c, spectrum, seed_index, other_index);

  Grid g;
  if (!grid_spec.empty()) {
    g = parse_grid(grid_spec);
  } else if (c.algebraic_only) {
    g = {c.z_lo, c.z_hi, 401};
  } else {
    g = {c.x_lo, c.x_hi, 601};
  }

  std::string csv_path =
      out_path.empty() ? c.id + "_susy.csv" : out_path;
  std::ofstream csv(csv_path);
  auto guard = [](auto&& f) -> std::optional<double> {
    try {
      return f();
    } catch (const qes::Error& e) {
      if (e.kind == qes::ErrorKind::Pole || e.kind == qes::ErrorKind::Node ||
          e.kind == qes::ErrorKind::SingularWeight)
        return std::nullopt;
      throw;
    }
  };

  if (c.algebraic_only) {
    csv << "z,V2,phi_seed,phi_other,phi_partner\n";
    for (int i = 0; i < g.points; ++i) {
      double z = g.lo + (g.hi - g.lo) * i / (g.points - 1);
      csv << csv_field(z) << ','
          << csv_field(guard([&] { return p.V2_z(z).real(); })) << ','
          << csv_field(qes::eval_poly(p.seed.poly, z).real()) << ','
          << csv_field(qes::eval_poly(p.other.poly, z).real()) << ','
          << csv_field(guard([&] { return p.phi2(z).real(); })) << '\n';
    }
  } else {
    csv << "x,V,V2,psi_seed,psi_other,psi_partner";
    if (c.radial) csv << ",V_S,V_S2,psi_S_seed,psi_S_other,psi_S_partner";
    csv << "\n";
    for (int i = 0; i < g.points; ++i) {
      double x = g.lo + (g.hi - g.lo) * i / (g.points - 1);
      auto w = p.wavefunctions(x);
      csv << csv_field(x) << ',' << csv_field(c.V_x(x)) << ','
          << csv_field(guard([&] {
               auto v = p.V2_x(x);
               return v ? *v : std::numeric_limits<double>::quiet_NaN();
             }))
          << ',' << csv_field(w.psi_seed) << ',' << csv_field(w.psi_other)
          << ',' << csv_field(w.psi2);
      if (c.radial) {
        auto ws = p.wavefunctions_radial(x);
        csv << ',' << csv_field(c.VS_x(x)) << ','
            << csv_field(guard([&] {
                 auto v = p.VS2_x(x);
                 return v ? *v : std::numeric_limits<double>::quiet_NaN();
               }))
            << ',' << csv_field(ws.psi_seed) << ','
            << csv_field(ws.psi_other) << ',' << csv_field(ws.psi2);
      }
      csv << '\n';
    }
  }

  json summary;
  summary["case"] = c.id;
  summary["n"] = c.n;
  summary["params"] = c.params;
  summary["energy_seed"] = energy_json(p.seed.energy);
  summary["energy_other"] = energy_json(p.other.energy);
  summary["gap"] = energy_json(p.gap);
  summary["seed_roots"] = json::array();
  for (auto r : p.seed_pole_zs) summary["seed_roots"].push_back(energy_json(r));
  summary["csv"] = csv_path;
  summary["new_poles"] = json::array();
  bool new_pole = false;
  if (!c.algebraic_only) {
    qes::PoleScan scan = qes::singularity_scan(
        [&](double x) { return p.V2_x(x); }, g.lo, g.hi,
        std::max(400, g.points), {});
    for (double x : scan.new_poles) summary["new_poles"].push_back(x);
    new_pole = !scan.new_poles.empty();
  }
  std::cout << summary.dump(2) << "\n";
  return new_pole ? 4 : 0;
}

int cmd_verify(const qes::CaseInstance& c, int seed_index, int other_index,
               const std::string& out_path, double tol_scale) {
  qes::VerificationReport r =
      qes::run_verification(c, seed_index, other_index, tol_scale);
  emit(qes::report_to_json(r), out_path);
  if (!r.new_poles.empty()) return 4;
  return r.pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bethe-ansatz solver and SUSY partner builder for "
               "quasi-exactly solvable potentials"};
  app.require_subcommand(1);

  std::string case_id, grid_spec, out_path;
  std::vector<std::string> params_kv;
  int n = 1, seed_index = -1, other_index = -1;
  bool as_json = false;

  auto add_common = [&](CLI::App* sub, bool needs_case) {
    auto* opt = sub->add_option("--case", case_id, "case id (see `qes list`)");
    if (needs_case) opt->required();
    sub->add_option("--param", params_kv, "parameter assignment name=value");
    sub->add_option("--n", n, "degree of the polynomial sector");
    sub->add_option("--out", out_path, "output file path");
  };

  auto* list = app.add_subcommand("list", "list the case catalog");
  list->add_option("--case", case_id, "restrict to one case id");
  list->add_flag("--json", as_json, "machine-readable output");

  auto* solve = app.add_subcommand("solve", "solve the polynomial spectrum");
  add_common(solve, true);

  auto* susy = app.add_subcommand("susy", "emit SUSY partner plot data");
  add_common(susy, true);
  susy->add_option("--seed-index", seed_index, "seed state (default: lowest)");
  susy->add_option("--other-index", other_index, "partner reference state");
  susy->add_option("--grid", grid_spec, "grid as min:max:points");

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  add_common(verify, true);
  verify->add_option("--seed-index", seed_index, "seed state");
  verify->add_option("--other-index", other_index, "partner reference state");

  CLI11_PARSE(app, argc, argv);

  try {
    double ts = tol_scale_from_env();
    if (list->parsed()) return cmd_list(case_id, as_json);
    qes::CaseInstance c = qes::instantiate(case_id, parse_params(params_kv), n);
    if (solve->parsed()) return cmd_solve(c, out_path, ts);
    if (susy->parsed())
      return cmd_susy(c, seed_index, other_index, grid_spec, out_path, ts);
    if (verify->parsed())
      return cmd_verify(c, seed_index, other_index, out_path, ts);
  } catch (const qes::Error& e) {
    std::cerr << "error (" << qes::error_kind_name(e.kind) << "): " << e.what()
              << "\n";
    return qes::exit_code_for(e.kind);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
