#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qes/verify.hpp"

namespace py = pybind11;
using namespace qes;

namespace {

py::object num(cplx v) {
  if (is_real(v)) return py::float_(v.real());
  return py::cast(v);
}

py::dict solve_py(const std::string& id,
                  const std::map<std::string, double>& params, int n) {
  CaseInstance c = instantiate(id, params, n);
  auto spectrum = solve_spectrum(c.form, c.z_lo, c.z_hi);
  py::list energies, roots, bae, ode;
  for (const auto& s : spectrum) {
    energies.append(num(s.energy));
    py::list r;
    for (auto z : s.roots) r.append(num(z));
    roots.append(r);
    bae.append(s.bae_residual);
    ode.append(s.ode_residual_max);
  }
  py::dict d;
  d["case"] = id;
  d["n"] = n;
  d["energies"] = energies;
  d["roots"] = roots;
  d["bae_residuals"] = bae;
  d["ode_residuals"] = ode;
  return d;
}

py::dict susy_py(const std::string& id,
                 const std::map<std::string, double>& params, int n,
                 const std::vector<double>& xs, int seed_index,
                 int other_index) {
  CaseInstance c = instantiate(id, params, n);
  auto spectrum = solve_spectrum(c.form, c.z_lo, c.z_hi);
  SusyPartner p = make_partner(c, spectrum, seed_index, other_index);
  py::dict d;
  d["energy_seed"] = num(p.seed.energy);
  d["energy_other"] = num(p.other.energy);
  d["gap"] = num(p.gap);
  py::list sr;
  for (auto z : p.seed_pole_zs) sr.append(num(z));
  d["seed_roots"] = sr;
  auto opt = [](std::optional<double> v) -> py::object {
    if (v && std::isfinite(*v)) return py::float_(*v);
    return py::none();
  };
  if (!xs.empty() && !c.algebraic_only) {
    py::list V, V2, ps, po, p2;
    for (double x : xs) {
      V.append(c.V_x(x));
      V2.append(opt(p.V2_x(x)));
      auto w = p.wavefunctions(x);
      ps.append(w.psi_seed);
      po.append(w.psi_other);
      p2.append(opt(w.psi2));
    }
    d["V"] = V;
    d["V2"] = V2;
    d["psi_seed"] = ps;
    d["psi_other"] = po;
    d["psi_partner"] = p2;
  }
  if (!xs.empty() && c.algebraic_only) {
    py::list V2, p2;
    auto guard = [&](auto&& f) -> py::object {
      try {
        return py::float_(f());
      } catch (const Error&) {
        return py::none();
      }
    };
    for (double z : xs) {
      V2.append(guard([&] { return p.V2_z(z).real(); }));
      p2.append(guard([&] { return p.phi2(z).real(); }));
    }
    d["V2"] = V2;
    d["phi_partner"] = p2;
  }
  return d;
}

py::dict verify_py(const std::string& id,
                   const std::map<std::string, double>& params, int n,
                   int seed_index, int other_index, double tol_scale) {
  CaseInstance c = instantiate(id, params, n);
  VerificationReport r = run_verification(c, seed_index, other_index, tol_scale);
  py::dict d;
  d["case"] = r.case_id;
  d["n"] = r.n;
  d["params"] = r.params;
  py::list checks;
  for (const auto& e : r.checks) {
    py::dict ce;
    ce["name"] = e.name;
    ce["max_residual"] = e.max_residual;
    ce["tol"] = e.tol;
    ce["pass"] = e.pass;
    ce["worst_at"] = e.worst_at;
    checks.append(ce);
  }
  d["checks"] = checks;
  d["new_poles"] = r.new_poles;
  d["pass"] = r.pass();
  return d;
}

py::list case_info_py() {
  py::list out;
  for (const auto& m : case_registry()) {
    py::dict d;
    d["id"] = m.id;
    d["name"] = m.name;
    d["params"] = m.param_names;
    d["potential"] = m.potential_tex;
    d["domain"] = m.domain_text;
    d["weighted"] = m.weighted;
    d["radial"] = m.is_radial;
    d["algebraic_only"] = m.algebraic_only;
    out.append(d);
  }
  return out;
}

} // namespace

PYBIND11_MODULE(_qes, m) {
  m.doc() = "Bethe-ansatz solver and SUSY partner builder for quasi-exactly "
            "solvable potentials";
  py::register_exception<Error>(m, "QesError");
  m.def("case_ids", &case_ids, "catalog case ids");
  m.def("case_info", &case_info_py, "catalog metadata");
  m.def("solve", &solve_py, py::arg("case"), py::arg("params"),
        py::arg("n") = 1, "polynomial spectrum of a catalog case");
  m.def("susy", &susy_py, py::arg("case"), py::arg("params"), py::arg("n") = 1,
        py::arg("grid") = std::vector<double>{}, py::arg("seed_index") = -1,
        py::arg("other_index") = -1,
        "SUSY partner summary and optional grid evaluation");
  m.def("verify", &verify_py, py::arg("case"), py::arg("params"),
        py::arg("n") = 1, py::arg("seed_index") = -1,
        py::arg("other_index") = -1, py::arg("tol_scale") = 1.0,
        "full verification suite report");
}
