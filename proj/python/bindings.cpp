#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "heunpot/app/commands.hpp"
#include "heunpot/app/verify_suites.hpp"
#include "heunpot/verify_oracle.hpp"

namespace py = pybind11;
using namespace heunpot;

namespace {

HeunParams make_params(cplx a, cplx q, cplx alpha, cplx beta, cplx gamma, cplx delta, std::optional<cplx> epsilon) {
  const RawHeunParams raw{a, q, alpha, beta, gamma, delta, epsilon.value_or(0.0)};
  return epsilon ? HeunParams::validate(raw) : HeunParams::with_solved_epsilon(raw);
}

// Held by value; std::variant itself would be converted by the stl casters.
struct PyFamily {
  TransformFamily f;
};

PyFamily make_family(const std::string& name, double g, double s, double b, double c, double sigma,
                            double alpha1, double beta1, double gamma1, std::optional<double> c1) {
  app::FamilySpec spec{name, g, s, b, c, sigma, alpha1, beta1, gamma1, c1};
  return PyFamily{app::make_family(spec)};
}

py::dict profile_dict(const PotentialProfile& prof) {
  py::list psi;
  for (const auto& v : prof.psi_values) {
    if (v) {
      psi.append(*v);
    } else {
      psi.append(py::none());
    }
  }
  py::dict d;
  d["family"] = family_name(prof.family);
  d["construction_path"] = to_string(prof.construction_path);
  d["k_squared"] = prof.k_squared;
  d["x"] = prof.xs;
  d["z"] = prof.zs;
  d["I_S"] = prof.is_values;
  d["V"] = prof.v_values;
  d["psi"] = psi;
  d["excluded"] = prof.excluded;
  return d;
}

}  // namespace

PYBIND11_MODULE(_heunpot, m) {
  m.doc() = "Schrodinger potentials from the Heun equation";

  py::register_exception<Error>(m, "HeunpotError", PyExc_ValueError);

  py::class_<HeunParams>(m, "HeunParams")
      .def(py::init(&make_params), py::arg("a") = cplx(2.0), py::arg("q") = cplx(1.0), py::arg("alpha") = cplx(1.0),
           py::arg("beta") = cplx(1.0), py::arg("gamma") = cplx(1.0), py::arg("delta") = cplx(1.0),
           py::arg("epsilon") = py::none())
      .def_property_readonly("a", &HeunParams::a)
      .def_property_readonly("q", &HeunParams::q)
      .def_property_readonly("alpha", &HeunParams::alpha)
      .def_property_readonly("beta", &HeunParams::beta)
      .def_property_readonly("gamma", &HeunParams::gamma)
      .def_property_readonly("delta", &HeunParams::delta)
      .def_property_readonly("epsilon", &HeunParams::epsilon)
      .def("fuchsian_defect", &HeunParams::fuchsian_defect)
      .def("__repr__", [](const HeunParams& p) {
        std::ostringstream os;
        os << "HeunParams(a=" << p.a() << ", q=" << p.q() << ", alpha=" << p.alpha() << ", beta=" << p.beta()
           << ", gamma=" << p.gamma() << ", delta=" << p.delta() << ", epsilon=" << p.epsilon() << ")";
        return os.str();
      });

  py::class_<PyFamily>(m, "Family")
      .def(py::init(&make_family), py::arg("name"), py::arg("g") = 1.0, py::arg("s") = 1.0, py::arg("b") = 1.0,
           py::arg("c") = 1.0, py::arg("sigma") = 1.0, py::arg("alpha1") = 1.0, py::arg("beta1") = 0.0,
           py::arg("gamma1") = 0.0, py::arg("c1") = py::none())
      .def_property_readonly("name", [](const PyFamily& pf) { return family_name(pf.f); })
      .def("rho", [](const PyFamily& pf) {
        const QuadraticRho r = induced_rho(pf.f);
        return py::make_tuple(r.alpha1(), r.beta1(), r.gamma1());
      })
      .def("z", [](const PyFamily& pf, double x) {
        const ZPoint pt = special_case_z(pf.f, x);
        return py::make_tuple(pt.z, pt.dz);
      })
      .def("__repr__", [](const PyFamily& pf) { return "Family('" + family_name(pf.f) + "')"; });

  m.def("heun_local", [](const HeunParams& p, cplx z) {
    const HeunValue v = heun_local(p, z);
    return py::make_tuple(v.value, v.derivative);
  }, py::arg("params"), py::arg("z"), "Hl(z) and Hl'(z) from the power series at 0");
  m.def("heun_series_coeffs", [](const HeunParams& p, std::size_t n) {
    return heun_series_coeffs(p, n).coeffs;
  }, py::arg("params"), py::arg("n"));
  m.def("heun_oracle", [](const HeunParams& p, cplx z, double tol) {
    const HeunValue v = heun_ode_oracle(p, z, tol);
    return py::make_tuple(v.value, v.derivative);
  }, py::arg("params"), py::arg("z"), py::arg("tol") = 1e-12, "Hl(z) by integrating the ODE from near 0");
  m.def("invariant_coeffs", [](const HeunParams& p) {
    const InvariantCoeffs c = invariant_coeffs(p);
    py::dict d;
    d["A"] = c.A;
    d["B"] = c.B;
    d["C"] = c.C;
    d["D"] = c.D;
    d["F"] = c.F;
    return d;
  });
  m.def("heun_invariant", &heun_invariant, py::arg("params"), py::arg("z"));
  m.def("heun_invariant_quartic", &heun_invariant_quartic, py::arg("params"), py::arg("z"));
  m.def("schwarzian_closed", [](const PyFamily& pf, double x) {
    return schwarzian_closed(induced_rho(pf.f), special_case_z(pf.f, x).z);
  }, py::arg("family"), py::arg("x"));
  m.def("schwarzian_numeric", [](const PyFamily& pf, double x) {
    return schwarzian_numeric([&](double t) { return special_case_z(pf.f, t).z; }, x);
  }, py::arg("family"), py::arg("x"));
  m.def("schrodinger_invariant", [](const HeunParams& p, const PyFamily& pf, double x) {
    return schrodinger_invariant_direct(p, pf.f, x);
  }, py::arg("params"), py::arg("family"), py::arg("x"));
  m.def("energy_constant", [](const HeunParams& p, const PyFamily& pf) { return energy_constant(p, pf.f); },
        py::arg("params"), py::arg("family"));
  m.def("wavefunction", [](const HeunParams& p, const PyFamily& pf, double x) { return wavefunction(p, pf.f, x); },
        py::arg("params"), py::arg("family"), py::arg("x"));
  m.def("build_profile", [](const HeunParams& p, const PyFamily& pf, double lo, double hi, std::size_t count,
                            const std::string& construction) {
    const ConstructionPath path = construction == "expanded" ? ConstructionPath::Expanded : ConstructionPath::Direct;
    return profile_dict(build_profile(p, pf.f, GridSpec{lo, hi, count}, path));
  }, py::arg("params"), py::arg("family"), py::arg("min"), py::arg("max"), py::arg("count") = 201,
        py::arg("construction") = "direct");
  m.def("verify_json", [](std::uint64_t seed, std::optional<double> tol, bool corrupt_table) {
    app::VerifyOptions opts;
    opts.seed = seed;
    opts.tol = tol;
    opts.corrupt_table = corrupt_table;
    return app::verify_report(opts, app::run_suites(opts)).dump();
  }, py::arg("seed") = 20240917ULL, py::arg("tol") = py::none(), py::arg("corrupt_table") = false);
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = app::run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs the command line tool in-process; returns (exit_code, stdout, stderr).");
}
