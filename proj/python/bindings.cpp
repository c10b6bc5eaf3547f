#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "robertson/classes.hpp"
#include "robertson/cli.hpp"
#include "robertson/growth.hpp"
#include "robertson/io.hpp"
#include "robertson/loewner.hpp"
#include "robertson/qcext.hpp"

namespace py = pybind11;
using namespace robertson;

namespace {

GridSpec make_grid(double r_max, int r_count, int n_theta) {
  return GridSpec::geometric(r_max, r_count, n_theta);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "lambda-Robertson and lambda-spirallike function toolkit";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);
  py::register_exception<DegenerateError>(m, "DegenerateError", PyExc_ArithmeticError);
  py::register_exception<DivergenceError>(m, "DivergenceError", PyExc_ArithmeticError);
  py::register_exception<NoAdmissibleError>(m, "NoAdmissibleError", PyExc_ValueError);
  py::register_exception<GridTooCoarseError>(m, "GridTooCoarseError", PyExc_RuntimeError);

  py::class_<FunctionSpec>(m, "FunctionSpec")
      .def_static("robertson_extremal", &FunctionSpec::robertson_extremal, py::arg("lam"))
      .def_static("spirallike_extremal", &FunctionSpec::spirallike_extremal, py::arg("lam"))
      .def_static("royster", &FunctionSpec::royster, py::arg("mu"))
      .def_static("half_plane", &FunctionSpec::half_plane)
      .def_static("identity", &FunctionSpec::identity)
      .def_static("taylor", &FunctionSpec::taylor, py::arg("coeffs"))
      .def_static("from_json",
                  [](const std::string& text) { return function_from_json(nlohmann::json::parse(text)); })
      .def("to_json", [](const FunctionSpec& f) { return nlohmann::json(f).dump(); })
      .def_property_readonly("kind", &FunctionSpec::kind_name)
      .def("__eq__", &FunctionSpec::operator==)
      .def("__repr__", [](const FunctionSpec& f) {
        return "FunctionSpec(" + nlohmann::json(f).dump() + ")";
      });

  py::class_<GridSpec>(m, "GridSpec")
      .def(py::init(&make_grid), py::arg("r_max") = 0.99, py::arg("r_count") = 40,
           py::arg("n_theta") = 720)
      .def_readonly("r_values", &GridSpec::r_values)
      .def_readonly("n_theta", &GridSpec::n_theta);

  py::enum_<Verdict>(m, "Verdict")
      .value("PASS", Verdict::Pass)
      .value("PASS_BOUNDARY", Verdict::PassBoundary)
      .value("FAIL", Verdict::Fail);

  py::class_<MembershipReport>(m, "MembershipReport")
      .def_readonly("functional", &MembershipReport::functional)
      .def_readonly("min_value", &MembershipReport::min_value)
      .def_readonly("argmin", &MembershipReport::argmin)
      .def_readonly("argmin_t", &MembershipReport::argmin_t)
      .def_readonly("verdict", &MembershipReport::verdict)
      .def_readonly("degenerate_points", &MembershipReport::degenerate_points)
      .def("passed", &MembershipReport::passed)
      .def("to_json", [](const MembershipReport& r) { return io::dump_json(r); });

  m.def("principal_pow", &principal_pow, py::arg("w"), py::arg("alpha"));
  m.def(
      "eval_jet",
      [](const FunctionSpec& f, cplx z) {
        const Jet2 j = eval_jet(f, z);
        return py::make_tuple(j.v0, j.v1, j.v2);
      },
      py::arg("f"), py::arg("z"));
  m.def("alpha_primitive", &alpha_primitive, py::arg("f"), py::arg("lam"), py::arg("z"),
        py::arg("abs_tol") = 1e-10);

  m.def("lambda_arg", &lambda_arg, py::arg("w"), py::arg("lam"));
  const GridSpec default_grid = GridSpec::geometric();
  m.def("robertson_report", &robertson_report, py::arg("f"), py::arg("lam"),
        py::arg("grid") = default_grid, py::arg("tol") = kMembershipTol);
  m.def("spirallike_report", &spirallike_report, py::arg("f"), py::arg("lam"),
        py::arg("grid") = default_grid, py::arg("tol") = kMembershipTol);
  m.def(
      "equivalence_check",
      [](const FunctionSpec& f, double lambda, const GridSpec& g) {
        const auto e = equivalence_check(f, lambda, g);
        return py::make_tuple(e.robertson, e.derivative_spiral, e.primitive_convex);
      },
      py::arg("f"), py::arg("lam"), py::arg("grid") = default_grid);

  py::class_<GrowthEnvelope>(m, "GrowthEnvelope")
      .def_readonly("r", &GrowthEnvelope::r)
      .def_readonly("psi_lo", &GrowthEnvelope::psi_lo)
      .def_readonly("psi_hi", &GrowthEnvelope::psi_hi)
      .def_readonly("theta_lo", &GrowthEnvelope::theta_lo)
      .def_readonly("theta_hi", &GrowthEnvelope::theta_hi);
  m.def("growth_bounds", &growth_bounds, py::arg("lam"), py::arg("r"));
  m.def("boundedness_integral", &boundedness_integral, py::arg("lam"), py::arg("r"),
        py::arg("abs_tol") = 1e-10);
  m.def("asymptotic_check", &asymptotic_check, py::arg("lam"), py::arg("s"));
  m.def("cubic_root_x0", &cubic_root_x0);
  m.def("royster_mu", &royster_mu, py::arg("lam"));
  m.def(
      "collision_search",
      [](const FunctionSpec& f, const GridSpec& g, double separation) -> py::object {
        CollisionOptions options;
        options.separation = separation;
        const auto pair = collision_search(f, g, options);
        if (!pair) return py::none();
        return py::make_tuple(pair->z1, pair->z2, pair->residual);
      },
      py::arg("f"), py::arg("grid") = default_grid, py::arg("separation") = 0.05);

  py::class_<ChainSample>(m, "ChainSample")
      .def_readonly("t", &ChainSample::t)
      .def_readonly("z", &ChainSample::z)
      .def_readonly("f_t", &ChainSample::f_t)
      .def_readonly("df_dt", &ChainSample::df_dt)
      .def_readonly("df_dz", &ChainSample::df_dz)
      .def_readonly("p", &ChainSample::p);
  m.def("chain_eval", &chain_eval, py::arg("f"), py::arg("lam"), py::arg("t"), py::arg("z"));
  m.def("chain_positivity_report", &chain_positivity_report, py::arg("f"), py::arg("lam"),
        py::arg("t_values") = default_t_values(), py::arg("grid") = default_grid,
        py::arg("tol") = 1e-9);
  m.def("eq43_lhs", &eq43_lhs, py::arg("f"), py::arg("lam"), py::arg("t"), py::arg("z"));

  m.def("H_s", &H_s, py::arg("f"), py::arg("s"), py::arg("z"));
  m.def(
      "admissible_k",
      [](double lambda, double q, bool second_coeff_zero) {
        const auto k = admissible_k(lambda, q, second_coeff_zero);
        return py::make_tuple(k.k, k.out_of_range);
      },
      py::arg("lam"), py::arg("q"), py::arg("second_coeff_zero") = false);
  m.def(
      "hotta_check",
      [](const FunctionSpec& f, double a, double b, cplx c, double k, const GridSpec& g) {
        HottaParams p{a, b, c, k};
        const auto r = hotta_check(f, p, g);
        py::dict d;
        d["lhs_max"] = r.lhs_max;
        d["M"] = r.M;
        d["l"] = r.l;
        d["verdict"] = r.verdict;
        return d;
      },
      py::arg("f"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("k"),
      py::arg("grid") = default_grid);
  m.def("becker_extend", &becker_extend, py::arg("f"), py::arg("lam"), py::arg("w"));
  m.def(
      "max_dilatation",
      [](const FunctionSpec& f, double lambda, double r_outer, int n_r, int n_theta,
         double fd_step) {
        const auto field = dilatation_field(f, lambda, r_outer, n_r, n_theta, fd_step);
        return py::make_tuple(field.max_abs_mu, field.flagged);
      },
      py::arg("f"), py::arg("lam"), py::arg("r_outer") = 3.0, py::arg("n_r") = 100,
      py::arg("n_theta") = 360, py::arg("fd_step") = 1e-5);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<std::string> full{"robertson_cli"};
        full.insert(full.end(), args.begin(), args.end());
        std::vector<const char*> argv;
        for (const auto& a : full) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
