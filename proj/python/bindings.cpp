#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jsobolev/analysis.hpp"
#include "jsobolev/jacobi.hpp"
#include "jsobolev/kernel_bounds.hpp"
#include "jsobolev/quadrature.hpp"
#include "jsobolev/sobolev.hpp"

namespace py = pybind11;
using namespace jsobolev;

namespace {

py::dict fit_dict(const GrowthFit& fit) {
  py::dict d;
  d["degrees"] = fit.degrees;
  d["values"] = fit.values;
  d["slope"] = fit.exponent;
  d["intercept"] = fit.intercept;
  d["r2"] = fit.r2;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Jacobi-Sobolev orthonormal polynomials, expansions and norm experiments";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  py::class_<JacobiParams>(m, "JacobiParams")
      .def(py::init<double, double>(), py::arg("alpha"), py::arg("beta"))
      .def_property_readonly("alpha", &JacobiParams::alpha)
      .def_property_readonly("beta", &JacobiParams::beta)
      .def("shifted", &JacobiParams::shifted, py::arg("k"))
      .def("swapped", &JacobiParams::swapped)
      .def(py::self == py::self)
      .def("__repr__", [](const JacobiParams& p) { return to_string(p); });

  py::class_<SobolevParams>(m, "SobolevParams")
      .def(py::init<double, double, int>(), py::arg("alpha"), py::arg("beta"), py::arg("m"))
      .def_property_readonly("jacobi", &SobolevParams::jacobi)
      .def_property_readonly("m", &SobolevParams::m)
      .def("__repr__", [](const SobolevParams& p) { return to_string(p); });

  // jacobi_core
  m.def("jacobi_eval", &jacobi_eval, py::arg("params"), py::arg("n"), py::arg("x"));
  m.def("weight_mass", &weight_mass, py::arg("params"));
  m.def("orthonormal_norm_const", &orthonormal_norm_const, py::arg("params"), py::arg("n"));
  m.def("orthonormal_eval", &orthonormal_eval, py::arg("params"), py::arg("n"), py::arg("x"));
  m.def("orthonormal_derivative_eval", &orthonormal_derivative_eval, py::arg("params"), py::arg("n"), py::arg("k"),
        py::arg("x"));
  m.def("eigenvalue", &eigenvalue, py::arg("params"), py::arg("n"));
  m.def("derivative_factor", &derivative_factor, py::arg("params"), py::arg("n"), py::arg("k"));

  // quadrature
  m.def(
      "gauss_jacobi_rule",
      [](const JacobiParams& params, int npoints) {
        const QuadratureRule rule = gauss_jacobi_rule(params, npoints);
        return py::make_tuple(rule.nodes, rule.weights);
      },
      py::arg("params"), py::arg("npoints"), "Nodes and weights of the n-point Gauss-Jacobi rule.");
  m.def("lp_norm", &lp_norm, py::arg("f"), py::arg("p"), py::arg("params"), py::arg("resolution") = 64);
  m.def("jacobi_lp_norm", &jacobi_lp_norm, py::arg("params"), py::arg("n"), py::arg("p"),
        py::arg("panel_order") = 12);

  // sobolev
  py::class_<FunctionBundle>(m, "FunctionBundle")
      .def(py::init([](std::string name, int max_order, std::function<double(int, double)> eval, int degree_proxy) {
             FunctionBundle f;
             f.name = std::move(name);
             f.max_order = max_order;
             f.degree_proxy = degree_proxy;
             f.eval = std::move(eval);
             return f;
           }),
           py::arg("name"), py::arg("max_order"), py::arg("eval"), py::arg("degree_proxy") = 32,
           "Wrap eval(k, x) returning the k-th derivative at x.")
      .def_readonly("name", &FunctionBundle::name)
      .def_readonly("max_order", &FunctionBundle::max_order)
      .def("__call__", &FunctionBundle::operator(), py::arg("k"), py::arg("x"));

  m.def("polynomial_bundle", &polynomial_bundle, py::arg("coeffs"));
  m.def("constant_bundle", &constant_bundle, py::arg("c"));
  m.def("exp_bundle", &exp_bundle, py::arg("max_order") = 8);
  m.def("one_minus_x_power_bundle", &one_minus_x_power_bundle, py::arg("gamma"), py::arg("max_order") = 8);
  m.def("sine_bundle", &sine_bundle, py::arg("k"), py::arg("max_order") = 8);
  m.def("q_bundle", &q_bundle, py::arg("sp"), py::arg("n"));

  py::class_<Expansion>(m, "Expansion")
      .def(py::init<SobolevParams, std::vector<double>>(), py::arg("params"), py::arg("coeffs"))
      .def_readonly("params", &Expansion::params)
      .def_readonly("coeffs", &Expansion::coeffs)
      .def_property_readonly("n", &Expansion::n)
      .def("__call__", &evaluate_expansion, py::arg("ell"), py::arg("x"))
      .def("to_json", &expansion_to_json)
      .def_static("from_json", &expansion_from_json, py::arg("text"));

  m.def("s_factor", &s_factor, py::arg("sp"), py::arg("n"));
  m.def("q_eval", &q_eval, py::arg("sp"), py::arg("n"), py::arg("ell"), py::arg("x"));
  m.def("sobolev_inner", &sobolev_inner, py::arg("sp"), py::arg("f"), py::arg("g"), py::arg("resolution") = 64);
  m.def("fourier_coefficient", &fourier_coefficient, py::arg("sp"), py::arg("f"), py::arg("j"),
        py::arg("resolution") = 64);
  m.def("partial_sum", &partial_sum, py::arg("sp"), py::arg("f"), py::arg("n"), py::arg("resolution") = 0);
  m.def("decomposed_partial_sum", &decomposed_partial_sum, py::arg("sp"), py::arg("f"), py::arg("n"), py::arg("k"),
        py::arg("resolution") = 0);
  m.def("evaluate_expansion", &evaluate_expansion, py::arg("e"), py::arg("ell"), py::arg("x"));
  m.def("sobolev_norm", &sobolev_norm, py::arg("sp"), py::arg("f"), py::arg("p"), py::arg("resolution") = 0);

  // analysis
  m.def(
      "critical_window",
      [](double alpha, double beta, int mm) {
        const CriticalWindow w = critical_window(alpha, beta, mm);
        return py::make_tuple(w.p_lower, w.p_upper);
      },
      py::arg("alpha"), py::arg("beta"), py::arg("m"));
  m.def(
      "jacobi_partial_sum_window",
      [](double alpha, double beta) {
        const CriticalWindow w = jacobi_partial_sum_window(alpha, beta);
        return py::make_tuple(w.p_lower, w.p_upper);
      },
      py::arg("alpha"), py::arg("beta"));
  m.def(
      "fit_growth", [](std::vector<int> d, std::vector<double> v) { return fit_dict(fit_growth(std::move(d), std::move(v))); },
      py::arg("degrees"), py::arg("values"));
  m.def(
      "jacobi_lp_growth",
      [](const JacobiParams& params, double p, const std::vector<int>& degrees) {
        const JacobiLpGrowth g = jacobi_lp_growth(params, p, degrees);
        py::dict d = fit_dict(g.fit);
        d["critical_p"] = g.critical_p;
        d["predicted_exponent"] = g.predicted_exponent;
        d["regime"] = to_string(g.regime);
        return d;
      },
      py::arg("params"), py::arg("p"), py::arg("degrees"));
  m.def("q_sobolev_norm", &q_sobolev_norm, py::arg("sp"), py::arg("n"), py::arg("p"));
  m.def("norm_product", &norm_product, py::arg("sp"), py::arg("n"), py::arg("p"));
  m.def("asym_scaled_ratio", &asym_scaled_ratio, py::arg("sp"), py::arg("k"), py::arg("ell"), py::arg("j"));
  m.def(
      "convergence_experiment",
      [](const SobolevParams& sp, const FunctionBundle& f, double p, const std::vector<int>& truncations,
         int resolution) {
        const ConvergenceResult r = convergence_experiment(sp, f, p, truncations, resolution);
        py::dict d;
        d["truncations"] = r.truncations;
        d["errors"] = r.errors;
        d["strictly_decreasing"] = r.strictly_decreasing;
        d["slope"] = r.slope;
        return d;
      },
      py::arg("sp"), py::arg("f"), py::arg("p"), py::arg("truncations"), py::arg("resolution") = 0);

  // kernel_bounds
  m.def("phi_eval", &phi_eval, py::arg("params"), py::arg("k"), py::arg("theta"));
  m.def("abel_kernel", &abel_kernel, py::arg("first"), py::arg("second"), py::arg("r"), py::arg("d"), py::arg("m"),
        py::arg("theta"), py::arg("omega"), py::arg("nterms") = 0);
  m.def(
      "check_kernel_bound",
      [](double alpha, double beta, int mm, double r, int n_theta, int n_omega) {
        const KernelBoundReport rep = check_kernel_bound(alpha, beta, mm, r, n_theta, n_omega);
        py::dict d;
        d["region_sup"] = std::vector<double>(rep.region_sup.begin(), rep.region_sup.end());
        d["region_count"] = std::vector<int>(rep.region_count.begin(), rep.region_count.end());
        d["json"] = to_json(rep);
        return d;
      },
      py::arg("alpha"), py::arg("beta"), py::arg("m"), py::arg("r"), py::arg("n_theta") = 80, py::arg("n_omega") = 80);
  m.def(
      "hardy_supremum",
      [](double p, double alpha, double beta, const std::string& variant, int r_points) {
        HardyVariant v;
        if (variant == "standard") {
          v = HardyVariant::kStandard;
        } else if (variant == "adjoint") {
          v = HardyVariant::kAdjoint;
        } else {
          throw DomainError("variant must be 'standard' or 'adjoint'");
        }
        HardyOptions options;
        options.r_points = r_points;
        const HardyResult h = hardy_supremum(p, alpha, beta, v, options);
        return py::make_tuple(h.value, h.finite, h.argmax);
      },
      py::arg("p"), py::arg("alpha"), py::arg("beta"), py::arg("variant") = "standard", py::arg("r_points") = 200);
}
