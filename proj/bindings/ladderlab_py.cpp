// Python bindings for the core operations: the zeta kernel, ladder
// construction and iteration, segments, energies, the orthogonal system,
// the algebra checks, and the lab pipeline (build/verify/report).
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <stdexcept>

#include "ladderlab/algebra.hpp"
#include "ladderlab/constants.hpp"
#include "ladderlab/energy.hpp"
#include "ladderlab/lab.hpp"
#include "ladderlab/ortho.hpp"
#include "ladderlab/segments.hpp"
#include "ladderlab/zeta_kernel.hpp"

namespace py = pybind11;
using namespace ladderlab;

namespace {

EvalMode mode_from(const std::string& mode) {
  if (mode == "fast") return EvalMode::fast;
  if (mode == "oracle") return EvalMode::oracle;
  throw std::invalid_argument("mode must be 'fast' or 'oracle'");
}

}  // namespace

PYBIND11_MODULE(_ladderlab, m) {
  m.doc() = "Iterated product integrals of |zeta(1/2+it)|^2 over reversely "
            "iterated segments of a model Jacob's ladder";

  m.attr("DEFAULT_C") = kDefaultC;

  // --- zeta kernel -------------------------------------------------------
  m.def("rs_theta", &rs_theta, py::arg("t"),
        "Riemann-Siegel theta function");
  m.def(
      "hardy_z",
      [](double t, const std::string& mode) {
        return hardy_z(t, mode_from(mode));
      },
      py::arg("t"), py::arg("mode") = "fast", "Hardy Z function");
  m.def(
      "zeta_mod_sq",
      [](double t, const std::string& mode) {
        return zeta_mod_sq(t, mode_from(mode));
      },
      py::arg("t"), py::arg("mode") = "fast",
      "|zeta(1/2+it)|^2 = Z(t)^2");
  m.def("hardy_zeros", &hardy_zeros, py::arg("count"),
        "First `count` zeros of Z located by the oracle");

  // --- ladder ------------------------------------------------------------
  py::class_<Window>(m, "Window")
      .def_readonly("t_lo", &Window::t_lo)
      .def_readonly("t_hi", &Window::t_hi);
  m.def("window_requirement", &window_requirement, py::arg("T"),
        py::arg("k"), py::arg("c") = kDefaultC,
        "Build window covering k reverse iterates near T");

  py::class_<Ladder>(m, "Ladder")
      .def_static(
          "build",
          [](double t_lo, double t_hi, double tol) {
            LadderParams params;
            params.t_lo = t_lo;
            params.t_hi = t_hi;
            params.tol = tol;
            return Ladder::build(params);
          },
          py::arg("t_lo"), py::arg("t_hi"), py::arg("tol") = 1e-9)
      .def_static("load", &Ladder::load, py::arg("csv_path"))
      .def("save", &Ladder::save, py::arg("csv_path"))
      .def("phi1", &Ladder::phi1, py::arg("t"))
      .def("phi1_slope", &Ladder::phi1_slope, py::arg("t"))
      .def("phi1_inv", &Ladder::phi1_inv, py::arg("y"))
      .def("phi1_iter", &Ladder::phi1_iter, py::arg("t"), py::arg("r"))
      .def("reverse_point", &Ladder::reverse_point, py::arg("T"),
           py::arg("k"))
      .def_property_readonly("t_lo", &Ladder::t_lo)
      .def_property_readonly("t_hi", &Ladder::t_hi)
      .def_property_readonly("phi_lo", &Ladder::phi_lo)
      .def_property_readonly("phi_hi", &Ladder::phi_hi)
      .def_property_readonly("c", &Ladder::c)
      .def("__len__", &Ladder::size);

  // --- segments ----------------------------------------------------------
  py::class_<SegmentHandle>(m, "SegmentHandle")
      .def_readonly("p", &SegmentHandle::p)
      .def_readonly("q", &SegmentHandle::q)
      .def_readonly("T", &SegmentHandle::T)
      .def_readonly("base_len", &SegmentHandle::base_len)
      .def_readonly("lo", &SegmentHandle::lo)
      .def_readonly("hi", &SegmentHandle::hi)
      .def_property_readonly("width", &SegmentHandle::width);
  py::class_<DeltaSet>(m, "DeltaSet")
      .def_readonly("p", &DeltaSet::p)
      .def_readonly("T", &DeltaSet::T)
      .def_readonly("components", &DeltaSet::components);
  m.def("segment", &segment, py::arg("ladder"), py::arg("T"), py::arg("p"),
        py::arg("q"));
  m.def("segment_general", &segment_general, py::arg("ladder"),
        py::arg("T"), py::arg("base_len"), py::arg("q"));
  m.def("delta_set", &delta_set, py::arg("ladder"), py::arg("T"),
        py::arg("p"), py::arg("k"));

  // --- energies ----------------------------------------------------------
  py::class_<EnergyRecord>(m, "EnergyRecord")
      .def_readonly("p", &EnergyRecord::p)
      .def_readonly("q", &EnergyRecord::q)
      .def_readonly("T", &EnergyRecord::T)
      .def_readonly("value", &EnergyRecord::value)
      .def_readonly("predicted", &EnergyRecord::predicted)
      .def_readonly("ratio", &EnergyRecord::ratio)
      .def_readonly("quad_err", &EnergyRecord::quad_err)
      .def_readonly("segment", &EnergyRecord::segment);
  py::class_<MeanValuePoints>(m, "MeanValuePoints")
      .def_readonly("c1", &MeanValuePoints::c1)
      .def_readonly("d", &MeanValuePoints::d);
  py::class_<SpectralResult>(m, "SpectralResult")
      .def_readonly("value", &SpectralResult::value)
      .def_readonly("err_estimate", &SpectralResult::err_estimate)
      .def_readonly("resolution_ok", &SpectralResult::resolution_ok);
  m.def("weighted_energy", &weighted_energy, py::arg("ladder"),
        py::arg("T"), py::arg("l"), py::arg("k"), py::arg("tol") = 1e-8);
  m.def("energy_general", &energy_general, py::arg("ladder"), py::arg("T"),
        py::arg("l"), py::arg("k"), py::arg("tol") = 1e-8);
  m.def("energy_pq", &energy_pq, py::arg("ladder"), py::arg("T"),
        py::arg("p"), py::arg("q"), py::arg("tol") = 1e-8);
  m.def("mean_value_points", &mean_value_points, py::arg("ladder"),
        py::arg("record"));
  m.def("spectral_energy", &spectral_energy, py::arg("ladder"),
        py::arg("record"), py::arg("omega_max") = 0.0,
        py::arg("n_omega") = 8192);

  // --- orthogonal system -------------------------------------------------
  py::class_<BaseSystem>(m, "BaseSystem")
      .def(py::init<double, int>(), py::arg("l"), py::arg("n_functions"))
      .def("eval", &BaseSystem::eval, py::arg("n"), py::arg("u"))
      .def("norm", &BaseSystem::norm, py::arg("n"))
      .def_property_readonly("l", &BaseSystem::l)
      .def_property_readonly("count", &BaseSystem::count);
  py::class_<GramReport>(m, "GramReport")
      .def_readonly("k", &GramReport::k)
      .def_readonly("T", &GramReport::T)
      .def_readonly("l", &GramReport::l)
      .def_readonly("n", &GramReport::n)
      .def_readonly("matrix", &GramReport::matrix)
      .def_readonly("target", &GramReport::target)
      .def_readonly("worst_offdiag", &GramReport::worst_offdiag)
      .def_readonly("worst_diag_rel", &GramReport::worst_diag_rel)
      .def("at", &GramReport::at, py::arg("row"), py::arg("col"));
  m.def("weighted_eval", &weighted_eval, py::arg("ladder"), py::arg("sys"),
        py::arg("T"), py::arg("k"), py::arg("n"), py::arg("t"));
  m.def("gram_matrix", &gram_matrix, py::arg("ladder"), py::arg("sys"),
        py::arg("T"), py::arg("k"), py::arg("tol") = 1e-6);

  // --- algebra -----------------------------------------------------------
  py::class_<ExponentRatio>(m, "ExponentRatio")
      .def_readonly("num", &ExponentRatio::num)
      .def_readonly("den", &ExponentRatio::den)
      .def("real", &ExponentRatio::real);
  py::class_<AlgebraReport>(m, "AlgebraReport")
      .def_property_readonly(
          "law", [](const AlgebraReport& r) { return law_name(r.law); })
      .def_readonly("inputs", &AlgebraReport::inputs)
      .def_readonly("lhs", &AlgebraReport::lhs)
      .def_readonly("rhs", &AlgebraReport::rhs)
      .def_readonly("residual", &AlgebraReport::residual)
      .def_readonly("exponent", &AlgebraReport::exponent)
      .def_readonly("closure_ok", &AlgebraReport::closure_ok)
      .def_readonly("closure_ok_k0", &AlgebraReport::closure_ok_k0)
      .def_readonly("mean_exact_rel", &AlgebraReport::mean_exact_rel);
  m.def("generator_exponent", &generator_exponent, py::arg("p"),
        py::arg("q"), py::arg("P"), py::arg("Q"));
  m.def("product_exponent", &product_exponent, py::arg("p1"), py::arg("q1"),
        py::arg("p2"), py::arg("q2"), py::arg("P"), py::arg("Q"));
  m.def("closure_ok", &closure_ok, py::arg("p1"), py::arg("q1"),
        py::arg("p2"), py::arg("q2"), py::arg("k"));
  m.def("generator_check", &generator_check, py::arg("record"),
        py::arg("generator"));
  m.def("product_check", &product_check, py::arg("record1"),
        py::arg("record2"), py::arg("generator"), py::arg("k"),
        py::arg("k0"));
  m.def("unit_check", &unit_check, py::arg("records"));
  m.def("inverse_check", &inverse_check, py::arg("record"),
        py::arg("swapped"));
  m.def("factorization_check", &factorization_check, py::arg("ladder"),
        py::arg("record"), py::arg("generator"));
  m.def("unit_separation_ratio", &unit_separation_ratio, py::arg("a"),
        py::arg("b"), py::arg("c") = kDefaultC);

  // --- lab pipeline ------------------------------------------------------
  py::class_<LabConfig>(m, "LabConfig")
      .def(py::init<>())
      .def_readwrite("T_grid", &LabConfig::T_grid)
      .def_readwrite("k", &LabConfig::k)
      .def_readwrite("k0", &LabConfig::k0)
      .def_readwrite("tol_quad", &LabConfig::tol_quad)
      .def_readwrite("tol_ladder", &LabConfig::tol_ladder)
      .def_readwrite("n_base", &LabConfig::n_base)
      .def_readwrite("seed", &LabConfig::seed)
      .def_readwrite("cache_dir", &LabConfig::cache_dir)
      .def("validate", &LabConfig::validate)
      .def("build_hash", &LabConfig::build_hash);
  py::class_<ReportRow>(m, "ReportRow")
      .def_readonly("suite", &ReportRow::suite)
      .def_readonly("law", &ReportRow::law)
      .def_readonly("p", &ReportRow::p)
      .def_readonly("q", &ReportRow::q)
      .def_readonly("P", &ReportRow::P)
      .def_readonly("Q", &ReportRow::Q)
      .def_readonly("T", &ReportRow::T)
      .def_readonly("value", &ReportRow::value)
      .def_readonly("predicted", &ReportRow::predicted)
      .def_readonly("ratio", &ReportRow::ratio)
      .def_readonly("residual", &ReportRow::residual)
      .def_readonly("pass_", &ReportRow::pass)
      .def_readonly("exact", &ReportRow::exact);
  py::class_<RunReport>(m, "RunReport")
      .def_readonly("rows", &RunReport::rows)
      .def_readonly("exact_pass", &RunReport::exact_pass)
      .def_readonly("bands_pass", &RunReport::bands_pass)
      .def("to_jsonl", &RunReport::to_jsonl);
  m.def("load_or_build",
        [](const LabConfig& config, double T) {
          return load_or_build(config, T);
        },
        py::arg("config"), py::arg("T"));
  m.def("cmd_build", &cmd_build, py::arg("config"));
  m.def("cmd_verify", &cmd_verify, py::arg("config"));
  m.def("render_report", &render_report, py::arg("report"),
        py::arg("format"));
}
