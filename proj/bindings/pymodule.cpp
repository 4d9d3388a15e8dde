#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "catotoc/relevance.hpp"

namespace py = pybind11;
using namespace catotoc;

namespace {

CatMapSpec map_by_name(const std::string& name, double k) {
  if (name == "hyperbolic") return hyperbolic_map(k);
  if (name == "elliptic") return elliptic_map(k);
  throw config_error("unknown map '" + name + "' (expected hyperbolic|elliptic)");
}

Scenario scenario_of(const std::string& preset, int n, const std::string& basis, int t_max) {
  return make_preset(preset, n, basis_kind_from_string(basis), t_max);
}

OperatorBasis basis_of(const Scenario& sc) {
  const TorusSpace& space =
      sc.observed == Subsystem::first ? sc.space.first : sc.space.second;
  return OperatorBasis(sc.basis_kind, space);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quantized coupled cat maps: OTOC series, entropies, and operator relevance";

  m.def("preset_names", [] { return preset_names(); },
        "Names of the shipped map/state presets");

  m.def("hbar", [](int n) { return make_space(n).hbar; }, py::arg("n"),
        "Effective Planck constant 1/(2 pi N)");

  m.def("fourier_kernel", [](int n) { return fourier_kernel(make_space(n)); }, py::arg("n"),
        "Discrete Fourier kernel; columns are the momentum eigenstates");

  m.def(
      "coherent_state",
      [](int n, double q, double p) { return coherent_state(make_space(n), q, p).amplitudes; },
      py::arg("n"), py::arg("q"), py::arg("p"),
      "Normalized periodized Gaussian centered at (q, p)");

  m.def(
      "propagator_1d",
      [](const std::string& map, double k, int n) {
        return quantum_propagator_1d(map_by_name(map, k), make_space(n)).u;
      },
      py::arg("map"), py::arg("k"), py::arg("n"),
      "One-step unitary of a single perturbed cat map");

  m.def(
      "classical_orbit",
      [](const std::string& map, double k, double q, double p, int steps) {
        const CatMapSpec spec = map_by_name(map, k);
        Eigen::MatrixXd orbit(steps + 1, 2);
        ClassicalState state{q, p};
        orbit(0, 0) = state.q;
        orbit(0, 1) = state.p;
        for (int t = 1; t <= steps; ++t) {
          state = classical_step(spec, state);
          orbit(t, 0) = state.q;
          orbit(t, 1) = state.p;
        }
        return orbit;
      },
      py::arg("map"), py::arg("k"), py::arg("q"), py::arg("p"), py::arg("steps"),
      "(steps+1) x 2 array of a classical trajectory, coordinates mod 1");

  m.def(
      "unstable_direction",
      [](double k) { return unstable_direction(hyperbolic_map(k).m); }, py::arg("k") = 0.25,
      "Unit vector along the unstable eigendirection of the hyperbolic map");

  m.def(
      "basis_labels",
      [](const std::string& kind, int n) {
        const OperatorBasis basis(basis_kind_from_string(kind), make_space(n));
        std::vector<std::string> labels;
        labels.reserve(basis.size());
        for (int e = 0; e < basis.size(); ++e) labels.push_back(label_to_string(basis.label(e)));
        return labels;
      },
      py::arg("kind"), py::arg("n"), "String labels of a complete operator basis");

  m.def(
      "otoc_re_series",
      [](const std::string& preset, int n, const std::string& basis, int t_max) {
        const Scenario sc = scenario_of(preset, n, basis, t_max);
        const OperatorBasis b = basis_of(sc);
        const auto [series, ent] = otoc_re_series(sc, b);
        std::vector<std::string> labels;
        labels.reserve(series.labels.size());
        for (const BasisLabel& label : series.labels) labels.push_back(label_to_string(label));
        py::dict out;
        out["labels"] = std::move(labels);
        out["values"] = series.values;
        out["s_linear"] = ent.s_linear;
        out["s_renyi2"] = ent.s_renyi2;
        out["purity"] = ent.purity;
        return out;
      },
      py::arg("preset"), py::arg("n"), py::arg("basis"), py::arg("t_max"),
      "OTOC series C_M(t) for every basis element plus the entropy series; "
      "1 - values.sum(axis=0) equals s_linear");

  m.def(
      "counts_vs_t0",
      [](const std::string& preset, int n, const std::string& basis, int t_max,
         const std::vector<int>& t0, double fraction) {
        const Scenario sc = scenario_of(preset, n, basis, t_max);
        const OperatorBasis b = basis_of(sc);
        return counts_vs_t0(sc, b, t0, fraction);
      },
      py::arg("preset"), py::arg("n"), py::arg("basis"), py::arg("t_max"), py::arg("t0"),
      py::arg("fraction") = 0.8,
      "(t0, n_relevant) pairs: how many ranked operators cover the entropy area");

  m.def(
      "relevance_footprint",
      [](const std::string& preset, int n, const std::string& basis, int t_max, int t0,
         double fraction) {
        const Scenario sc = scenario_of(preset, n, basis, t_max);
        const OperatorBasis b = basis_of(sc);
        const std::vector<RelevanceReport> reports = relevance_reports(sc, b, {t0}, fraction);
        const CatMapSpec& observed_map =
            sc.observed == Subsystem::first ? sc.coupled.map1 : sc.coupled.map2;
        const FootprintMap fp = footprint(reports.front(), b, observed_map);
        Eigen::MatrixXd points(fp.points.size(), 3);
        for (std::size_t i = 0; i < fp.points.size(); ++i) {
          points(static_cast<Eigen::Index>(i), 0) = fp.points[i].coord1;
          points(static_cast<Eigen::Index>(i), 1) = fp.points[i].coord2;
          points(static_cast<Eigen::Index>(i), 2) = fp.points[i].rank;
        }
        py::dict out;
        out["points"] = points;
        out["deployed"] = fp.deployed;
        out["overlay_anchor"] = fp.overlay_anchor;
        if (fp.overlay_direction) {
          out["overlay_direction"] = *fp.overlay_direction;
        } else {
          out["overlay_direction"] = py::none();
        }
        return out;
      },
      py::arg("preset"), py::arg("n"), py::arg("basis"), py::arg("t_max"), py::arg("t0"),
      py::arg("fraction") = 0.8,
      "Phase-space coordinates of the relevant operators at window t0");

  py::register_exception<config_error>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<numerical_consistency_error>(m, "NumericalConsistencyError",
                                                      PyExc_RuntimeError);
}
