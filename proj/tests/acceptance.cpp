// Acceptance gate: one PASS/FAIL line per shipped criterion, exit code equal
// to the number of failures.  Everything here re-derives its inputs from the
// public API; nothing is stubbed or cached between runs.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "catotoc/artifacts.hpp"
#include "catotoc/relevance.hpp"

using namespace catotoc;

namespace {

struct CriterionResult {
  bool pass = false;
  std::string detail;
};

double now_seconds() {
  using clock = std::chrono::steady_clock;
  static const clock::time_point start = clock::now();
  return std::chrono::duration<double>(clock::now() - start).count();
}

void progress(const std::string& what) {
  std::fprintf(stderr, "[%7.1fs] %s\n", now_seconds(), what.c_str());
}

std::string fmt(double v) { return format_double(v); }

// ---------------------------------------------------------------------------
// Shared N = 64 preset data: one evolution per preset, three bases each.

constexpr int kBigN = 64;
constexpr int kTmax = 40;
const std::vector<std::string> kPresets = {"HH", "HE", "EH", "EE-fixed", "EE-offcenter"};
const std::vector<BasisKind> kKinds = {BasisKind::pauli, BasisKind::translation,
                                       BasisKind::reflection};

struct PresetData {
  bool ok = false;
  std::string error;
  std::vector<OtocSeries> series;  // indexed like kKinds
  EntropySeries entropies;
};

PresetData compute_preset(const std::string& name) {
  PresetData data;
  try {
    const Scenario sc = make_preset(name, kBigN, BasisKind::translation, kTmax);
    const TorusSpace& space = sc.space.second;
    const OperatorBasis pauli(BasisKind::pauli, space);
    const OperatorBasis translation(BasisKind::translation, space);
    const OperatorBasis reflection(BasisKind::reflection, space);
    auto [series, entropies] =
        otoc_re_series_multi(sc, {&pauli, &translation, &reflection});
    data.series = std::move(series);
    data.entropies = std::move(entropies);
    data.ok = true;
  } catch (const std::exception& e) {
    data.error = e.what();
  }
  return data;
}

int count_at(const PresetData& data, int kind_idx, int t0) {
  return rank_and_cut(otoc_areas(data.series[kind_idx], t0),
                      entropy_area(data.entropies, t0), 0.8, t0)
      .n_relevant;
}

// ---------------------------------------------------------------------------
// Criterion 1: entropy/OTOC sum rule at production size.

CriterionResult criterion_sum_rule(const std::map<std::string, PresetData>& presets) {
  const std::vector<std::string> required = {"HH", "HE", "EE-fixed", "EE-offcenter"};
  double worst = 0.0;
  std::string worst_at = "-";
  for (const std::string& name : required) {
    const PresetData& data = presets.at(name);
    if (!data.ok) {
      return {false, name + " failed to evaluate: " + data.error};
    }
    for (std::size_t b = 0; b < kKinds.size(); ++b) {
      for (int t = 0; t <= kTmax; ++t) {
        const double sum = data.series[b].values.col(t).sum();
        const double residual = std::abs((1.0 - sum) - data.entropies.s_linear(t));
        if (residual > worst) {
          worst = residual;
          worst_at = name + "/" + to_string(kKinds[b]) + "/t=" + std::to_string(t);
        }
      }
    }
  }
  return {worst < 1e-9, "max |S_L - (1 - sum C_M)| = " + fmt(worst) + " at " + worst_at +
                            " (N=64, t<=40, threshold 1e-9)"};
}

// ---------------------------------------------------------------------------
// Criterion 2: Heisenberg-product oracle vs the pure-state fast path.

CriterionResult criterion_oracle() {
  const int n = 4;
  double worst = 0.0;
  for (BasisKind kind : {BasisKind::pauli, BasisKind::translation}) {
    const Scenario sc = make_preset("HH", n, kind, 5);
    const Propagator2D prop = quantum_propagator_2d(sc.coupled, sc.space);
    const PureState psi0 = initial_state(sc);
    const OperatorBasis basis(kind, sc.space.second);
    for (int t = 0; t <= 5; ++t) {
      const ReducedDensity rho_b = reduce(evolve_state(prop, psi0, t), Subsystem::second);
      for (int e = 0; e < basis.size(); ++e) {
        const BasisElement el = basis.element(e);
        worst = std::max(worst, std::abs(otoc_direct(el, prop, psi0, t) -
                                         otoc_fast_pure(el, rho_b)));
      }
    }
  }
  return {worst < 1e-12, "max |otoc_direct - otoc_fast_pure| = " + fmt(worst) +
                             " (N=4, 16 pauli + 16 translation elements, t<=5, "
                             "threshold 1e-12)"};
}

// ---------------------------------------------------------------------------
// Criterion 3: basis algebra and propagator unitarity.

double gram_defect(const OperatorBasis& basis) {
  const int m = basis.size();
  std::vector<Eigen::MatrixXcd> mats(m);
  for (int e = 0; e < m; ++e) mats[e] = basis.element(e).matrix;
  double worst = 0.0;
  for (int a = 0; a < m; ++a) {
    for (int b = a; b < m; ++b) {
      const std::complex<double> ip = (mats[a].conjugate().array() * mats[b].array()).sum();
      const double target = a == b ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(ip - std::complex<double>(target)));
    }
  }
  return worst;
}

double unitarity_1d(const Propagator1D& prop) {
  const Eigen::MatrixXcd g = prop.u.adjoint() * prop.u;
  return (g - Eigen::MatrixXcd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
}

double unitarity_2d(const Propagator2D& prop) {
  const Eigen::MatrixXcd g = prop.u.adjoint() * prop.u;
  return (g - Eigen::MatrixXcd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
}

CriterionResult criterion_basis_algebra() {
  double worst_complete = 0.0;
  double worst_gram = 0.0;
  // All four label kinds on N = 16; the non-qubit kinds again on odd N = 17.
  for (BasisKind kind : {BasisKind::pauli, BasisKind::translation, BasisKind::reflection,
                         BasisKind::kirkwood}) {
    const OperatorBasis basis(kind, make_space(16));
    worst_complete = std::max(worst_complete, completeness_check(basis));
    worst_gram = std::max(worst_gram, gram_defect(basis));
  }
  for (BasisKind kind : {BasisKind::translation, BasisKind::reflection, BasisKind::kirkwood}) {
    const OperatorBasis basis(kind, make_space(17));
    worst_complete = std::max(worst_complete, completeness_check(basis));
    worst_gram = std::max(worst_gram, gram_defect(basis));
  }
  progress("criterion 3: basis algebra done, starting propagator unitarity");

  double worst_unitary = 0.0;
  for (int n : {16, 64}) {
    const TorusSpace space = make_space(n);
    worst_unitary = std::max(worst_unitary, unitarity_1d(quantum_propagator_1d(
                                                hyperbolic_map(0.25), space)));
    worst_unitary = std::max(worst_unitary, unitarity_1d(quantum_propagator_1d(
                                                elliptic_map(0.25), space)));
  }
  for (const std::string& name : {"HH", "HE", "EH", "EE-fixed"}) {
    const Scenario sc = make_preset(name, 16, BasisKind::translation, 1);
    worst_unitary = std::max(worst_unitary,
                             unitarity_2d(quantum_propagator_2d(sc.coupled, sc.space)));
  }
  {
    // The production-size coupled propagator; the one heavyweight check here.
    const Scenario sc = make_preset("HH", 64, BasisKind::translation, 1);
    progress("criterion 3: N=64 coupled unitarity (one 4096^3 product)");
    worst_unitary = std::max(worst_unitary,
                             unitarity_2d(quantum_propagator_2d(sc.coupled, sc.space)));
  }

  const bool pass = worst_complete < 1e-10 && worst_gram < 1e-10 && worst_unitary < 1e-12;
  return {pass, "completeness " + fmt(worst_complete) + ", gram " + fmt(worst_gram) +
                    " (all kinds, N<=17, threshold 1e-10); unitarity " +
                    fmt(worst_unitary) + " (1D and coupled, N in {16,64}, threshold 1e-12)"};
}

// ---------------------------------------------------------------------------
// Criterion 4: relevant-operator counts against the reference table.

struct CountTarget {
  std::string preset;
  int t0;
  int reference[3];  // pauli, translation, reflection
};

const std::vector<CountTarget> kCountTargets = {
    {"HH", 10, {263, 166, 697}},
    {"HE", 40, {199, 110, 1285}},
    {"EE-fixed", 10, {81, 101, 117}},
    {"EE-offcenter", 30, {413, 103, 1450}},
};

CriterionResult criterion_counts(const std::map<std::string, PresetData>& presets) {
  const int hard_cap = static_cast<int>(0.35 * kBigN * kBigN);  // 1433
  bool pass = true;
  std::string detail;
  for (const CountTarget& target : kCountTargets) {
    const PresetData& data = presets.at(target.preset);
    if (!data.ok) return {false, target.preset + " failed to evaluate: " + data.error};
    detail += target.preset + " t0=" + std::to_string(target.t0) + ":";
    for (std::size_t b = 0; b < kKinds.size(); ++b) {
      const int count = count_at(data, static_cast<int>(b), target.t0);
      const int ref = target.reference[b];
      const bool in_band = std::abs(count - ref) <= 0.25 * ref;
      const bool under_cap = count <= hard_cap;
      if (!in_band || !under_cap) pass = false;
      detail += " " + std::string(to_string(kKinds[b])) + "=" + std::to_string(count) +
                "/ref" + std::to_string(ref) + (in_band ? "" : "(band!)") +
                (under_cap ? "" : "(cap!)");
    }
    detail += "; ";
  }
  detail += "band +-25%, cap " + std::to_string(hard_cap) + " of 4096";
  return {pass, detail};
}

// ---------------------------------------------------------------------------
// Criterion 5: qualitative scaling of the counts with the window.

CriterionResult criterion_scaling(const std::map<std::string, PresetData>& presets) {
  const std::vector<int> grid = {5, 10, 20, 40};
  for (const std::string& name : kPresets) {
    if (!presets.at(name).ok) {
      return {false, name + " failed to evaluate: " + presets.at(name).error};
    }
  }
  bool pass = true;
  std::string detail;

  for (std::size_t b = 0; b < kKinds.size(); ++b) {
    std::vector<int> hh;
    std::vector<int> ee;
    for (int t0 : grid) {
      hh.push_back(count_at(presets.at("HH"), static_cast<int>(b), t0));
      ee.push_back(count_at(presets.at("EE-fixed"), static_cast<int>(b), t0));
    }
    const bool increasing =
        hh[0] < hh[1] && hh[1] < hh[2] && hh[2] < hh[3];
    const double ratio = static_cast<double>(*std::max_element(ee.begin(), ee.end())) /
                         std::max(1, *std::min_element(ee.begin(), ee.end()));
    const int he = count_at(presets.at("HE"), static_cast<int>(b), 40);
    const int eh = count_at(presets.at("EH"), static_cast<int>(b), 40);
    const int lo = std::min(hh[3], ee[3]);
    const int hi = std::max(hh[3], ee[3]);
    const bool between = lo <= he && he <= hi && lo <= eh && eh <= hi;
    if (!increasing || ratio > 1.5 || !between) pass = false;

    detail += std::string(to_string(kKinds[b])) + ": HH " + std::to_string(hh[0]) + "<" +
              std::to_string(hh[1]) + "<" + std::to_string(hh[2]) + "<" +
              std::to_string(hh[3]) + (increasing ? "" : "(!)") + ", EE ratio " +
              fmt(ratio) + (ratio <= 1.5 ? "" : "(!)") + ", HE/EH@40 " +
              std::to_string(he) + "/" + std::to_string(eh) + " in [" + std::to_string(lo) +
              "," + std::to_string(hi) + "]" + (between ? "" : "(!)") + "; ";
  }
  return {pass, detail + "t0 grid {5,10,20,40}"};
}

// ---------------------------------------------------------------------------
// Criterion 6: phase-space identities.

CriterionResult criterion_phase_space() {
  double worst_chord = 0.0;
  double worst_wigner = 0.0;
  {
    const int n = 16;
    const Scenario sc = make_preset("HH", n, BasisKind::translation, 6);
    const Propagator2D prop = quantum_propagator_2d(sc.coupled, sc.space);
    const PureState psi = evolve_state(prop, initial_state(sc), 5);
    const ReducedDensity rho = reduce(psi, Subsystem::second);

    const PhaseSpaceRep chords = chord_representation(rho);
    const Eigen::VectorXd c_t = otoc_all_elements(rho, translation_basis(rho.space));
    for (int r = 0; r < n; ++r) {
      for (int s = 0; s < n; ++s) {
        const std::complex<double> prod =
            chords.chord_at(r, s) * chords.chord_at(-r, -s) / static_cast<double>(n);
        worst_chord = std::max(worst_chord, std::abs(prod.real() - c_t(r * n + s)));
        worst_chord = std::max(worst_chord, std::abs(prod.imag()));
      }
    }

    const PhaseSpaceRep wig = wigner_function(rho);
    const Eigen::VectorXd c_r = otoc_all_elements(rho, reflection_basis(rho.space));
    for (int a2 = 0; a2 < n; ++a2) {
      for (int b2 = 0; b2 < n; ++b2) {
        const double w = wig.wigner(a2, b2);
        worst_wigner = std::max(worst_wigner, std::abs(c_r(a2 * n + b2) - n * w * w));
      }
    }
  }

  double worst_kirkwood = 0.0;
  for (int n : {8, 16}) {
    const Scenario sc = make_preset("HE", n, BasisKind::kirkwood, 6);
    const Propagator2D prop = quantum_propagator_2d(sc.coupled, sc.space);
    const PureState psi = evolve_state(prop, initial_state(sc), 4);
    const ReducedDensity rho = reduce(psi, Subsystem::second);
    const double sum = otoc_all_elements(rho, kirkwood_basis(rho.space)).sum();
    const double purity = purity_and_entropies(rho).purity;
    worst_kirkwood = std::max(worst_kirkwood, std::abs(sum - purity));
  }

  const bool pass = worst_chord < 1e-10 && worst_wigner < 1e-10 && worst_kirkwood < 1e-10;
  return {pass, "chord-product defect " + fmt(worst_chord) + ", wigner-square defect " +
                    fmt(worst_wigner) + " (N=16); kirkwood sum defect " +
                    fmt(worst_kirkwood) + " (N in {8,16}); threshold 1e-10"};
}

// ---------------------------------------------------------------------------
// Criterion 7: relevant chords hug the unstable direction.

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

CriterionResult criterion_footprint(const std::map<std::string, PresetData>& presets) {
  const PresetData& data = presets.at("HH");
  if (!data.ok) return {false, "HH failed to evaluate: " + data.error};
  const int t0 = 10;
  const int trans_idx = 1;  // kKinds order
  const RelevanceReport report =
      rank_and_cut(otoc_areas(data.series[trans_idx], t0),
                   entropy_area(data.entropies, t0), 0.8, t0);

  const Eigen::Vector2d dir = unstable_direction(hyperbolic_map(0.25).m);
  const Eigen::Vector2d anchor(0.0, 0.0);
  auto chord_distance = [&](int element) {
    const int r = element / kBigN;
    const int s = element % kBigN;
    return torus_line_distance(static_cast<double>(s) / kBigN,
                               static_cast<double>(r) / kBigN, anchor, dir);
  };

  std::vector<double> relevant;
  for (int i = 0; i < report.n_relevant; ++i) {
    relevant.push_back(chord_distance(report.ranked[i]));
  }
  std::vector<double> all;
  for (int e = 0; e < kBigN * kBigN; ++e) all.push_back(chord_distance(e));

  const double med_rel = median(relevant);
  const double med_all = median(all);
  return {med_rel < med_all, "HH translation t0=10: median distance to unstable line " +
                                 fmt(med_rel) + " over " + std::to_string(report.n_relevant) +
                                 " relevant chords vs " + fmt(med_all) + " over all 4096"};
}

// ---------------------------------------------------------------------------
// Criterion 8: entanglement growth separates chaotic from regular coupling.

CriterionResult criterion_growth(const std::map<std::string, PresetData>& presets) {
  const PresetData& hh = presets.at("HH");
  const PresetData& ee = presets.at("EE-fixed");
  if (!hh.ok) return {false, "HH failed to evaluate: " + hh.error};
  if (!ee.ok) return {false, "EE-fixed failed to evaluate: " + ee.error};

  const double threshold = 0.9 * (1.0 - 1.0 / kBigN);  // 0.8859375
  const double hh_peak = hh.entropies.s_linear.head(11).maxCoeff();
  const double ee_at_10 = ee.entropies.s_linear(10);
  const bool pass = hh_peak >= threshold && ee_at_10 < 0.2;
  return {pass, "HH max S_L(t<=10) = " + fmt(hh_peak) + " (need >= " + fmt(threshold) +
                    "); EE-fixed S_L(10) = " + fmt(ee_at_10) + " (need < 0.2)"};
}

}  // namespace

int main() {
  std::map<int, CriterionResult> results;

  progress("criterion 2: oracle equivalence at N=4");
  results[2] = criterion_oracle();
  progress("criterion 6: phase-space identities");
  results[6] = criterion_phase_space();
  progress("criterion 3: basis algebra and unitarity");
  results[3] = criterion_basis_algebra();

  std::map<std::string, PresetData> presets;
  for (const std::string& name : kPresets) {
    progress("evolving preset " + name + " at N=64, t_max=40, three bases");
    presets[name] = compute_preset(name);
    if (!presets[name].ok) {
      std::fprintf(stderr, "preset %s failed: %s\n", name.c_str(),
                   presets[name].error.c_str());
    }
  }

  results[1] = criterion_sum_rule(presets);
  results[4] = criterion_counts(presets);
  results[5] = criterion_scaling(presets);
  results[7] = criterion_footprint(presets);
  results[8] = criterion_growth(presets);

  int failures = 0;
  for (const auto& [id, result] : results) {
    std::printf("%s criterion %d: %s\n", result.pass ? "PASS" : "FAIL", id,
                result.detail.c_str());
    if (!result.pass) ++failures;
  }
  std::printf("acceptance: %d/%zu criteria passed\n",
              static_cast<int>(results.size()) - failures, results.size());
  return failures == 0 ? 0 : 1;
}
