#include "catotoc/otoc.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <utility>

#include "internal.hpp"

namespace catotoc {

namespace {

constexpr double kPi = std::numbers::pi;

using internal::mod_floor;

// Imaginary parts of quantities that are real in exact arithmetic: reject
// past this threshold, silently truncate below it.
constexpr double kImagReject = 1e-8;

int check_observed_dims(const ReducedDensity& density, const OperatorBasis& basis) {
  if (!(basis.space() == density.space)) {
    throw dimension_mismatch_error(
        "operator basis and reduced density live on different spaces");
  }
  return density.space.n;
}

Eigen::MatrixXcd embed_on_subsystem(const Eigen::MatrixXcd& m, const BipartiteSpace& space,
                                    Subsystem observed) {
  const int n1 = space.first.n;
  const int n2 = space.second.n;
  const int no = observed == Subsystem::first ? n1 : n2;
  if (m.rows() != no || m.cols() != no) {
    throw dimension_mismatch_error("embed_on_subsystem: operator is " +
                                   std::to_string(m.rows()) + "x" +
                                   std::to_string(m.cols()) + " but subsystem has N = " +
                                   std::to_string(no));
  }
  Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(space.dim(), space.dim());
  if (observed == Subsystem::second) {
    for (int i1 = 0; i1 < n1; ++i1) {
      full.block(static_cast<Eigen::Index>(i1) * n2, static_cast<Eigen::Index>(i1) * n2,
                 n2, n2) = m;
    }
  } else {
    for (int i1 = 0; i1 < n1; ++i1) {
      for (int j1 = 0; j1 < n1; ++j1) {
        full.block(static_cast<Eigen::Index>(i1) * n2, static_cast<Eigen::Index>(j1) * n2,
                   n2, n2) = m(i1, j1) * Eigen::MatrixXcd::Identity(n2, n2);
      }
    }
  }
  return full;
}

double real_or_reject(std::complex<double> z, const char* what) {
  if (std::abs(z.imag()) > kImagReject) {
    throw numerical_consistency_error(std::string(what) + ": imaginary part " +
                                      std::to_string(z.imag()) + " exceeds " +
                                      std::to_string(kImagReject));
  }
  return z.real();
}

double otoc_direct_impl(const BasisElement& element, const Propagator2D& prop,
                        const Eigen::MatrixXcd& rho0, int t, Subsystem observed) {
  if (t < 0) throw error("otoc_direct: negative time");
  const Eigen::MatrixXcd full = embed_on_subsystem(element.matrix, prop.space, observed);
  Eigen::MatrixXcd ut = Eigen::MatrixXcd::Identity(prop.u.rows(), prop.u.cols());
  for (int step = 0; step < t; ++step) ut = prop.u * ut;
  const Eigen::MatrixXcd mt = ut.adjoint() * full * ut;
  const std::complex<double> tr = (mt * rho0 * mt.adjoint() * rho0).trace();
  return real_or_reject(tr, "otoc_direct");
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"HH", "HE", "EH", "EE-fixed",
                                                 "EE-offcenter"};
  return names;
}

Scenario make_preset(const std::string& name, int n, BasisKind kind, int t_max) {
  const double k = 0.25;
  const double kc = 0.5;
  CatMapSpec map1;
  CatMapSpec map2;
  double center = 0.5;  // a fixed point of both maps
  if (name == "HH") {
    map1 = hyperbolic_map(k);
    map2 = hyperbolic_map(k);
  } else if (name == "HE") {
    map1 = hyperbolic_map(k);
    map2 = elliptic_map(k);
  } else if (name == "EH") {
    map1 = elliptic_map(k);
    map2 = hyperbolic_map(k);
  } else if (name == "EE-fixed") {
    map1 = elliptic_map(k);
    map2 = elliptic_map(k);
  } else if (name == "EE-offcenter") {
    map1 = elliptic_map(k);
    map2 = elliptic_map(k);
    center = kPi / 4.0;  // a generic (irrational) point instead
  } else {
    throw config_error("unknown preset '" + name + "' (expected HH|HE|EH|EE-fixed|EE-offcenter)");
  }
  Scenario sc;
  sc.name = name;
  sc.coupled = CoupledMapSpec{map1, map2, kc};
  const TorusSpace space = make_space(n);
  sc.space = BipartiteSpace{space, space};
  sc.initial = ClassicalState2{{center, center}, {center, center}};
  sc.observed = Subsystem::second;
  sc.basis_kind = kind;
  sc.t_max = t_max;
  return sc;
}

PureState initial_state(const Scenario& scenario) {
  const PureState psi1 =
      coherent_state(scenario.space.first, scenario.initial.dof1.q, scenario.initial.dof1.p);
  const PureState psi2 =
      coherent_state(scenario.space.second, scenario.initial.dof2.q, scenario.initial.dof2.p);
  return product_state(psi1, psi2);
}

PureState evolve_state(const Propagator2D& prop, const PureState& state, int t) {
  if (t < 0) throw error("evolve_state: negative time");
  if (!state.bipartite() || !(std::get<BipartiteSpace>(state.space) == prop.space)) {
    throw dimension_mismatch_error("evolve_state: state does not live on the propagator space");
  }
  PureState out = state;
  for (int step = 0; step < t; ++step) {
    out.amplitudes = prop.u * out.amplitudes;
  }
  const double norm = out.amplitudes.norm();
  if (std::abs(norm - 1.0) > 1e-10) {
    throw numerical_consistency_error("evolve_state: norm drifted to " +
                                      std::to_string(norm) + " after " +
                                      std::to_string(t) + " steps");
  }
  return out;
}

double otoc_direct(const BasisElement& element, const Propagator2D& prop,
                   const PureState& initial, int t, Subsystem observed) {
  const Eigen::MatrixXcd rho0 = initial.amplitudes * initial.amplitudes.adjoint();
  return otoc_direct_impl(element, prop, rho0, t, observed);
}

double otoc_direct(const BasisElement& element, const Propagator2D& prop,
                   const Eigen::MatrixXcd& rho0, int t, Subsystem observed) {
  return otoc_direct_impl(element, prop, rho0, t, observed);
}

double otoc_fast_pure(const BasisElement& element, const ReducedDensity& density) {
  if (element.matrix.rows() != density.space.n) {
    throw dimension_mismatch_error("otoc_fast_pure: operator/density dimension mismatch");
  }
  // C_M = |Tr[rho_B M]|^2;  Tr[rho M] = sum_ij rho_ij M_ji.
  const std::complex<double> z =
      (density.rho.transpose().array() * element.matrix.array()).sum();
  return std::norm(z);
}

Eigen::VectorXd otoc_all_elements(const ReducedDensity& density, const OperatorBasis& basis) {
  const int n = check_observed_dims(density, basis);
  const Eigen::MatrixXcd& rho = density.rho;
  Eigen::VectorXd values(basis.size());

  switch (basis.kind()) {
    case BasisKind::pauli: {
      // Each Pauli word is a signed permutation: columns i -> rows i ^ flip
      // with phase i^{#Y} (-1)^{popcount(i & pm)}, so each trace is O(N).
      int k = 0;
      while ((1 << k) < n) ++k;
      const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      for (int e = 0; e < basis.size(); ++e) {
        unsigned flip = 0;
        unsigned pm = 0;
        int ny = 0;
        for (int f = 0; f < k; ++f) {
          const int d = (e >> (2 * (k - 1 - f))) & 3;
          const unsigned bit = 1u << (k - 1 - f);
          if (d == 1 || d == 2) flip |= bit;
          if (d == 2 || d == 3) pm |= bit;
          if (d == 2) ++ny;
        }
        std::complex<double> z = 0.0;
        for (int i = 0; i < n; ++i) {
          const double sign = __builtin_popcount(static_cast<unsigned>(i) & pm) % 2 ? -1.0 : 1.0;
          z += sign * rho(i, static_cast<int>(static_cast<unsigned>(i) ^ flip));
        }
        z *= ipow[ny & 3];
        values(e) = std::norm(z) / n;
      }
      break;
    }
    case BasisKind::translation: {
      const auto root = internal::phase_table(n);
      for (int s = 0; s < n; ++s) {
        // d_s(j) = rho_{j+s, j}: the only entries T_(r,s) touches.
        Eigen::VectorXcd d(n);
        for (int j = 0; j < n; ++j) d(j) = rho((j + s) % n, j);
        for (int r = 0; r < n; ++r) {
          std::complex<double> z = 0.0;
          for (int j = 0; j < n; ++j) {
            z += d(j) * root[mod_floor(static_cast<long long>(r) * (2 * j + s), 2 * n)];
          }
          values(static_cast<Eigen::Index>(r) * n + s) = std::norm(z) / n;
        }
      }
      break;
    }
    case BasisKind::reflection: {
      const auto root = internal::phase_table(n);
      for (int b2 = 0; b2 < n; ++b2) {
        Eigen::VectorXcd g(n);
        for (int i = 0; i < n; ++i) g(i) = rho(mod_floor(b2 - i, n), i);
        for (int a2 = 0; a2 < n; ++a2) {
          std::complex<double> z = 0.0;
          for (int i = 0; i < n; ++i) {
            z += g(i) * root[mod_floor(static_cast<long long>(a2) * (b2 - 2 * i), 2 * n)];
          }
          values(static_cast<Eigen::Index>(a2) * n + b2) = std::norm(z) / n;
        }
      }
      break;
    }
    case BasisKind::kirkwood: {
      // Tr[rho K_(i,j)] = (conj(F) rho)_{j i}: the whole table is one GEMM.
      const Eigen::MatrixXcd g = fourier_kernel(density.space).conjugate() * rho;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          values(static_cast<Eigen::Index>(i) * n + j) = std::norm(g(j, i));
        }
      }
      break;
    }
  }
  return values;
}

std::pair<std::vector<OtocSeries>, EntropySeries> otoc_re_series_multi(
    const Scenario& scenario, const std::vector<const OperatorBasis*>& bases) {
  if (scenario.t_max < 0) throw error("otoc_re_series: t_max must be >= 0");
  const Subsystem other =
      scenario.observed == Subsystem::first ? Subsystem::second : Subsystem::first;
  const TorusSpace& observed_space =
      scenario.observed == Subsystem::first ? scenario.space.first : scenario.space.second;
  for (const OperatorBasis* basis : bases) {
    if (!(basis->space() == observed_space)) {
      throw dimension_mismatch_error("otoc_re_series: basis does not live on the observed subsystem");
    }
  }

  const Propagator2D prop = quantum_propagator_2d(scenario.coupled, scenario.space);
  const int steps = scenario.t_max + 1;

  std::vector<OtocSeries> series(bases.size());
  for (std::size_t b = 0; b < bases.size(); ++b) {
    series[b].labels.reserve(bases[b]->size());
    for (int e = 0; e < bases[b]->size(); ++e) series[b].labels.push_back(bases[b]->label(e));
    series[b].values.resize(bases[b]->size(), steps);
  }
  EntropySeries ent;
  ent.s_linear.resize(steps);
  ent.s_renyi2.resize(steps);
  ent.purity.resize(steps);

  PureState psi = initial_state(scenario);
  for (int t = 0; t < steps; ++t) {
    if (t > 0) psi = evolve_state(prop, psi, 1);
    const ReducedDensity rho_obs = reduce(psi, scenario.observed);
    const Entropies e = purity_and_entropies(reduce(psi, other));
    ent.s_linear(t) = e.s_linear;
    ent.s_renyi2(t) = e.s_renyi2;
    ent.purity(t) = e.purity;

    for (std::size_t b = 0; b < bases.size(); ++b) {
      Eigen::VectorXd col = otoc_all_elements(rho_obs, *bases[b]);
      if (col.minCoeff() < -1e-12 || col.maxCoeff() > 1.0 + 1e-12) {
        throw numerical_consistency_error("otoc_re_series: OTOC value outside [0, 1]");
      }
      // The sum rule S_L(t) = 1 - sum_M C_M(t) is the whole point; treat a
      // visible violation as data corruption, not something to report.
      const double residual = std::abs((1.0 - col.sum()) - e.s_linear);
      if (residual > 1e-6) {
        throw numerical_consistency_error(
            "otoc_re_series: entropy/OTOC sum rule violated by " + std::to_string(residual) +
            " at t = " + std::to_string(t));
      }
      series[b].values.col(t) = col;
    }
  }
  return {std::move(series), std::move(ent)};
}

std::pair<OtocSeries, EntropySeries> otoc_re_series(const Scenario& scenario,
                                                    const OperatorBasis& basis) {
  auto [series, ent] = otoc_re_series_multi(scenario, {&basis});
  return {std::move(series.front()), std::move(ent)};
}

std::complex<double> PhaseSpaceRep::chord_at(long long r, long long s) const {
  const int n = static_cast<int>(chord.rows());
  const long long rr = mod_floor(r, n);
  const long long ss = mod_floor(s, n);
  const long long a = (r - rr) / n;
  const long long b = (s - ss) / n;
  // T_(r+N,s) = (-1)^s T_(r,s) and T_(r,s+N) = (-1)^r T_(r,s): peeling the
  // winding numbers (a, b) off (r, s) collects (-1)^{a s~ + a b N + b r~}.
  const long long parity = mod_floor(a * ss + a * b * n + b * rr, 2);
  const std::complex<double> v = chord(static_cast<Eigen::Index>(rr),
                                       static_cast<Eigen::Index>(ss));
  return parity ? -v : v;
}

PhaseSpaceRep chord_representation(const ReducedDensity& density) {
  const int n = density.space.n;
  const Eigen::MatrixXcd& rho = density.rho;
  const auto root = internal::phase_table(n);
  PhaseSpaceRep rep;
  rep.hbar = density.space.hbar;
  rep.chord.resize(n, n);
  for (int s = 0; s < n; ++s) {
    Eigen::VectorXcd d(n);
    for (int j = 0; j < n; ++j) d(j) = rho((j + s) % n, j);
    for (int r = 0; r < n; ++r) {
      std::complex<double> z = 0.0;
      for (int j = 0; j < n; ++j) {
        z += d(j) * root[mod_floor(static_cast<long long>(r) * (2 * j + s), 2 * n)];
      }
      rep.chord(r, s) = z;
    }
  }
  return rep;
}

PhaseSpaceRep wigner_function(const ReducedDensity& density) {
  const int n = density.space.n;
  const Eigen::MatrixXcd& rho = density.rho;
  const auto root = internal::phase_table(n);
  PhaseSpaceRep rep;
  rep.hbar = density.space.hbar;
  rep.wigner.resize(n, n);
  // W_x = 2 pi hbar Tr[R_x rho] = Tr[R_x rho]/N; real because R is Hermitian.
  for (int b2 = 0; b2 < n; ++b2) {
    Eigen::VectorXcd g(n);
    for (int i = 0; i < n; ++i) g(i) = rho(mod_floor(b2 - i, n), i);
    for (int a2 = 0; a2 < n; ++a2) {
      std::complex<double> z = 0.0;
      for (int i = 0; i < n; ++i) {
        z += g(i) * root[mod_floor(static_cast<long long>(a2) * (b2 - 2 * i), 2 * n)];
      }
      rep.wigner(a2, b2) = real_or_reject(z, "wigner_function") / n;
    }
  }
  return rep;
}

}  // namespace catotoc
