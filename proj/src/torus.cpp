#include "catotoc/torus.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace catotoc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

TorusSpace make_space(int n) {
  if (n < 2) {
    throw invalid_dimension_error("make_space: N must be at least 2, got " +
                                  std::to_string(n));
  }
  TorusSpace space;
  space.n = n;
  space.hbar = 1.0 / (kTwoPi * static_cast<double>(n));
  return space;
}

int periodic_delta(long long i, long long j, int n) {
  return (i - j) % n == 0 ? 1 : 0;
}

Eigen::MatrixXcd fourier_kernel(const TorusSpace& space) {
  const int n = space.n;
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  Eigen::MatrixXcd f(n, n);
  for (int m = 0; m < n; ++m) {
    for (int k = 0; k < n; ++k) {
      // m*k mod N keeps the phase argument small and exact.
      const long long mk = (static_cast<long long>(m) * k) % n;
      f(m, k) = std::polar(scale, kTwoPi * static_cast<double>(mk) / n);
    }
  }
  return f;
}

PureState make_pure_state(StateSpace space, Eigen::VectorXcd amplitudes) {
  const int dim = std::holds_alternative<TorusSpace>(space)
                      ? std::get<TorusSpace>(space).n
                      : std::get<BipartiteSpace>(space).dim();
  if (amplitudes.size() != dim) {
    throw dimension_mismatch_error(
        "make_pure_state: " + std::to_string(amplitudes.size()) +
        " amplitudes on a dimension-" + std::to_string(dim) + " space");
  }
  const double norm = amplitudes.norm();
  if (std::abs(norm - 1.0) > 1e-9) {
    throw numerical_consistency_error("make_pure_state: state norm " +
                                      std::to_string(norm) + " is not 1");
  }
  return PureState{std::move(space), std::move(amplitudes)};
}

PureState coherent_state(const TorusSpace& space, double q0, double p0) {
  const int n = space.n;
  Eigen::VectorXcd amp(n);
  for (int i = 0; i < n; ++i) {
    std::complex<double> v = 0.0;
    // Sum over winding images; the Gaussian has width ~1/sqrt(N), so
    // |k| <= 3 is already far below double precision for every N >= 2.
    for (int k = -3; k <= 3; ++k) {
      const double x = static_cast<double>(i) / n - q0 - k;
      v += std::exp(std::complex<double>(-kPi * n * x * x, kTwoPi * n * p0 * x));
    }
    amp(i) = v;
  }
  amp /= amp.norm();
  return PureState{space, std::move(amp)};
}

PureState product_state(const PureState& psi1, const PureState& psi2) {
  if (psi1.bipartite() || psi2.bipartite()) {
    throw dimension_mismatch_error("product_state: factors must be single-torus states");
  }
  const TorusSpace& s1 = std::get<TorusSpace>(psi1.space);
  const TorusSpace& s2 = std::get<TorusSpace>(psi2.space);
  Eigen::VectorXcd amp(s1.n * s2.n);
  for (int j1 = 0; j1 < s1.n; ++j1) {
    for (int j2 = 0; j2 < s2.n; ++j2) {
      amp(static_cast<Eigen::Index>(j1) * s2.n + j2) =
          psi1.amplitudes(j1) * psi2.amplitudes(j2);
    }
  }
  return PureState{BipartiteSpace{s1, s2}, std::move(amp)};
}

ReducedDensity make_reduced_density(TorusSpace space, Eigen::MatrixXcd rho) {
  const int n = space.n;
  if (rho.rows() != n || rho.cols() != n) {
    throw dimension_mismatch_error("make_reduced_density: matrix is " +
                                   std::to_string(rho.rows()) + "x" +
                                   std::to_string(rho.cols()) + " on N = " +
                                   std::to_string(n));
  }
  const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-12) {
    throw numerical_consistency_error(
        "make_reduced_density: Hermiticity defect " + std::to_string(herm));
  }
  const std::complex<double> tr = rho.trace();
  if (std::abs(tr - 1.0) > 1e-12) {
    throw numerical_consistency_error("make_reduced_density: trace is off by " +
                                      std::to_string(std::abs(tr - 1.0)));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10) {
    throw numerical_consistency_error(
        "make_reduced_density: negative eigenvalue " +
        std::to_string(es.eigenvalues().minCoeff()));
  }
  return ReducedDensity{space, std::move(rho)};
}

ReducedDensity reduce(const PureState& state, Subsystem keep) {
  if (!state.bipartite()) {
    throw dimension_mismatch_error("reduce: state is not bipartite");
  }
  const BipartiteSpace& bp = std::get<BipartiteSpace>(state.space);
  const int n1 = bp.first.n;
  const int n2 = bp.second.n;
  // Flat index j = j1 * N2 + j2, so the amplitudes are the row-major matrix
  // Psi(j1, j2).
  Eigen::Map<const Eigen::Matrix<std::complex<double>, Eigen::Dynamic,
                                 Eigen::Dynamic, Eigen::RowMajor>>
      psi(state.amplitudes.data(), n1, n2);
  Eigen::MatrixXcd rho;
  TorusSpace space;
  if (keep == Subsystem::first) {
    rho = psi * psi.adjoint();  // (rho_1)_{a a'} = sum_b Psi_{ab} conj(Psi_{a'b})
    space = bp.first;
  } else {
    // (rho_2)_{b b'} = sum_a Psi_{ab} conj(Psi_{a b'}) = conj(Psi^dagger Psi)
    rho = (psi.adjoint() * psi).conjugate();
    space = bp.second;
  }
  return ReducedDensity{space, std::move(rho)};
}

Entropies purity_and_entropies(const ReducedDensity& density) {
  const Eigen::MatrixXcd& rho = density.rho;
  // Tr[rho^2] without forming the product: sum_ij rho_ij rho_ji.
  const std::complex<double> tr2 =
      (rho.array() * rho.transpose().array()).sum();
  if (std::abs(tr2.imag()) > 1e-12) {
    throw numerical_consistency_error("purity_and_entropies: Tr[rho^2] has imaginary part " +
                                      std::to_string(tr2.imag()));
  }
  const double purity = tr2.real();
  if (purity <= 0.0 || purity > 1.0 + 1e-10) {
    throw numerical_consistency_error("purity_and_entropies: purity " +
                                      std::to_string(purity) + " outside (0, 1]");
  }
  Entropies out;
  out.purity = purity;
  out.s_linear = 1.0 - purity;
  out.s_renyi2 = -std::log(purity);
  return out;
}

}  // namespace catotoc
