#pragma once

#include <complex>
#include <variant>

#include <Eigen/Dense>

#include "catotoc/errors.hpp"

namespace catotoc {

// Hilbert space of a quantized torus: N position states on the grid q = n/N,
// effective Planck constant hbar = 1/(2*pi*N).  Periodicity phases chi_q,
// chi_p select the boundary conditions; we work on the (0, 0) sector
// throughout, but the fields are kept explicit so the basis formulas below
// read like the general case.
struct TorusSpace {
  int n = 0;
  double hbar = 0.0;
  double chi_q = 0.0;
  double chi_p = 0.0;

  friend bool operator==(const TorusSpace&, const TorusSpace&) = default;
};

TorusSpace make_space(int n);

// Tensor product of two torus spaces; the flat index is j = j1 * N2 + j2
// (subsystem 1 is the slow index).
struct BipartiteSpace {
  TorusSpace first;
  TorusSpace second;

  int dim() const { return first.n * second.n; }

  friend bool operator==(const BipartiteSpace&, const BipartiteSpace&) = default;
};

// N-periodic Kronecker delta; accepts any integers, including negatives.
int periodic_delta(long long i, long long j, int n);

// Discrete Fourier kernel F_{mn} = exp(+2*pi*i*m*n/N)/sqrt(N).  Column m is
// the m-th momentum eigenstate written in the position basis.
Eigen::MatrixXcd fourier_kernel(const TorusSpace& space);

using StateSpace = std::variant<TorusSpace, BipartiteSpace>;

// Normalized pure state over either a single torus or a bipartite product.
struct PureState {
  StateSpace space;
  Eigen::VectorXcd amplitudes;

  bool bipartite() const { return std::holds_alternative<BipartiteSpace>(space); }
  int dim() const { return static_cast<int>(amplitudes.size()); }
};

PureState make_pure_state(StateSpace space, Eigen::VectorXcd amplitudes);

// Gaussian coherent state centered at (q0, p0) in [0,1)^2, periodized over
// the winding images k = -3..3 and normalized.  Position variance comes out
// at hbar/2, the minimal-uncertainty value.
PureState coherent_state(const TorusSpace& space, double q0, double p0);

// Product state psi1 (x) psi2 on the bipartite space of the two factors.
PureState product_state(const PureState& psi1, const PureState& psi2);

enum class Subsystem { first, second };

// Reduced density matrix of one subsystem, with the validity checks the rest
// of the library relies on (Hermitian, unit trace, PSD up to roundoff).
struct ReducedDensity {
  TorusSpace space;
  Eigen::MatrixXcd rho;
};

ReducedDensity make_reduced_density(TorusSpace space, Eigen::MatrixXcd rho);

// Partial trace of a bipartite pure state, keeping the requested subsystem.
ReducedDensity reduce(const PureState& state, Subsystem keep);

struct Entropies {
  double purity = 0.0;    // Tr[rho^2]
  double s_linear = 0.0;  // 1 - Tr[rho^2]
  double s_renyi2 = 0.0;  // -log Tr[rho^2]
};

Entropies purity_and_entropies(const ReducedDensity& density);

}  // namespace catotoc
