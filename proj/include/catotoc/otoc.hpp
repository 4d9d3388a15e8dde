#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "catotoc/bases.hpp"
#include "catotoc/maps.hpp"
#include "catotoc/torus.hpp"

namespace catotoc {

// Everything needed to run one experiment: the coupled map, the product
// space, coherent-state centers for both subsystems, which subsystem the
// basis operators act on, and the time horizon (integer kicks t = 0..t_max).
struct Scenario {
  std::string name = "custom";
  CoupledMapSpec coupled;
  BipartiteSpace space;
  ClassicalState2 initial;
  Subsystem observed = Subsystem::second;
  BasisKind basis_kind = BasisKind::translation;
  int t_max = 40;
};

// Named presets: HH, HE, EH, EE-fixed, EE-offcenter.  All use K = 0.25,
// Kc = 0.5 and observe subsystem 2; the EE variants differ only in the
// coherent-state centers (fixed point vs a generic orbit point).
Scenario make_preset(const std::string& name, int n, BasisKind kind, int t_max);
const std::vector<std::string>& preset_names();

// OTOCs C_M(t) for every basis element M, element-major [size x t_max+1].
struct OtocSeries {
  std::vector<BasisLabel> labels;
  Eigen::MatrixXd values;

  int t_max() const { return static_cast<int>(values.cols()) - 1; }
};

struct EntropySeries {
  Eigen::VectorXd s_linear;
  Eigen::VectorXd s_renyi2;
  Eigen::VectorXd purity;
};

// Product of the two coherent states of the scenario.
PureState initial_state(const Scenario& scenario);

// |psi(t)> = U^t |psi(0)>; checks norm preservation to 1e-10.
PureState evolve_state(const Propagator2D& prop, const PureState& state, int t);

// Reference OTOC: embeds M on the observed subsystem, Heisenberg-evolves it
// by explicit matrix products M(t) = (U^t)^dagger (I (x) M) U^t, and returns
// Tr[M(t) rho M(t)^dagger rho] with the (tiny) imaginary part discarded.
// Meant as an oracle at small N; cost is O(dim^3) per call.
double otoc_direct(const BasisElement& element, const Propagator2D& prop,
                   const PureState& initial, int t,
                   Subsystem observed = Subsystem::second);
double otoc_direct(const BasisElement& element, const Propagator2D& prop,
                   const Eigen::MatrixXcd& rho0, int t,
                   Subsystem observed = Subsystem::second);

// Fast path for pure global states: C_M(t) = |Tr[rho_B(t) M]|^2.
double otoc_fast_pure(const BasisElement& element, const ReducedDensity& density);

// All C_M at once for a full basis, using the sparsity pattern of each kind;
// exactly the sums otoc_fast_pure evaluates, just batched.
Eigen::VectorXd otoc_all_elements(const ReducedDensity& density, const OperatorBasis& basis);

// The central identity: with a complete basis on the observed subsystem,
//   S_L(t) = 1 - sum_M C_M(t)
// for every t.  Evolves the scenario once and returns both sides; throws
// numerical_consistency_error if the identity degrades past 1e-6 (it should
// hold to ~1e-12; the shipped configurations stay below 1e-9).
std::pair<OtocSeries, EntropySeries> otoc_re_series(const Scenario& scenario,
                                                    const OperatorBasis& basis);

// Same evolution, several bases: the (expensive) propagator and state
// trajectory are shared across all requested bases.
std::pair<std::vector<OtocSeries>, EntropySeries> otoc_re_series_multi(
    const Scenario& scenario, const std::vector<const OperatorBasis*>& bases);

// Chord function rho_xi = Tr[T_(r,s) rho] and Wigner function
// W_x = 2 pi hbar Tr[R_x rho] of a reduced density matrix.
struct PhaseSpaceRep {
  Eigen::MatrixXcd chord;   // (r, s) on the integer grid, row r, column s
  Eigen::MatrixXd wigner;   // (2a, 2b) on the half-integer grid, row 2a
  double hbar = 0.0;

  // Quasi-periodic chord lookup valid for any integers: T_(r+N,s) and
  // T_(r,s+N) equal T_(r,s) up to signs (-1)^s and (-1)^r, so reading the
  // stored grid at (r mod N, s mod N) must reattach that cocycle sign.
  // In particular chord_at(-r, -s) == conj(chord_at(r, s)) exactly.
  std::complex<double> chord_at(long long r, long long s) const;
};

PhaseSpaceRep chord_representation(const ReducedDensity& density);
PhaseSpaceRep wigner_function(const ReducedDensity& density);

}  // namespace catotoc
