#pragma once

#include <Eigen/Dense>

#include "catotoc/errors.hpp"
#include "catotoc/torus.hpp"

namespace catotoc {

// One perturbed cat map: the linear part M (integer entries, det M = 1,
// M12 != 0) composed with the momentum kick p -> p + eps(q),
// eps(q) = -(K/2pi) sin(2 pi q).
struct CatMapSpec {
  Eigen::Matrix2i m = Eigen::Matrix2i::Identity();
  double k = 0.0;
};

CatMapSpec make_cat_map(const Eigen::Matrix2i& m, double k);

// The two maps used throughout: a strongly hyperbolic one (trace 4,
// stretching factor 2 + sqrt(3)) and an elliptic quarter rotation.
CatMapSpec hyperbolic_map(double k);
CatMapSpec elliptic_map(double k);

// Two maps coupled through a kick acting on the sum coordinate:
// kappa(q1, q2) = -(Kc/2pi) sin(2 pi (q1 + q2)), added to both momenta.
struct CoupledMapSpec {
  CatMapSpec map1;
  CatMapSpec map2;
  double kc = 0.0;
};

struct ClassicalState {
  double q = 0.0;
  double p = 0.0;
};

struct ClassicalState2 {
  ClassicalState dof1;
  ClassicalState dof2;
};

// One step of the classical dynamics; kicks are applied to the momenta
// first, then the linear map, then everything is reduced mod 1.
ClassicalState classical_step(const CatMapSpec& map, const ClassicalState& s);
ClassicalState2 classical_coupled_step(const CoupledMapSpec& maps, const ClassicalState2& s);

struct Propagator1D {
  TorusSpace space;
  Eigen::MatrixXcd u;
};

struct Propagator2D {
  BipartiteSpace space;
  Eigen::MatrixXcd u;  // dense N1*N2 x N1*N2; large spaces are caller-managed
};

// Position-basis propagator of one perturbed cat map,
//   U_jk = A exp[ i pi / (N M12) (M11 j^2 - 2 j k + M22 k^2) ] exp[F_j],
//   A = (1/(i N M12))^{1/2},  F_j = i (K N / 2 pi) cos(2 pi j / N),
// unitary for |M12| = 1 (the only case the shipped maps use).
Propagator1D quantum_propagator_1d(const CatMapSpec& map, const TorusSpace& space);

// Diagonal coupling phases C(j1, j2) = exp[i (N Kc / 2 pi) cos(2 pi (j1 + j2)/N)],
// returned as a flat vector over j = j1 * N + j2.  Requires N1 == N2.
Eigen::VectorXcd coupling_matrix(const CoupledMapSpec& maps, const BipartiteSpace& space);

// Full coupled propagator U = diag(C) (U1 (x) U2).
Propagator2D quantum_propagator_2d(const CoupledMapSpec& maps, const BipartiteSpace& space);

// Unit eigenvector of M for the eigenvalue with |lambda| > 1, oriented so the
// first nonzero component is positive.  Throws not_hyperbolic_error when
// |tr M| <= 2.
Eigen::Vector2d unstable_direction(const Eigen::Matrix2i& m);

}  // namespace catotoc
