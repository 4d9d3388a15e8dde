#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "catotoc/errors.hpp"
#include "catotoc/torus.hpp"

namespace catotoc {

// The four complete operator bases the OTOC machinery can sum over.
enum class BasisKind { pauli, translation, reflection, kirkwood };

std::string to_string(BasisKind kind);
BasisKind basis_kind_from_string(const std::string& name);

// Base-4 word over {I, X, Y, Z}, factor 0 acting on the most significant
// qubit of the flat index.
struct PauliString {
  std::vector<std::uint8_t> digits;
};

// Torus translation T_(r,s): r momentum steps, s position steps.
struct Chord {
  int r = 0;
  int s = 0;
};

// Reflection center (a, b) with a, b in {0, 1/2, 1, ...}; stored as the
// twice-integer indices (2a, 2b) so labels stay exact.
struct Center {
  int a2 = 0;
  int b2 = 0;
};

// Kirkwood dyad |q_i><p_j| index pair.
struct KirkwoodIdx {
  int i = 0;
  int j = 0;
};

using BasisLabel = std::variant<PauliString, Chord, Center, KirkwoodIdx>;

std::string label_to_string(const BasisLabel& label);

// One basis element, normalized to unit Hilbert-Schmidt norm.  raw_norm is
// the scalar the conventional (unnormalized) operator was divided by.
struct BasisElement {
  BasisLabel label;
  Eigen::MatrixXcd matrix;
  double raw_norm = 1.0;
};

// A complete operator basis over a torus space.  Elements are materialized
// on demand (N^2 dense N x N matrices would often be an absurd amount of
// memory); repeated materializations are bit-identical.
class OperatorBasis {
 public:
  OperatorBasis(BasisKind kind, const TorusSpace& space);

  BasisKind kind() const { return kind_; }
  const TorusSpace& space() const { return space_; }
  int size() const { return size_; }
  double raw_norm() const { return raw_norm_; }

  BasisLabel label(int index) const;
  BasisElement element(int index) const;

  // The conventional operator before Hilbert-Schmidt normalization
  // (unitary for Pauli/translation/reflection, a dyad for Kirkwood).
  Eigen::MatrixXcd raw_matrix(int index) const;

 private:
  BasisKind kind_;
  TorusSpace space_;
  int size_ = 0;
  double raw_norm_ = 1.0;
  Eigen::MatrixXcd fourier_;  // cached kernel, Kirkwood only
};

OperatorBasis pauli_basis(const TorusSpace& space);
OperatorBasis translation_basis(const TorusSpace& space);
OperatorBasis reflection_basis(const TorusSpace& space);
OperatorBasis kirkwood_basis(const TorusSpace& space);

// Max-norm completeness residual || S^dagger S - I ||_max, where row e of S
// is the vectorized element e.  Zero (to roundoff) iff the family is a
// complete orthonormal operator basis.
double completeness_check(const OperatorBasis& basis);

}  // namespace catotoc
