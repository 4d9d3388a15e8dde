#include "catotoc/bases.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "internal.hpp"

namespace catotoc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

using internal::mod_floor;

// Number of qubits if n = 2^k, otherwise -1.
int qubit_count(int n) {
  int k = 0;
  int m = n;
  while (m > 1 && m % 2 == 0) {
    m /= 2;
    ++k;
  }
  return m == 1 ? k : -1;
}

Eigen::Matrix2cd sigma(int digit) {
  const std::complex<double> im(0.0, 1.0);
  Eigen::Matrix2cd s;
  switch (digit) {
    case 0: s << 1, 0, 0, 1; break;
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -im, im, 0; break;
    default: s << 1, 0, 0, -1; break;
  }
  return s;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace

std::string to_string(BasisKind kind) {
  switch (kind) {
    case BasisKind::pauli: return "pauli";
    case BasisKind::translation: return "translation";
    case BasisKind::reflection: return "reflection";
    case BasisKind::kirkwood: return "kirkwood";
  }
  return "unknown";
}

BasisKind basis_kind_from_string(const std::string& name) {
  if (name == "pauli") return BasisKind::pauli;
  if (name == "translation") return BasisKind::translation;
  if (name == "reflection") return BasisKind::reflection;
  if (name == "kirkwood") return BasisKind::kirkwood;
  throw config_error("unknown basis kind '" + name +
                     "' (expected pauli|translation|reflection|kirkwood)");
}

std::string label_to_string(const BasisLabel& label) {
  if (const auto* p = std::get_if<PauliString>(&label)) {
    static const char letters[] = {'I', 'X', 'Y', 'Z'};
    std::string out = "P:";
    for (std::uint8_t d : p->digits) out += letters[d & 3];
    return out;
  }
  if (const auto* c = std::get_if<Chord>(&label)) {
    return "T:" + std::to_string(c->r) + ":" + std::to_string(c->s);
  }
  if (const auto* x = std::get_if<Center>(&label)) {
    auto half = [](int twice) {
      std::string s = std::to_string(twice / 2);
      if (twice % 2 != 0) s += ".5";
      return s;
    };
    return "R:" + half(x->a2) + ":" + half(x->b2);
  }
  const auto& k = std::get<KirkwoodIdx>(label);
  return "K:" + std::to_string(k.i) + ":" + std::to_string(k.j);
}

OperatorBasis::OperatorBasis(BasisKind kind, const TorusSpace& space)
    : kind_(kind), space_(space) {
  const int n = space.n;
  if (n < 2) {
    throw invalid_dimension_error("OperatorBasis: N must be at least 2");
  }
  if (kind == BasisKind::pauli && qubit_count(n) < 0) {
    throw basis_unavailable_error("pauli basis needs N = 2^k, got N = " +
                                  std::to_string(n));
  }
  size_ = n * n;
  raw_norm_ = kind == BasisKind::kirkwood ? 1.0 : std::sqrt(static_cast<double>(n));
  if (kind == BasisKind::kirkwood) {
    fourier_ = fourier_kernel(space);
  }
}

BasisLabel OperatorBasis::label(int index) const {
  if (index < 0 || index >= size_) {
    throw std::out_of_range("OperatorBasis::label: index " + std::to_string(index));
  }
  const int n = space_.n;
  switch (kind_) {
    case BasisKind::pauli: {
      const int k = qubit_count(n);
      PauliString p;
      p.digits.resize(k);
      for (int t = 0; t < k; ++t) {
        p.digits[t] = static_cast<std::uint8_t>((index >> (2 * (k - 1 - t))) & 3);
      }
      return p;
    }
    case BasisKind::translation:
      return Chord{index / n, index % n};
    case BasisKind::reflection:
      return Center{index / n, index % n};
    case BasisKind::kirkwood:
      return KirkwoodIdx{index / n, index % n};
  }
  throw error("OperatorBasis::label: bad kind");
}

Eigen::MatrixXcd OperatorBasis::raw_matrix(int index) const {
  const BasisLabel lab = label(index);
  const int n = space_.n;
  const double base = kTwoPi / n;

  if (const auto* p = std::get_if<PauliString>(&lab)) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Ones(1, 1);
    for (std::uint8_t d : p->digits) m = kron(m, sigma(d));
    return m;
  }

  if (const auto* c = std::get_if<Chord>(&lab)) {
    // <q_i| T_(r,s) |q_j> = e^{i 2pi/N r (i+j)/2} delta^(N)_{j, i+s}
    //                       e^{-i 2pi/N (r/2) (j-i-s)}
    // (chi_q = chi_p = 0).  On the support the two phases collapse to
    // exp(i pi r (2i+s)/N) regardless of the wrap.
    Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      const long long j = mod_floor(i + c->s, n);
      const double angle = base * c->r * 0.5 * (i + j) -
                           base * 0.5 * c->r * (j - i - c->s);
      t(i, j) = std::polar(1.0, angle);
    }
    return t;
  }

  if (const auto* x = std::get_if<Center>(&lab)) {
    // <q_i| R_(a,b) |q_j> = e^{i 2pi/N (j-i) a} delta^(N)_{j, 2b-i}
    //                       e^{i 2pi/N a (2b-i-j)},
    // a = a2/2, 2b = b2.  Collapses to exp(i pi a2 (b2 - 2i)/N); the matrix
    // is exactly Hermitian and squares to the identity.
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(n, n);
    const double a = 0.5 * x->a2;
    for (int i = 0; i < n; ++i) {
      const long long j = mod_floor(x->b2 - i, n);
      const double angle = base * (j - i) * a + base * a * (x->b2 - i - j);
      r(i, j) = std::polar(1.0, angle);
    }
    return r;
  }

  const auto& kw = std::get<KirkwoodIdx>(lab);
  // |q_i><p_j| : row i carries the conjugate of Fourier row j.
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  m.row(kw.i) = fourier_.row(kw.j).conjugate();
  return m;
}

BasisElement OperatorBasis::element(int index) const {
  BasisElement el;
  el.label = label(index);
  el.matrix = raw_matrix(index) / raw_norm_;
  el.raw_norm = raw_norm_;
  return el;
}

OperatorBasis pauli_basis(const TorusSpace& space) {
  return OperatorBasis(BasisKind::pauli, space);
}
OperatorBasis translation_basis(const TorusSpace& space) {
  return OperatorBasis(BasisKind::translation, space);
}
OperatorBasis reflection_basis(const TorusSpace& space) {
  return OperatorBasis(BasisKind::reflection, space);
}
OperatorBasis kirkwood_basis(const TorusSpace& space) {
  return OperatorBasis(BasisKind::kirkwood, space);
}

double completeness_check(const OperatorBasis& basis) {
  const int n = basis.space().n;
  const Eigen::Index d2 = static_cast<Eigen::Index>(n) * n;
  Eigen::MatrixXcd s(basis.size(), d2);
  for (int e = 0; e < basis.size(); ++e) {
    s.row(e) = basis.element(e).matrix.reshaped().transpose();
  }
  const Eigen::MatrixXcd gram = s.adjoint() * s;
  return (gram - Eigen::MatrixXcd::Identity(d2, d2)).cwiseAbs().maxCoeff();
}

}  // namespace catotoc
