#include "catotoc/maps.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

namespace catotoc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double mod1(double x) { return x - std::floor(x); }

// Floor modulus for signed integers: result in [0, m).
long long mod_floor(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

long long det2(const Eigen::Matrix2i& m) {
  return static_cast<long long>(m(0, 0)) * m(1, 1) -
         static_cast<long long>(m(0, 1)) * m(1, 0);
}

}  // namespace

CatMapSpec make_cat_map(const Eigen::Matrix2i& m, double k) {
  if (det2(m) != 1) {
    throw unsupported_map_error("make_cat_map: det M must be 1, got " +
                                std::to_string(det2(m)));
  }
  if (m(0, 1) == 0) {
    throw unsupported_map_error("make_cat_map: M12 must be nonzero");
  }
  return CatMapSpec{m, k};
}

CatMapSpec hyperbolic_map(double k) {
  Eigen::Matrix2i m;
  m << 2, 1, 3, 2;
  return CatMapSpec{m, k};
}

CatMapSpec elliptic_map(double k) {
  Eigen::Matrix2i m;
  m << 0, 1, -1, 0;
  return CatMapSpec{m, k};
}

ClassicalState classical_step(const CatMapSpec& map, const ClassicalState& s) {
  const double p_kicked = s.p - (map.k / kTwoPi) * std::sin(kTwoPi * s.q);
  const auto& m = map.m;
  return ClassicalState{mod1(m(0, 0) * s.q + m(0, 1) * p_kicked),
                        mod1(m(1, 0) * s.q + m(1, 1) * p_kicked)};
}

ClassicalState2 classical_coupled_step(const CoupledMapSpec& maps, const ClassicalState2& s) {
  // Coupling kick on the sum coordinate, applied to both momenta, plus each
  // map's own kick; the linear parts act afterwards.
  const double kick = -(maps.kc / kTwoPi) * std::sin(kTwoPi * (s.dof1.q + s.dof2.q));
  ClassicalState2 kicked = s;
  kicked.dof1.p += kick - (maps.map1.k / kTwoPi) * std::sin(kTwoPi * s.dof1.q);
  kicked.dof2.p += kick - (maps.map2.k / kTwoPi) * std::sin(kTwoPi * s.dof2.q);
  const auto& m1 = maps.map1.m;
  const auto& m2 = maps.map2.m;
  ClassicalState2 out;
  out.dof1 = ClassicalState{mod1(m1(0, 0) * kicked.dof1.q + m1(0, 1) * kicked.dof1.p),
                            mod1(m1(1, 0) * kicked.dof1.q + m1(1, 1) * kicked.dof1.p)};
  out.dof2 = ClassicalState{mod1(m2(0, 0) * kicked.dof2.q + m2(0, 1) * kicked.dof2.p),
                            mod1(m2(1, 0) * kicked.dof2.q + m2(1, 1) * kicked.dof2.p)};
  return out;
}

Propagator1D quantum_propagator_1d(const CatMapSpec& map, const TorusSpace& space) {
  const auto& m = map.m;
  if (det2(m) != 1) {
    throw unsupported_map_error("quantum_propagator_1d: det M must be 1");
  }
  const long long m12 = m(0, 1);
  if (m12 == 0) {
    throw unsupported_map_error(
        "quantum_propagator_1d: M12 = 0 has no quadratic generating function");
  }
  const int n = space.n;
  const long long m11 = m(0, 0);
  const long long m22 = m(1, 1);
  // A = (1/(i N M12))^{1/2}, principal square root.
  const std::complex<double> a =
      std::sqrt(1.0 / std::complex<double>(0.0, static_cast<double>(n * m12)));
  const long long period = 2 * n * std::llabs(m12);  // phase period of the quadratic form

  Eigen::MatrixXcd u(n, n);
  for (int j = 0; j < n; ++j) {
    // Kick phase F_j = (K N / 2 pi) cos(2 pi j / N), diagonal in position.
    const double fj = map.k * n / kTwoPi * std::cos(kTwoPi * j / n);
    for (int k = 0; k < n; ++k) {
      const long long quad =
          m11 * j * j - 2LL * j * k + m22 * k * k;
      const double angle =
          kPi * static_cast<double>(mod_floor(quad, period)) / (n * m12) + fj;
      u(j, k) = a * std::polar(1.0, angle);
    }
  }
  return Propagator1D{space, std::move(u)};
}

Eigen::VectorXcd coupling_matrix(const CoupledMapSpec& maps, const BipartiteSpace& space) {
  if (space.first.n != space.second.n) {
    throw dimension_mismatch_error("coupling_matrix: subsystems must share N, got " +
                                   std::to_string(space.first.n) + " and " +
                                   std::to_string(space.second.n));
  }
  const int n = space.first.n;
  Eigen::VectorXcd c(static_cast<Eigen::Index>(n) * n);
  for (int j1 = 0; j1 < n; ++j1) {
    for (int j2 = 0; j2 < n; ++j2) {
      const double angle =
          maps.kc * n / kTwoPi * std::cos(kTwoPi * ((j1 + j2) % n) / n);
      c(static_cast<Eigen::Index>(j1) * n + j2) = std::polar(1.0, angle);
    }
  }
  return c;
}

Propagator2D quantum_propagator_2d(const CoupledMapSpec& maps, const BipartiteSpace& space) {
  if (space.first.n != space.second.n) {
    throw dimension_mismatch_error("quantum_propagator_2d: subsystems must share N");
  }
  const Propagator1D u1 = quantum_propagator_1d(maps.map1, space.first);
  const Propagator1D u2 = quantum_propagator_1d(maps.map2, space.second);
  const Eigen::VectorXcd c = coupling_matrix(maps, space);

  const int n = space.first.n;
  const Eigen::Index dim = static_cast<Eigen::Index>(n) * n;
  Eigen::MatrixXcd u(dim, dim);
  // U = diag(C) (U1 (x) U2) with flat index j = j1 * N + j2.
  for (int j1 = 0; j1 < n; ++j1) {
    for (int j2 = 0; j2 < n; ++j2) {
      const Eigen::Index row = static_cast<Eigen::Index>(j1) * n + j2;
      const std::complex<double> cj = c(row);
      for (int k1 = 0; k1 < n; ++k1) {
        const std::complex<double> left = cj * u1.u(j1, k1);
        for (int k2 = 0; k2 < n; ++k2) {
          u(row, static_cast<Eigen::Index>(k1) * n + k2) = left * u2.u(j2, k2);
        }
      }
    }
  }
  return Propagator2D{space, std::move(u)};
}

Eigen::Vector2d unstable_direction(const Eigen::Matrix2i& m) {
  const long long tr = static_cast<long long>(m(0, 0)) + m(1, 1);
  if (std::llabs(tr) <= 2) {
    throw not_hyperbolic_error("unstable_direction: |tr M| = " +
                               std::to_string(std::llabs(tr)) +
                               " <= 2, map is not hyperbolic");
  }
  const double half_tr = 0.5 * static_cast<double>(tr);
  const double sign = tr > 0 ? 1.0 : -1.0;
  // Eigenvalue with |lambda| > 1 (same sign as the trace).
  const double lambda = half_tr + sign * std::sqrt(half_tr * half_tr - 1.0);
  Eigen::Vector2d v;
  if (m(0, 1) != 0) {
    v << static_cast<double>(m(0, 1)), lambda - m(0, 0);
  } else {
    v << lambda - m(1, 1), static_cast<double>(m(1, 0));
  }
  v.normalize();
  // Deterministic orientation: first nonzero component positive.
  if (v.x() < 0.0 || (v.x() == 0.0 && v.y() < 0.0)) v = -v;
  return v;
}

}  // namespace catotoc
