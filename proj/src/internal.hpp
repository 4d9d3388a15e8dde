#pragma once

#include <complex>
#include <numbers>
#include <vector>

namespace catotoc::internal {

// Floor modulus for signed integers: result in [0, m) for m > 0.
inline long long mod_floor(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

// Table of the 2N-th roots of unity, root[m] = exp(i pi m / N) for
// m = 0..2N-1.  All translation/reflection phases are integer multiples of
// pi/N, so the batched trace paths index this table with exactly reduced
// integer exponents instead of evaluating large trig arguments.
inline std::vector<std::complex<double>> phase_table(int n) {
  std::vector<std::complex<double>> root(2 * static_cast<std::size_t>(n));
  for (int m = 0; m < 2 * n; ++m) {
    root[m] = std::polar(1.0, std::numbers::pi * m / n);
  }
  return root;
}

}  // namespace catotoc::internal
