#pragma once

#include <stdexcept>

namespace catotoc {

// Base class for every error thrown by this library.  Subtypes exist so
// callers (and the CLI exit-code mapping) can tell configuration mistakes
// apart from numerical self-check failures.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Hilbert-space dimension outside the supported range (N < 2, ...).
struct invalid_dimension_error : error {
  using error::error;
};

// Two objects that must live on the same space do not.
struct dimension_mismatch_error : error {
  using error::error;
};

// A map outside the family we can quantize (M12 == 0, det != 1).
struct unsupported_map_error : error {
  using error::error;
};

// An unstable direction was requested for a map with |tr M| <= 2.
struct not_hyperbolic_error : error {
  using error::error;
};

// Basis kind not constructible at this dimension (Pauli needs N = 2^k).
struct basis_unavailable_error : error {
  using error::error;
};

// Relevance cut over a window with non-positive entropy area.
struct degenerate_window_error : error {
  using error::error;
};

// An internal identity that must hold to high precision failed; results
// would be untrustworthy, so we stop instead of returning them.
struct numerical_consistency_error : error {
  using error::error;
};

// Bad run configuration (unknown key, unparsable value, missing input).
struct config_error : error {
  using error::error;
};

}  // namespace catotoc
