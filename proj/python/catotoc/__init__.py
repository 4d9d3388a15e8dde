"""Quantized coupled cat maps on the torus: OTOC series, entanglement
entropies, and relevance ranking of complete operator bases.

The heavy lifting lives in the compiled extension ``catotoc._core``; this
package just re-exports its surface.
"""

from ._core import (
    ConfigError,
    NumericalConsistencyError,
    basis_labels,
    classical_orbit,
    coherent_state,
    counts_vs_t0,
    fourier_kernel,
    hbar,
    otoc_re_series,
    preset_names,
    propagator_1d,
    relevance_footprint,
    unstable_direction,
)

__all__ = [
    "ConfigError",
    "NumericalConsistencyError",
    "basis_labels",
    "classical_orbit",
    "coherent_state",
    "counts_vs_t0",
    "fourier_kernel",
    "hbar",
    "otoc_re_series",
    "preset_names",
    "propagator_1d",
    "relevance_footprint",
    "unstable_direction",
]

__version__ = "0.1.0"
