"""Entropies from the nu-spectrum of skew-symmetric correlation matrices.

A real antisymmetric 2n x 2n matrix has purely imaginary eigenvalues
+-i nu_l.  Its singular values are the |nu_l|, each occurring twice, so
the spectrum is read off an SVD and collapsed pair-wise; the coincidence
of each pair is a built-in health check on the input.  The block entropy
is then the Shannon sum

    S = sum_l H((1 + nu_l)/2)      [bits],

which is the exact von Neumann entropy of the Gaussian state the matrix
describes.  All entropies in this package are base-2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import xlogy

from .blockmatrix import SkewCorrMatrix, build_gamma_single, build_gamma_two_blocks
from .corr import CorrelationKernel, build_gl_table
from .errors import DomainError, PairingFailure

PAIRING_RTOL = 1e-8
CLAMP_WINDOW = 1e-9


@dataclass(frozen=True)
class EntropySpectrum:
    """The n values nu_l of a 2n x 2n skew matrix, sorted descending.

    ``pairing_gap`` is the largest mismatch between the two singular
    values of any pair, before averaging; it measures how cleanly the
    input matrix realized the expected doubly-degenerate structure.
    """

    nus: np.ndarray
    pairing_gap: float

    def __post_init__(self):
        self.nus.setflags(write=False)


def nu_spectrum(m: SkewCorrMatrix) -> EntropySpectrum:
    """Extract the nu-spectrum of a skew correlation matrix via SVD.

    Singular values are paired off in descending order; each pair is
    averaged into one nu.  Round-off slightly above 1 (within 1e-9) is
    clamped to 1.

    Raises
    ------
    PairingFailure
        If a pair disagrees by more than 1e-8 (relative to max(1, nu_1))
        or a value exceeds 1 beyond the clamp window; both signal a
        numerically broken input.
    """
    s = np.linalg.svd(m.entries, compute_uv=False)
    gap = float(np.max(np.abs(s[0::2] - s[1::2]))) if s.size else 0.0
    scale = max(1.0, float(s[0])) if s.size else 1.0
    if gap > PAIRING_RTOL * scale:
        raise PairingFailure(
            f"singular values of {m.provenance} pair up only to {gap:.2e}"
        )
    nus = (s[0::2] + s[1::2]) / 2.0
    if nus.size and nus[0] > 1.0 + CLAMP_WINDOW:
        raise PairingFailure(
            f"nu = {nus[0]:.12f} from {m.provenance} exceeds 1 beyond the clamp window"
        )
    return EntropySpectrum(np.minimum(nus, 1.0), gap)


def shannon_bit(x: float) -> float:
    """Shannon entropy of a bit, H(x) = -x log2 x - (1-x) log2(1-x).

    The x = 0 and x = 1 limits are 0 by continuity.
    """
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"shannon_bit argument must lie in [0, 1], got {x}")
    if x == 0.0 or x == 1.0:
        return 0.0
    return -(x * math.log2(x) + (1.0 - x) * math.log2(1.0 - x))


def entropy_from_spectrum(spectrum: EntropySpectrum) -> float:
    """Sum of Shannon bit entropies, S = sum_l H((1 + nu_l)/2), in bits."""
    x = (1.0 + spectrum.nus) / 2.0
    return float(-np.sum(xlogy(x, x) + xlogy(1.0 - x, 1.0 - x)) / math.log(2.0))


def entropy_of_matrix(m: SkewCorrMatrix) -> float:
    """Convenience composition: spectrum then entropy, in bits."""
    return entropy_from_spectrum(nu_spectrum(m))


def entropy_single_block(kernel: CorrelationKernel, L: int) -> float:
    """Entropy S_L of one block of L contiguous spins, in bits."""
    if L < 1:
        raise ValueError("L must be >= 1")
    table = build_gl_table(kernel, max(1, L - 1))
    return entropy_of_matrix(build_gamma_single(table, L))


def entropy_two_blocks(kernel: CorrelationKernel, L: int, d: int) -> float:
    """Entropy S(L, d) of two L-spin blocks separated by d sites, in bits."""
    if L < 1:
        raise ValueError("L must be >= 1")
    if d < 0:
        raise ValueError("d must be >= 0")
    table = build_gl_table(kernel, max(1, 2 * L + d - 1))
    return entropy_of_matrix(build_gamma_two_blocks(table, L, d))
