"""Skew-symmetric Majorana correlation matrices from tabulated g_l.

Everything here is assembled from the 2x2 blocks

    Pi_l = [[0, g_l], [-g_{-l}, 0]],       (Pi_l)^T = -Pi_{-l},

laid out block-Toeplitz.  The two-block matrix Gamma_{L,d} exists in two
equivalent constructions: the direct four-quadrant block form, and the
literal deletion of the middle d sites' rows and columns from the padded
single-block matrix Gamma_{2L+d}.  The direct form is the production
path; the deletion route is kept as an oracle and the two must agree
bit-for-bit (they read the same table entries).

Antisymmetry of every constructed matrix is exact in floating point:
paired entries are the same table value and its negation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .corr import GlTable
from .errors import NotAntisymmetric


@dataclass(frozen=True)
class MajoranaBlock:
    """One 2x2 block Pi_l of the correlation matrix."""

    l: int
    entries: np.ndarray

    def __post_init__(self):
        self.entries.setflags(write=False)


@dataclass(frozen=True)
class SkewCorrMatrix:
    """Real antisymmetric correlation matrix of an even number of modes.

    ``provenance`` records which construction produced the matrix, e.g.
    ``single_block(L=4)``, ``two_block(L=2,d=3)``, ``padded(7)`` or
    ``finite_chain(n=12)``.
    """

    entries: np.ndarray
    provenance: str

    def __post_init__(self):
        m = self.entries
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] % 2:
            raise ValueError(f"expected an even square matrix, got shape {m.shape}")
        if np.any(m + m.T != 0.0):
            raise NotAntisymmetric(f"matrix from {self.provenance} is not exactly antisymmetric")
        m.setflags(write=False)

    @property
    def size(self) -> int:
        return self.entries.shape[0]


def build_pi(table: GlTable, l: int) -> MajoranaBlock:
    """Pi_l = [[0, g_l], [-g_{-l}, 0]] from the table."""
    return MajoranaBlock(l, np.array([[0.0, table.g(l)], [-table.g(-l), 0.0]]))


def _assemble(table: GlTable, row_sites: np.ndarray, col_sites: np.ndarray) -> np.ndarray:
    """Matrix with 2x2 block (i, j) = Pi_{row_sites[i] - col_sites[j]}."""
    offs = row_sites[:, None] - col_sites[None, :]
    m = np.zeros((2 * len(row_sites), 2 * len(col_sites)))
    m[0::2, 1::2] = table.g_array(offs)
    m[1::2, 0::2] = -table.g_array(-offs)
    return m


def build_toeplitz_rect(table: GlTable, x: int, L: int, M: int) -> np.ndarray:
    """Rectangular block-Toeplitz matrix A_x^{(L,M)}, block (i,j) = Pi_{x+i-j}."""
    if L < 1 or M < 1:
        raise ValueError("block dimensions must be >= 1")
    return _assemble(table, x + np.arange(L), np.arange(M))


def build_gamma_single(table: GlTable, L: int) -> SkewCorrMatrix:
    """Single-block matrix Gamma_L: 2L x 2L block-Toeplitz with blocks Pi_{i-j}."""
    if L < 1:
        raise ValueError("L must be >= 1")
    sites = np.arange(L)
    return SkewCorrMatrix(_assemble(table, sites, sites), f"single_block(L={L})")


def build_gamma_padded(table: GlTable, L: int, d: int) -> SkewCorrMatrix:
    """The padded matrix Gamma_{2L+d} that the deletion route starts from."""
    _check_two_block_args(L, d)
    sites = np.arange(2 * L + d)
    return SkewCorrMatrix(_assemble(table, sites, sites), f"padded({2 * L + d})")


def build_gamma_two_blocks(table: GlTable, L: int, d: int) -> SkewCorrMatrix:
    """Two-block matrix Gamma_{L,d} in the direct four-quadrant block form.

    Equivalent to keeping sites {0..L-1} and {L+d..2L+d-1} of the padded
    chain: the quadrants are A_0, A_{-L-d}, A_{L+d}, A_0.
    """
    _check_two_block_args(L, d)
    sites = np.concatenate([np.arange(L), np.arange(L + d, 2 * L + d)])
    return SkewCorrMatrix(_assemble(table, sites, sites), f"two_block(L={L},d={d})")


def build_gamma_two_blocks_by_deletion(table: GlTable, L: int, d: int) -> SkewCorrMatrix:
    """Gamma_{L,d} by literally deleting the middle d sites from Gamma_{2L+d}.

    Oracle for :func:`build_gamma_two_blocks`; removes the rows and
    columns of block indices L <= x < L+d and must agree bit-wise.
    """
    padded = build_gamma_padded(table, L, d).entries
    doomed = np.concatenate([(2 * s, 2 * s + 1) for s in range(L, L + d)]) if d else []
    kept = np.delete(padded, doomed, axis=0)
    kept = np.delete(kept, doomed, axis=1)
    return SkewCorrMatrix(kept, f"two_block(L={L},d={d})")


def _check_two_block_args(L: int, d: int) -> None:
    if L < 1:
        raise ValueError("L must be >= 1")
    if d < 0:
        raise ValueError("d must be >= 0")
