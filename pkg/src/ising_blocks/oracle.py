"""Brute-force finite-chain oracles: exact diagonalization and free fermions.

Both solvers treat the open chain H = -J sum_i (lam sz_i + sx_i sx_{i+1})
with J = 1.  Exact diagonalization produces the many-body ground state
in the spin-z basis; its subsystem entropies are computed by index-bit
grouping in the Jordan-Wigner fermion-mode basis (grouping the mask
modes in front picks up the fermionic reordering parity).  The
free-fermion solver diagonalizes the one-body Bogoliubov-de Gennes form
and fills the negative-energy modes, yielding the 2n x 2n Majorana
correlation matrix whose masked spectra feed the same entropy formula
as the infinite chain.

For disjoint masks the fermion-mode bipartition is the object the
correlation-matrix method computes (the Jordan-Wigner string through the
gap makes it differ from the spin-site bipartition); for one contiguous
block the two coincide.  Both routes here use the fermionic convention,
which is what makes them agree to machine precision.

The Majorana matrix sign convention follows the infinite-chain g_l
integral (on-site block [[0, -1], [1, 0]] at large field); it differs by
a global, spectrum-preserving sign from the bare operator ordering.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg
import scipy.sparse
import scipy.sparse.linalg
import scipy.special

from .blockmatrix import SkewCorrMatrix
from .spectral import entropy_of_matrix

DENSE_SITE_CAP = 12
SITE_CAP_ED = 20
SITE_CAP_FF = 2000
DEGENERACY_GAP = 1e-10


@dataclass(frozen=True)
class FiniteChainSpec:
    """Open transverse-field Ising chain of n_sites spins, J fixed to 1."""

    n_sites: int
    lam: float
    coupling_j: float = 1.0
    boundary: str = "open"

    def __post_init__(self):
        if not 3 <= self.n_sites <= SITE_CAP_FF:
            raise ValueError(f"n_sites must be in [3, {SITE_CAP_FF}], got {self.n_sites}")
        if not self.lam >= 0.0:
            raise ValueError(f"lam must be >= 0, got {self.lam}")
        if self.coupling_j != 1.0:
            raise ValueError("coupling_j is fixed to 1.0")
        if self.boundary != "open":
            raise ValueError("only open boundary conditions are supported")


@dataclass(frozen=True)
class SubsystemMask:
    """Sorted distinct site indices defining the kept subsystem."""

    sites: tuple[int, ...]

    def __post_init__(self):
        if not self.sites:
            raise ValueError("mask must be non-empty")
        if list(self.sites) != sorted(set(self.sites)):
            raise ValueError("mask sites must be sorted and distinct")
        if self.sites[0] < 0:
            raise ValueError("mask sites must be non-negative")

    @classmethod
    def single_block(cls, start: int, length: int) -> "SubsystemMask":
        return cls(tuple(range(start, start + length)))

    @classmethod
    def two_blocks(cls, start: int, length: int, gap: int) -> "SubsystemMask":
        first = range(start, start + length)
        second = range(start + length + gap, start + 2 * length + gap)
        return cls(tuple(first) + tuple(second))

    def two_block_shape(self) -> tuple[int, int] | None:
        """(L, d) if the mask is two equal contiguous blocks with a gap, else None."""
        runs: list[list[int]] = [[self.sites[0], self.sites[0]]]
        for s in self.sites[1:]:
            if s == runs[-1][1] + 1:
                runs[-1][1] = s
            else:
                runs.append([s, s])
        if len(runs) != 2:
            return None
        (a0, a1), (b0, b1) = runs
        if a1 - a0 != b1 - b0:
            return None
        return a1 - a0 + 1, b0 - a1 - 1

    def validate_for(self, n_sites: int) -> None:
        if self.sites[-1] >= n_sites:
            raise ValueError(f"mask site {self.sites[-1]} outside chain of {n_sites} sites")
        if len(self.sites) >= n_sites:
            raise ValueError("mask complement must be non-empty")

    def complement(self, n_sites: int) -> "SubsystemMask":
        self.validate_for(n_sites)
        return SubsystemMask(tuple(i for i in range(n_sites) if i not in set(self.sites)))


@dataclass(frozen=True)
class GroundState:
    """ED ground state with its energy, gap, and parity-degeneracy flag."""

    vector: np.ndarray
    energy: float
    gap: float
    degenerate: bool

    def __post_init__(self):
        self.vector.setflags(write=False)


@dataclass(frozen=True)
class FreeFermionResult:
    """Free-fermion solve: Majorana correlations plus ground-state data."""

    gamma: SkewCorrMatrix
    energy: float
    min_excitation: float
    degenerate: bool


def _site_bits(n: int) -> np.ndarray:
    """bits[s, i] = occupation of site i in basis state s (bit 1 = spin down)."""
    s = np.arange(1 << n)
    return ((s[:, None] >> np.arange(n - 1, -1, -1)[None, :]) & 1).astype(np.int8)


def _ed_matrix(spec: FiniteChainSpec, sparse: bool):
    n = spec.n_sites
    dim = 1 << n
    bits = _site_bits(n)
    diag = -spec.lam * (1 - 2 * bits).sum(axis=1).astype(float)
    rows = [np.arange(dim)]
    cols = [np.arange(dim)]
    vals = [diag]
    s = np.arange(dim)
    for i in range(n - 1):
        flip = (1 << (n - 1 - i)) | (1 << (n - 2 - i))
        rows.append(s ^ flip)
        cols.append(s)
        vals.append(np.full(dim, -1.0))
    if sparse:
        return scipy.sparse.coo_matrix(
            (np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
            shape=(dim, dim),
        ).tocsr()
    h = np.zeros((dim, dim))
    h[np.concatenate(rows), np.concatenate(cols)] += np.concatenate(vals)
    return h


def _parity_diagonal(n: int) -> np.ndarray:
    """Diagonal of prod_i sz_i in the spin-z basis."""
    return 1.0 - 2.0 * (_site_bits(n).sum(axis=1) % 2)


def _fix_sign(v: np.ndarray) -> np.ndarray:
    k = int(np.argmax(np.abs(v)))
    return -v if v[k] < 0 else v


def ed_ground_state(spec: FiniteChainSpec) -> GroundState:
    """Ground state of the finite chain by exact diagonalization.

    Dense solve up to 12 sites, Lanczos beyond (up to 20).  When the gap
    closes below 1e-10 (the lam -> 0 parity doublet), the returned state
    is the even-parity combination of the two lowest states and the
    result is flagged degenerate.
    """
    if spec.n_sites > SITE_CAP_ED:
        raise ValueError(f"ED supports n_sites <= {SITE_CAP_ED}")
    n = spec.n_sites
    if n <= DENSE_SITE_CAP:
        h = _ed_matrix(spec, sparse=False)
        w, v = scipy.linalg.eigh(h, subset_by_index=(0, 2))
    else:
        h = _ed_matrix(spec, sparse=True)
        w, v = scipy.sparse.linalg.eigsh(h, k=3, which="SA")
        order = np.argsort(w)
        w, v = w[order], v[:, order]
    gap = float(w[1] - w[0])
    degenerate = gap < DEGENERACY_GAP
    if degenerate:
        # resolve the doublet by parity: keep the even combination
        pair = v[:, :2]
        par = _parity_diagonal(n)
        pmat = pair.T @ (par[:, None] * pair)
        ew, evec = np.linalg.eigh(pmat)
        state = pair @ evec[:, int(np.argmax(ew))]
        state /= np.linalg.norm(state)
    else:
        state = v[:, 0]
    return GroundState(_fix_sign(state), float(w[0]), gap, degenerate)


def reduced_entropy(state: np.ndarray, mask: SubsystemMask) -> float:
    """Subsystem entropy of a pure state over the masked fermion modes, bits.

    Index-bit grouping: the amplitudes are rearranged into a (mask x
    complement) matrix whose singular values squared are the reduced
    density matrix spectrum.  Grouping reorders the Jordan-Wigner modes,
    so each amplitude carries the parity of that reordering restricted
    to its occupied modes; for a single contiguous mask the sign is
    immaterial and the result equals the spin-site block entropy.
    """
    dim = len(state)
    n = dim.bit_length() - 1
    if 1 << n != dim:
        raise ValueError("state length must be a power of two")
    mask.validate_for(n)
    sites = list(mask.sites)
    comp = [i for i in range(n) if i not in set(sites)]
    bits = _site_bits(n)

    sign = np.ones(dim)
    in_mask = set(sites)
    for c in comp:
        later_mask_sites = [m for m in sites if m > c]
        if later_mask_sites:
            crossings = bits[:, later_mask_sites].sum(axis=1) * bits[:, c]
            sign *= np.where(crossings % 2 == 1, -1.0, 1.0)

    a_idx = np.zeros(dim, dtype=np.int64)
    for k, site in enumerate(sites):
        a_idx |= bits[:, site].astype(np.int64) << (len(sites) - 1 - k)
    b_idx = np.zeros(dim, dtype=np.int64)
    for k, site in enumerate(comp):
        b_idx |= bits[:, site].astype(np.int64) << (len(comp) - 1 - k)

    grouped = np.zeros((1 << len(sites), 1 << len(comp)))
    grouped[a_idx, b_idx] = sign * state
    p = np.linalg.svd(grouped, compute_uv=False) ** 2
    return float(-np.sum(scipy.special.xlogy(p, p)) / np.log(2.0))


def ff_finite_correlations(spec: FiniteChainSpec) -> FreeFermionResult:
    """Ground-state Majorana correlation matrix of the finite open chain.

    Diagonalizes the 2n x 2n Bogoliubov-de Gennes form of the
    Jordan-Wigner quadratic Hamiltonian and fills all negative-energy
    modes.  The returned matrix interleaves the two Majorana flavors per
    site, matching the infinite-chain block layout, and is flagged
    degenerate when the lowest excitation collapses (lam -> 0 zero mode).
    """
    n = spec.n_sites
    lam = spec.lam
    a = np.zeros((n, n))
    b = np.zeros((n, n))
    np.fill_diagonal(a, 2.0 * lam)
    idx = np.arange(n - 1)
    a[idx, idx + 1] = a[idx + 1, idx] = -1.0
    b[idx, idx + 1] = -1.0
    b[idx + 1, idx] = +1.0
    hbdg = np.block([[a, b], [-b, -a]])
    w, v = scipy.linalg.eigh(hbdg)

    u_pos = v[:n, n:]
    v_pos = v[n:, n:]
    c = v_pos @ v_pos.T
    f = u_pos @ v_pos.T
    c = (c + c.T) / 2.0
    f = (f - f.T) / 2.0

    m = 2.0 * (c - f) - np.eye(n)
    gamma = np.zeros((2 * n, 2 * n))
    gamma[0::2, 1::2] = m
    gamma[1::2, 0::2] = -m.T

    min_excitation = float(w[n])
    return FreeFermionResult(
        gamma=SkewCorrMatrix(gamma, f"finite_chain(n={n})"),
        energy=float(-0.5 * np.sum(w[n:])),
        min_excitation=min_excitation,
        degenerate=min_excitation < DEGENERACY_GAP,
    )


def mask_gamma(gamma: SkewCorrMatrix, mask: SubsystemMask) -> SkewCorrMatrix:
    """Restrict a finite-chain correlation matrix to the masked sites."""
    n = gamma.size // 2
    mask.validate_for(n)
    idx = np.concatenate([(2 * s, 2 * s + 1) for s in mask.sites])
    return SkewCorrMatrix(gamma.entries[np.ix_(idx, idx)], f"finite_chain(n={n},masked)")


def masked_entropy(gamma: SkewCorrMatrix, mask: SubsystemMask) -> float:
    """Entropy in bits of the masked sites from the correlation matrix."""
    return entropy_of_matrix(mask_gamma(gamma, mask))
