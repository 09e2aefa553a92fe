"""Ground-state Majorana correlation coefficients of the infinite chain.

For the transverse-field Ising chain at field strength ``lam`` (J = 1),
the translation-invariant ground-state correlators are

    g_l = (1/2pi) Int_0^{2pi} dphi e^{i phi l}
          (cos phi - lam + i sin phi) / sqrt((cos phi - lam)^2 + sin^2 phi).

The integrand is smooth and 2pi-periodic for lam != 1, so the composite
trapezoid rule converges spectrally; grid points are doubled until two
successive estimates agree.  Two closed forms bypass the quadrature:

    lam = 1:  g_l = -1 / (pi (l + 1/2))
    lam = 0:  g_l = delta_{l,-1}

At lam = 1 the integrand's square-root factor vanishes at phi = 0, which
is why the critical point is always routed to its closed form; quadrature
arbitrarily close to lam = 1 still converges, only slowly (the point cap
turns that into ``NonConvergence`` at tight tolerances).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import IndexOutOfTable, NonConvergence

POINT_CAP = 2**20
MAX_OFFSET = 10**6

# The integrand has unit modulus pointwise, so trapezoid sums cannot be
# resolved below a few eps in absolute terms whatever rel_tol asks for.
_ROUNDOFF_FLOOR = 4.0 * np.finfo(float).eps


@dataclass(frozen=True)
class CorrelationKernel:
    """Field strength plus the quadrature policy used to evaluate g_l.

    Parameters
    ----------
    lam : float
        Dimensionless transverse field, lam >= 0.
    quad_points : int
        Starting number of trapezoid points; power of two in [4, 2^20].
    rel_tol : float
        Relative tolerance between successive grid-doubled estimates.
    """

    lam: float
    quad_points: int = 256
    rel_tol: float = 1e-13

    def __post_init__(self):
        if not self.lam >= 0.0:
            raise ValueError(f"lam must be >= 0, got {self.lam}")
        n = self.quad_points
        if not (4 <= n <= POINT_CAP) or n & (n - 1):
            raise ValueError(f"quad_points must be a power of two in [4, 2^20], got {n}")
        if not self.rel_tol > 0.0:
            raise ValueError(f"rel_tol must be positive, got {self.rel_tol}")


@dataclass(frozen=True)
class GlTable:
    """Correlators g_l tabulated for all offsets |l| <= l_max.

    ``values[l + l_max]`` holds g_l; use :meth:`g` / :meth:`g_array` for
    bounds-checked access.  Immutable after construction.
    """

    lam: float
    l_max: int
    values: np.ndarray

    def __post_init__(self):
        if self.l_max < 1:
            raise ValueError("l_max must be >= 1")
        if self.values.shape != (2 * self.l_max + 1,):
            raise ValueError("values must cover l in [-l_max, l_max]")
        self.values.setflags(write=False)

    def g(self, l: int) -> float:
        """Return g_l, raising IndexOutOfTable when |l| > l_max."""
        if abs(l) > self.l_max:
            raise IndexOutOfTable(f"offset {l} outside table with l_max={self.l_max}")
        return float(self.values[l + self.l_max])

    def g_array(self, offsets: np.ndarray) -> np.ndarray:
        """Vectorized lookup used by the matrix builders."""
        offsets = np.asarray(offsets)
        if offsets.size and np.max(np.abs(offsets)) > self.l_max:
            raise IndexOutOfTable(
                f"offset {int(np.max(np.abs(offsets)))} outside table with l_max={self.l_max}"
            )
        return self.values[offsets + self.l_max]

    def offsets(self) -> np.ndarray:
        return np.arange(-self.l_max, self.l_max + 1)


def critical_gl_value(l) -> float:
    """Closed-form critical correlator -1/(pi (l + 1/2)); accepts arrays."""
    return -1.0 / (np.pi * (np.asarray(l, dtype=float) + 0.5))


def _integrand_samples(lam: float, n: int) -> np.ndarray:
    """Unit-modulus factor of the integrand on the n-point uniform grid."""
    phi = 2.0 * np.pi * np.arange(n) / n
    num = np.cos(phi) - lam + 1j * np.sin(phi)
    return num / np.sqrt((np.cos(phi) - lam) ** 2 + np.sin(phi) ** 2)


def _next_pow2(n: int) -> int:
    return 1 << max(2, int(n - 1).bit_length())


def _converged(new: np.ndarray, old: np.ndarray, rel_tol: float) -> bool:
    diff = float(np.max(np.abs(new - old)))
    scale = float(np.max(np.abs(new)))
    return diff <= rel_tol * scale or diff <= _ROUNDOFF_FLOOR


def _check_real(values: np.ndarray) -> np.ndarray:
    imag_max = float(np.max(np.abs(values.imag))) if values.size else 0.0
    if imag_max >= 1e-12:
        raise NonConvergence(
            f"quadrature imaginary part {imag_max:.2e} exceeds 1e-12; integral must be real"
        )
    return values.real.copy()


def compute_gl(kernel: CorrelationKernel, l: int) -> float:
    """Evaluate a single correlator g_l.

    Routes lam = 1 and lam = 0 to their closed forms; otherwise runs
    grid-doubled trapezoid quadrature starting from ``kernel.quad_points``
    (raised as needed to resolve the e^{i phi l} oscillation).

    Raises
    ------
    NonConvergence
        If the 2^20-point cap is reached before two successive estimates
        agree to ``kernel.rel_tol``.
    """
    if abs(l) > MAX_OFFSET:
        raise ValueError(f"|l| must be <= {MAX_OFFSET}, got {l}")
    if kernel.lam == 1.0:
        return float(critical_gl_value(l))
    if kernel.lam == 0.0:
        return 1.0 if l == -1 else 0.0

    n = max(kernel.quad_points, _next_pow2(2 * abs(l) + 4))
    prev = None
    while n <= POINT_CAP:
        phi = 2.0 * np.pi * np.arange(n) / n
        est = np.mean(np.exp(1j * phi * l) * _integrand_samples(kernel.lam, n))
        if prev is not None and _converged(np.array([est]), np.array([prev]), kernel.rel_tol):
            return float(_check_real(np.array([est]))[0])
        prev = est
        n *= 2
    raise NonConvergence(
        f"g_l quadrature hit the {POINT_CAP}-point cap at lam={kernel.lam}, l={l}; "
        "lam is too close to 1, use the critical closed form"
    )


def build_gl_table(kernel: CorrelationKernel, l_max: int) -> GlTable:
    """Tabulate g_l for all |l| <= l_max on one shared quadrature grid.

    The trapezoid sums for every l are the entries of a single inverse
    DFT of the sampled integrand, so each doubling costs one FFT; the
    doubling stops when the whole table is converged.
    """
    if l_max < 1:
        raise ValueError("l_max must be >= 1")
    if l_max > MAX_OFFSET:
        raise ValueError(f"l_max must be <= {MAX_OFFSET}")
    ls = np.arange(-l_max, l_max + 1)
    if kernel.lam == 1.0:
        return GlTable(kernel.lam, l_max, critical_gl_value(ls))
    if kernel.lam == 0.0:
        vals = np.zeros(2 * l_max + 1)
        vals[-1 + l_max] = 1.0
        return GlTable(kernel.lam, l_max, vals)

    n = max(kernel.quad_points, _next_pow2(2 * l_max + 4))
    prev = None
    while n <= POINT_CAP:
        est = np.fft.ifft(_integrand_samples(kernel.lam, n))[ls % n]
        if prev is not None and _converged(est, prev, kernel.rel_tol):
            return GlTable(kernel.lam, l_max, _check_real(est))
        prev = est
        n *= 2
    raise NonConvergence(
        f"g_l table quadrature hit the {POINT_CAP}-point cap at lam={kernel.lam}; "
        "lam is too close to 1, use the critical closed form"
    )
