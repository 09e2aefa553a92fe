"""Closed-form results at the critical point and at zero field.

These expressions are the analytic test oracles for the numerical
spectrum pipeline: critical correlators, the exact L = 1 spectrum and
entropy at any separation, the quartic characteristic equation for
L = 2 (coefficients are explicit rationals in the distance), the shared
d -> infinity eigenvalue limits, and the exact zero-field entropies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .corr import critical_gl_value
from .spectral import shannon_bit


def critical_gl(l: int) -> float:
    """g_l at lam = 1: -1/(pi (l + 1/2))."""
    return float(critical_gl_value(l))


def l1_eigenvalues(d: int) -> tuple[float, float]:
    """The two nu values of Gamma_{1,d} at lam = 1, largest first.

    With l = d + 1:  nu_{1,2} = (2/pi) (sqrt((4l^2-1)^2 + 4l^2) +- 1) / (4l^2-1).
    """
    if d < 0:
        raise ValueError("d must be >= 0")
    l = d + 1
    a = 4 * l * l - 1
    root = math.sqrt(a * a + 4 * l * l)
    return (2.0 / math.pi) * (root + 1.0) / a, (2.0 / math.pi) * (root - 1.0) / a


def l1_entropy(d: int) -> float:
    """S(1, d) at lam = 1 in bits, from the exact eigenvalue pair."""
    nu1, nu2 = l1_eigenvalues(d)
    return shannon_bit((1.0 + nu1) / 2.0) + shannon_bit((1.0 + nu2) / 2.0)


def l1_entropy_d0_exact() -> float:
    """S(1, 0) as the explicit three-term logarithmic expression (bits)."""
    pi = math.pi
    s13 = math.sqrt(13.0)
    return (
        -0.5 * math.log2(1.0 / 16.0 + (16.0 - 7.0 * pi**2) / (9.0 * pi**4))
        - (s13 / (3.0 * pi)) * math.log2(1.0 + 8.0 * s13 * pi / (16.0 - 4.0 * s13 * pi + 3.0 * pi**2))
        - (1.0 / (3.0 * pi)) * math.log2(1.0 + 8.0 * pi / (3.0 * pi**2 - 4.0 * pi - 16.0))
    )


def l1_entropy_limit() -> float:
    """lim_{d->inf} S(1, d) = 2 H((pi + 2)/(2 pi)), in bits."""
    return 2.0 * shannon_bit((math.pi + 2.0) / (2.0 * math.pi))


@dataclass(frozen=True)
class QuarticCoefficients:
    """Coefficients of t^4 + p t^3 + q t^2 + r t + s = 0 for Gamma_{2,d}.

    t = mu^2 where +-mu are the matrix eigenvalues, so the four roots are
    t_k = -nu_k^2.  ``a_norm`` and ``b_val`` are the normalizer A and the
    combination B = d(4+d) the coefficient polynomials are written in.
    """

    d: int
    p: float
    q: float
    r: float
    s: float
    a_norm: float
    b_val: float

    def nu_values(self) -> np.ndarray:
        """The four nu_k, descending, via companion-matrix roots of the quartic."""
        roots = np.roots([1.0, self.p, self.q, self.r, self.s])
        if np.max(np.abs(roots.imag)) > 1e-9 or np.max(roots.real) > 1e-12:
            raise ArithmeticError(f"quartic roots for d={self.d} are not real negative: {roots}")
        return np.sort(np.sqrt(-roots.real))[::-1]


def l2_quartic(d: int) -> QuarticCoefficients:
    """Exact quartic coefficients p, q, r, s as functions of the distance."""
    if d < 0:
        raise ValueError("d must be >= 0")
    pi = math.pi
    A = (1 + 2 * d) ** 2 * (3 + 2 * d) ** 6 * (5 + 2 * d) ** 6 * (7 + 2 * d) ** 2
    B = d * (4 + d)
    p = (2**6 * (3 + 2 * d) ** 4 * (5 + 2 * d) ** 4 / (pi**2 * A)) * (
        5303 + 24314 * B / 3 + 41528 * B**2 / 9 + 10144 * B**3 / 9 + 896 * B**4 / 9
    )
    q = (2**12 * (3 + 2 * d) ** 2 * (5 + 2 * d) ** 2 / (pi**4 * A)) * (
        203297
        + 391466 * B
        + 2841841 * B**2 / 9
        + 3652160 * B**3 / 27
        + 2617216 * B**4 / 81
        + 329984 * B**5 / 81
        + 17152 * B**6 / 81
    )
    r = (2**22 * (2 + d) ** 4 / (pi**6 * A)) * (
        12271
        + 68116 * B / 3
        + 158795 * B**2 / 9
        + 198074 * B**3 / 27
        + 139000 * B**4 / 81
        + 17312 * B**5 / 81
        + 896 * B**6 / 81
    )
    s = (2**32 / (3**4 * pi**8 * A)) * (1 + d) ** 4 * (2 + d) ** 8 * (3 + d) ** 4
    return QuarticCoefficients(d, p, q, r, s, float(A), float(B))


def l2_asymptotic_eigenvalues() -> tuple[float, float]:
    """d -> infinity eigenvalues of Gamma_{2,d}: each value is doubly degenerate.

    They coincide with the L = 1 pair at d = 0.
    """
    s13 = math.sqrt(13.0)
    return (2.0 / math.pi) * (s13 + 1.0) / 3.0, (2.0 / math.pi) * (s13 - 1.0) / 3.0


def lambda0_entropy(L: int, d: int) -> float:
    """Exact zero-field entropy: area law, 1 bit at d = 0 and 2 bits for d >= 1."""
    if L < 1:
        raise ValueError("L must be >= 1")
    if d < 0:
        raise ValueError("d must be >= 0")
    return 1.0 if d == 0 else 2.0
