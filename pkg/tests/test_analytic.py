import math

import numpy as np
import pytest

from ising_blocks.analytic import (
    critical_gl,
    l1_eigenvalues,
    l1_entropy,
    l1_entropy_d0_exact,
    l1_entropy_limit,
    l2_asymptotic_eigenvalues,
    l2_quartic,
    lambda0_entropy,
)
from ising_blocks.blockmatrix import build_gamma_two_blocks
from ising_blocks.corr import CorrelationKernel, build_gl_table
from ising_blocks.spectral import (
    entropy_of_matrix,
    entropy_two_blocks,
    nu_spectrum,
    shannon_bit,
)

KERNEL1 = CorrelationKernel(1.0)
TABLE1 = build_gl_table(KERNEL1, 410)


def test_critical_gl_values():
    assert critical_gl(0) == pytest.approx(-2 / math.pi, abs=1e-16)
    assert critical_gl(-1) == pytest.approx(2 / math.pi, abs=1e-16)
    assert abs(critical_gl(10**9)) < 1e-9


def test_l1_eigenvalues_d0():
    nu1, nu2 = l1_eigenvalues(0)
    assert nu1 == pytest.approx(2 * (math.sqrt(13) + 1) / (3 * math.pi), abs=1e-15)
    assert nu2 == pytest.approx(2 * (math.sqrt(13) - 1) / (3 * math.pi), abs=1e-15)


def test_l1_eigenvalues_coalesce():
    nu1, nu2 = l1_eigenvalues(10**4)
    assert nu1 == pytest.approx(2 / math.pi, abs=1e-7)
    assert nu2 == pytest.approx(2 / math.pi, abs=1e-7)
    # O(1/d^2) approach: quadrupling d cuts the deviation ~16x
    dev1 = abs(l1_eigenvalues(100)[0] - 2 / math.pi)
    dev2 = abs(l1_eigenvalues(400)[0] - 2 / math.pi)
    assert dev2 < dev1 / 12


def test_l1_matches_spectral_route():
    for d in (0, 3, 17, 200):
        nus = nu_spectrum(build_gamma_two_blocks(TABLE1, 1, d)).nus
        assert np.allclose(nus, l1_eigenvalues(d), atol=1e-12)
        assert l1_entropy(d) == pytest.approx(
            entropy_of_matrix(build_gamma_two_blocks(TABLE1, 1, d)), abs=1e-12
        )


def test_l1_entropy_closed_form_d0():
    assert l1_entropy(0) == pytest.approx(l1_entropy_d0_exact(), abs=1e-12)


def test_l1_entropy_limit():
    assert l1_entropy_limit() == pytest.approx(
        2 * shannon_bit((math.pi + 2) / (2 * math.pi)), abs=1e-15
    )
    assert abs(l1_entropy(500) - l1_entropy_limit()) < 1e-5


def test_quartic_symmetric_functions_at_d0():
    # coefficients are the elementary symmetric functions of t_k = -nu_k^2;
    # compare against the numeric spectrum of the 8x8 matrix
    q = l2_quartic(0)
    t = -(nu_spectrum(build_gamma_two_blocks(TABLE1, 2, 0)).nus ** 2)
    assert q.p == pytest.approx(-t.sum(), abs=1e-10)
    assert q.q == pytest.approx(
        sum(t[i] * t[j] for i in range(4) for j in range(i + 1, 4)), abs=1e-10
    )
    assert q.r == pytest.approx(
        -sum(
            t[i] * t[j] * t[k]
            for i in range(4)
            for j in range(i + 1, 4)
            for k in range(j + 1, 4)
        ),
        abs=1e-10,
    )
    assert q.s == pytest.approx(t.prod(), abs=1e-12)


def test_quartic_normalizers():
    q = l2_quartic(3)
    assert q.b_val == 3 * 7
    assert q.a_norm == (7**2) * (9**6) * (11**6) * (13**2)


def test_quartic_roots_match_spectrum():
    for d in range(0, 11):
        nus = nu_spectrum(build_gamma_two_blocks(TABLE1, 2, d)).nus
        assert np.allclose(l2_quartic(d).nu_values(), nus, atol=1e-10)


def test_l2_asymptotic_eigenvalues():
    hi, lo = l2_asymptotic_eigenvalues()
    assert (hi, lo) == l1_eigenvalues(0)
    nus = nu_spectrum(build_gamma_two_blocks(TABLE1, 2, 200)).nus
    assert np.allclose(nus, [hi, hi, lo, lo], atol=1e-4)
    asym_entropy = 2 * (shannon_bit((1 + hi) / 2) + shannon_bit((1 + lo) / 2))
    assert asym_entropy == pytest.approx(entropy_two_blocks(KERNEL1, 2, 200), abs=1e-4)


def test_lambda0_entropy():
    kernel0 = CorrelationKernel(0.0)
    assert lambda0_entropy(7, 0) == 1.0
    assert lambda0_entropy(7, 1) == 2.0
    for L, d in ((1, 0), (4, 0), (4, 2), (7, 9)):
        assert lambda0_entropy(L, d) == pytest.approx(
            entropy_two_blocks(kernel0, L, d), abs=1e-12
        )


def test_validation():
    with pytest.raises(ValueError):
        l1_eigenvalues(-1)
    with pytest.raises(ValueError):
        l2_quartic(-2)
    with pytest.raises(ValueError):
        lambda0_entropy(0, 0)
