import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ising_blocks.corr import (
    CorrelationKernel,
    _integrand_samples,
    build_gl_table,
    compute_gl,
    critical_gl_value,
)
from ising_blocks.errors import IndexOutOfTable, NonConvergence

# Independent oracle values: adaptive Gauss-Kronrod quadrature of the real
# integrand (scipy.integrate.quad, epsabs=1e-14), frozen as regression
# constants.
QUAD_ORACLE_HALF = {
    -5: 0.015042051384883818,
    -2: 0.22518585101878413,
    -1: 0.93421545766769398,
    0: -0.2586579046113418,
    1: -0.033472053592557442,
    2: -0.0085181155443351166,
    3: -0.0026910652632884092,
}


def test_kernel_validation():
    with pytest.raises(ValueError):
        CorrelationKernel(-0.5)
    with pytest.raises(ValueError):
        CorrelationKernel(1.0, quad_points=100)  # not a power of two
    with pytest.raises(ValueError):
        CorrelationKernel(1.0, quad_points=2)
    with pytest.raises(ValueError):
        CorrelationKernel(1.0, rel_tol=0.0)


def test_critical_closed_form():
    kernel = CorrelationKernel(1.0)
    assert compute_gl(kernel, 0) == pytest.approx(-2 / np.pi, abs=1e-15)
    table = build_gl_table(kernel, 2)
    expected = {
        -2: 2 / (3 * np.pi),
        -1: 2 / np.pi,
        0: -2 / np.pi,
        1: -2 / (3 * np.pi),
        2: -2 / (5 * np.pi),
    }
    for l, val in expected.items():
        assert table.g(l) == pytest.approx(val, abs=1e-15)


def test_zero_field_closed_form():
    kernel = CorrelationKernel(0.0)
    assert compute_gl(kernel, -1) == 1.0
    assert compute_gl(kernel, 0) == 0.0
    table = build_gl_table(kernel, 5)
    for l in table.offsets():
        assert table.g(l) == (1.0 if l == -1 else 0.0)


def test_strong_field_limit():
    assert compute_gl(CorrelationKernel(10.0), 0) == pytest.approx(-1.0, abs=1e-2)
    # monotone approach to -1
    assert compute_gl(CorrelationKernel(100.0), 0) == pytest.approx(-1.0, abs=1e-4)


def test_quadrature_against_adaptive_oracle():
    kernel = CorrelationKernel(0.5)
    for l, val in QUAD_ORACLE_HALF.items():
        assert compute_gl(kernel, l) == pytest.approx(val, abs=1e-12)


def test_table_matches_single_evaluations():
    kernel = CorrelationKernel(0.5)
    table = build_gl_table(kernel, 50)
    for l in range(-50, 51):
        assert table.g(l) == pytest.approx(compute_gl(kernel, l), abs=1e-12)


def test_table_lookup_bounds():
    table = build_gl_table(CorrelationKernel(1.0), 3)
    with pytest.raises(IndexOutOfTable):
        table.g(4)
    with pytest.raises(IndexOutOfTable):
        table.g_array(np.array([-4]))


def test_offset_cap():
    with pytest.raises(ValueError):
        compute_gl(CorrelationKernel(1.0), 10**6 + 1)


@settings(max_examples=30, deadline=None)
@given(
    lam=st.floats(min_value=0.0, max_value=3.0, allow_nan=False).filter(
        lambda x: abs(x - 1.0) > 0.05
    ),
    l=st.integers(min_value=-30, max_value=30),
)
def test_gl_magnitude_bounded(lam, l):
    assert abs(compute_gl(CorrelationKernel(lam), l)) <= 1.0 + 1e-12


def test_doubling_converges_monotonically():
    # successive trapezoid differences shrink once the grid resolves the
    # integrand; check the tail of the doubling sequence directly
    lam, l = 0.5, 2
    estimates = []
    for n in [2**k for k in range(4, 12)]:
        phi = 2 * np.pi * np.arange(n) / n
        estimates.append(np.mean(np.exp(1j * phi * l) * _integrand_samples(lam, n)).real)
    diffs = np.abs(np.diff(estimates))
    tail = diffs[2:]
    tail = tail[tail > 1e-16]
    assert np.all(np.diff(tail) <= 0)


def test_quadrature_result_is_real():
    # imaginary parts are checked internally below 1e-12 and discarded
    val = compute_gl(CorrelationKernel(1.5), 7)
    assert isinstance(val, float)
    table = build_gl_table(CorrelationKernel(1.5), 10)
    assert table.values.dtype == np.float64


def test_near_critical_continuity():
    # quadrature just off the critical point reproduces the closed form;
    # a loose rel_tol is required because the boundary-layer error decays
    # only linearly in the point count there
    for lam in (1.0 - 1e-8, 1.0 + 1e-8):
        kernel = CorrelationKernel(lam, rel_tol=1e-4)
        for l in range(-10, 11):
            assert compute_gl(kernel, l) == pytest.approx(
                float(critical_gl_value(l)), abs=1e-4
            )


def test_near_critical_tight_tolerance_raises():
    with pytest.raises(NonConvergence):
        compute_gl(CorrelationKernel(1.0 - 1e-8), 0)


def test_near_critical_table_raises():
    with pytest.raises(NonConvergence):
        build_gl_table(CorrelationKernel(1.0 - 1e-8), 3)
