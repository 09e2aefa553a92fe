"""Entanglement entropy of two blocks of spins in the critical Ising chain.

Library layout:

- ``corr``        ground-state correlators g_l of the infinite chain
- ``blockmatrix`` skew-symmetric block-Toeplitz correlation matrices
- ``spectral``    nu-spectra and block entropies (bits)
- ``analytic``    closed forms: critical g_l, L = 1 and L = 2 results, lam = 0
- ``fitmodel``    the fitted constant K and the closed-form entropy surface
- ``oracle``      finite-chain brute force: exact diagonalization + free fermions
- ``cli``         reproducible scans with CSV/JSON output
"""

__version__ = "0.1.0"

from .corr import CorrelationKernel, GlTable, build_gl_table, compute_gl
from .blockmatrix import (
    MajoranaBlock,
    SkewCorrMatrix,
    build_gamma_padded,
    build_gamma_single,
    build_gamma_two_blocks,
    build_gamma_two_blocks_by_deletion,
    build_pi,
    build_toeplitz_rect,
)
from .spectral import (
    EntropySpectrum,
    entropy_from_spectrum,
    entropy_of_matrix,
    entropy_single_block,
    entropy_two_blocks,
    nu_spectrum,
    shannon_bit,
)
from .analytic import (
    QuarticCoefficients,
    critical_gl,
    l1_eigenvalues,
    l1_entropy,
    l1_entropy_d0_exact,
    l1_entropy_limit,
    l2_asymptotic_eigenvalues,
    l2_quartic,
    lambda0_entropy,
)
from .fitmodel import (
    FitResult,
    ModelParams,
    cc_asymptote,
    collect_fit_data,
    delta_s,
    delta_s_limit,
    fit_k,
    k_of_l,
    k_of_l_expansion,
    model_entropy,
)
from .oracle import (
    FiniteChainSpec,
    FreeFermionResult,
    GroundState,
    SubsystemMask,
    ed_ground_state,
    ff_finite_correlations,
    mask_gamma,
    masked_entropy,
    reduced_entropy,
)

__all__ = [
    "CorrelationKernel",
    "GlTable",
    "build_gl_table",
    "compute_gl",
    "MajoranaBlock",
    "SkewCorrMatrix",
    "build_pi",
    "build_toeplitz_rect",
    "build_gamma_single",
    "build_gamma_padded",
    "build_gamma_two_blocks",
    "build_gamma_two_blocks_by_deletion",
    "EntropySpectrum",
    "nu_spectrum",
    "shannon_bit",
    "entropy_from_spectrum",
    "entropy_of_matrix",
    "entropy_single_block",
    "entropy_two_blocks",
    "QuarticCoefficients",
    "critical_gl",
    "l1_eigenvalues",
    "l1_entropy",
    "l1_entropy_d0_exact",
    "l1_entropy_limit",
    "l2_quartic",
    "l2_asymptotic_eigenvalues",
    "lambda0_entropy",
    "FitResult",
    "ModelParams",
    "fit_k",
    "collect_fit_data",
    "model_entropy",
    "k_of_l",
    "k_of_l_expansion",
    "cc_asymptote",
    "delta_s",
    "delta_s_limit",
    "FiniteChainSpec",
    "SubsystemMask",
    "GroundState",
    "FreeFermionResult",
    "ed_ground_state",
    "reduced_entropy",
    "ff_finite_correlations",
    "mask_gamma",
    "masked_entropy",
    "__version__",
]
