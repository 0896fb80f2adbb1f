"""Non-linear traces on matrix algebras.

Choquet- and Sugeno-type traces of positive semidefinite matrices,
eigenvalue majorization with constructive contraction factorizations,
unitarily invariant alpha-norms with Ky Fan decompositions, and sampled
2-positivity testing with certified counterexamples.
"""

from nltrace._kernels import get_backend
from nltrace.choquet import (
    are_comonotonic,
    choquet_integral,
    choquet_trace,
    random_comonotonic_pair,
)
from nltrace.majorization import (
    contraction_factor,
    decreasing_rearrangement,
    eigen_dominates,
    majorizes,
    weak_majorizes,
)
from nltrace.measures import (
    AlphaWeights,
    MonotoneMeasure,
    alpha_from_measure,
    alpha_to_coeffs,
    coeffs_to_alpha,
    is_concave,
    measure_from_alpha,
)
from nltrace.norms import (
    Block2,
    MatrixFunctional,
    alpha_norm,
    alpha_norm_functional,
    block2_assemble,
    block2_contraction,
    block2_is_positive,
    ky_fan_decomposition,
    ky_fan_norm,
    non_two_positive_witness,
    norm_axiom_check,
    schwartz_check,
    two_positivity_sample_test,
)
from nltrace.spectral import (
    SpectralFunction,
    SpectrumDecomposition,
    abs_matrix,
    apply_spectral_function,
    distinct_clusters,
    eig_desc,
    psd_sqrt,
    singular_values,
)
from nltrace.sugeno import fuzzy_meet_scalar, sugeno_integral, sugeno_trace
from nltrace.suites import run_suites

__version__ = "0.1.0"

__all__ = [
    "AlphaWeights",
    "Block2",
    "MatrixFunctional",
    "MonotoneMeasure",
    "SpectralFunction",
    "SpectrumDecomposition",
    "abs_matrix",
    "alpha_from_measure",
    "alpha_norm",
    "alpha_norm_functional",
    "alpha_to_coeffs",
    "apply_spectral_function",
    "are_comonotonic",
    "block2_assemble",
    "block2_contraction",
    "block2_is_positive",
    "choquet_integral",
    "choquet_trace",
    "coeffs_to_alpha",
    "contraction_factor",
    "decreasing_rearrangement",
    "distinct_clusters",
    "eig_desc",
    "eigen_dominates",
    "fuzzy_meet_scalar",
    "get_backend",
    "is_concave",
    "ky_fan_decomposition",
    "ky_fan_norm",
    "majorizes",
    "measure_from_alpha",
    "non_two_positive_witness",
    "norm_axiom_check",
    "psd_sqrt",
    "random_comonotonic_pair",
    "run_suites",
    "schwartz_check",
    "singular_values",
    "sugeno_integral",
    "sugeno_trace",
    "two_positivity_sample_test",
    "weak_majorizes",
]
