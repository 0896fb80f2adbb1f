"""Property-suite runner with machine-readable reports.

Each suite turns one family of guarantees into sampled checks: the
characterization properties of the Choquet- and Sugeno-type traces, the
dominance/contraction equivalences, and the concavity / norm /
2-positivity equivalence panel.  Runs are deterministic functions of the
seed (see :mod:`nltrace.sampling` for the stream derivation), and every
property reports its instance count, failure count and worst residual.
"""

from dataclasses import dataclass, field

import numpy as np

from nltrace import config
from nltrace._kernels import get_backend
from nltrace.choquet import (
    choquet_integral,
    choquet_trace,
    random_comonotonic_pair,
)
from nltrace.errors import PreconditionError
from nltrace.majorization import (
    contraction_factor,
    eigen_dominates,
    majorizes,
    weak_majorizes,
)
from nltrace.measures import (
    AlphaWeights,
    alpha_to_coeffs,
    is_concave,
    measure_from_alpha,
)
from nltrace.norms import (
    Block2,
    alpha_norm,
    alpha_norm_functional,
    block2_contraction,
    block2_is_positive,
    ky_fan_norm,
    ky_fan_decomposition,
    non_two_positive_witness,
    norm_axiom_check,
    pick_witness_scale,
    schwartz_check,
    two_positivity_sample_test,
)
from nltrace.sampling import (
    random_alpha,
    random_concave_alpha,
    random_complex,
    random_contraction,
    random_nonconcave_alpha,
    random_psd,
    random_unitary,
    stream,
)
from nltrace.spectral import (
    apply_spectral_function,
    distinct_clusters,
    eig_desc_psd,
    psd_sqrt,
    singular_values,
    SpectralFunction,
)
from nltrace.sugeno import fuzzy_meet_scalar, sugeno_integral, sugeno_trace

SUITE_NAMES = ("choquet", "sugeno", "majorization", "norms")
PANEL_SAMPLES = 500


@dataclass
class PropertyReport:
    name: str
    instances: int
    failures: int
    worst_residual: float
    seed: int

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "instances": self.instances,
            "failures": self.failures,
            "worst_residual": float(self.worst_residual),
            "seed": self.seed,
        }


@dataclass
class SuiteReport:
    suite: str
    seed: int
    n_max: int
    samples: int
    backend: str = field(default_factory=get_backend)
    properties: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(p.failures == 0 for p in self.properties)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "n_max": self.n_max,
            "samples": self.samples,
            "backend": self.backend,
            "properties": [p.to_dict() for p in self.properties],
            "pass": self.passed,
        }


class _Property:
    """Accumulates per-instance residuals; failure = residual above 0."""

    def __init__(self, name: str, seed: int):
        self.name = name
        self.seed = seed
        self.instances = 0
        self.failures = 0
        self.worst = 0.0

    def record(self, excess: float):
        """excess > 0 means the tolerance was exceeded by that amount."""
        self.instances += 1
        if excess > 0:
            self.failures += 1
        self.worst = max(self.worst, float(excess))

    def report(self) -> PropertyReport:
        return PropertyReport(
            name=self.name,
            instances=self.instances,
            failures=self.failures,
            worst_residual=self.worst,
            seed=self.seed,
        )


def _dims(rng: np.random.Generator, n_max: int, n_min: int = 2) -> int:
    return int(rng.integers(n_min, n_max + 1))


def _check_args(n_max: int, samples: int):
    if not 2 <= n_max <= 8:
        raise PreconditionError(f"n must be in 2..8, got {n_max}")
    if samples < 1:
        raise PreconditionError(f"samples must be >= 1, got {samples}")


def _comonotonic_images(a, rng):
    """Random comonotonic pair lifted through the spectrum of a PSD matrix."""
    spec = eig_desc_psd(a)
    m = len(distinct_clusters(spec))
    f, g = random_comonotonic_pair(m, rng)
    return spec, f, g


def run_choquet_suite(n_max: int, samples: int, seed: int) -> SuiteReport:
    """Characterization properties of the Choquet-type trace."""
    _check_args(n_max, samples)
    tol = config.comparison_tol()
    rep = SuiteReport(suite="choquet", seed=seed, n_max=n_max, samples=samples)

    prop = _Property("comonotonic_additivity", seed)
    for i in range(samples):
        rng = stream(seed, "choquet.comonotonic_additivity", i)
        n = _dims(rng, n_max)
        alpha = random_alpha(n, rng)
        spec, f, g = _comonotonic_images(random_psd(n, rng), rng)
        fa = apply_spectral_function(spec, f)
        ga = apply_spectral_function(spec, g)
        lhs = choquet_trace(fa + ga, alpha)
        ra, rb = choquet_trace(fa, alpha), choquet_trace(ga, alpha)
        prop.record(abs(lhs - ra - rb) - tol * (1.0 + abs(ra) + abs(rb)))
    rep.properties.append(prop.report())

    prop = _Property("unitary_invariance", seed)
    for i in range(samples):
        rng = stream(seed, "choquet.unitary_invariance", i)
        n = _dims(rng, n_max)
        alpha = random_alpha(n, rng)
        a = random_psd(n, rng)
        u = random_unitary(n, rng)
        val = choquet_trace(a, alpha)
        prop.record(
            abs(choquet_trace(u @ a @ u.conj().T, alpha) - val) - tol * (1.0 + val)
        )
    rep.properties.append(prop.report())

    prop = _Property("monotonicity", seed)
    for i in range(samples):
        rng = stream(seed, "choquet.monotonicity", i)
        n = _dims(rng, n_max)
        alpha = random_alpha(n, rng)
        a = random_psd(n, rng)
        p = random_psd(n, rng)
        prop.record(choquet_trace(a, alpha) - choquet_trace(a + p, alpha) - tol)
    rep.properties.append(prop.report())

    prop = _Property("positive_homogeneity", seed)
    for i in range(samples):
        rng = stream(seed, "choquet.positive_homogeneity", i)
        n = _dims(rng, n_max)
        alpha = random_alpha(n, rng)
        a = random_psd(n, rng)
        k = float(rng.uniform(0.0, 10.0))
        val = choquet_trace(a, alpha)
        prop.record(
            abs(choquet_trace(k * a, alpha) - k * val) - tol * (1.0 + k * val)
        )
    rep.properties.append(prop.report())

    prop = _Property("coefficient_cone_identity", seed)
    for i in range(samples):
        rng = stream(seed, "choquet.coefficient_cone_identity", i)
        n = _dims(rng, n_max)
        alpha = random_alpha(n, rng)
        a = random_psd(n, rng)
        val = choquet_trace(a, alpha)
        direct = float(
            np.dot(alpha_to_coeffs(alpha), eig_desc_psd(a).eigenvalues)
        )
        prop.record(abs(val - direct) - 1e-9 * (1.0 + abs(val)))
    rep.properties.append(prop.report())

    prop = _Property("scalar_consistency", seed)
    for i in range(samples):
        rng = stream(seed, "choquet.scalar_consistency", i)
        n = _dims(rng, n_max)
        alpha = random_alpha(n, rng)
        x = rng.uniform(0.0, 10.0, n)
        lhs = choquet_trace(np.diag(x).astype(np.complex128), alpha)
        rhs = choquet_integral(x, measure_from_alpha(alpha))
        prop.record(abs(lhs - rhs) - 1e-10)
    rep.properties.append(prop.report())

    prop = _Property("counting_measure_reduction", seed)
    for i in range(samples):
        rng = stream(seed, "choquet.counting_measure_reduction", i)
        n = _dims(rng, n_max)
        counting = measure_from_alpha(AlphaWeights(np.arange(n + 1, dtype=float)))
        x = rng.uniform(0.0, 10.0, n)
        total = float(np.sum(x))
        prop.record(abs(choquet_integral(x, counting) - total) - 1e-12 * (1.0 + total))
    rep.properties.append(prop.report())

    return rep


def run_sugeno_suite(n_max: int, samples: int, seed: int) -> SuiteReport:
    """Characterization properties of the Sugeno-type trace."""
    _check_args(n_max, samples)
    tol = config.comparison_tol()
    rep = SuiteReport(suite="sugeno", seed=seed, n_max=n_max, samples=samples)

    prop = _Property("comonotonic_max_additivity", seed)
    for i in range(samples):
        rng = stream(seed, "sugeno.comonotonic_max_additivity", i)
        n = _dims(rng, n_max)
        alpha = random_alpha(n, rng)
        spec, f, g = _comonotonic_images(random_psd(n, rng), rng)
        join = SpectralFunction(values=np.maximum(f.values, g.values))
        lhs = sugeno_trace(apply_spectral_function(spec, join), alpha)
        rhs = max(
            sugeno_trace(apply_spectral_function(spec, f), alpha),
            sugeno_trace(apply_spectral_function(spec, g), alpha),
        )
        prop.record(abs(lhs - rhs) - tol)
    rep.properties.append(prop.report())

    prop = _Property("unitary_invariance", seed)
    for i in range(samples):
        rng = stream(seed, "sugeno.unitary_invariance", i)
        n = _dims(rng, n_max)
        alpha = random_alpha(n, rng)
        a = random_psd(n, rng)
        u = random_unitary(n, rng)
        prop.record(
            abs(sugeno_trace(u @ a @ u.conj().T, alpha) - sugeno_trace(a, alpha)) - tol
        )
    rep.properties.append(prop.report())

    prop = _Property("monotonicity", seed)
    for i in range(samples):
        rng = stream(seed, "sugeno.monotonicity", i)
        n = _dims(rng, n_max)
        alpha = random_alpha(n, rng)
        a = random_psd(n, rng)
        p = random_psd(n, rng)
        prop.record(sugeno_trace(a, alpha) - sugeno_trace(a + p, alpha) - tol)
    rep.properties.append(prop.report())

    prop = _Property("meet_homogeneity", seed)
    for i in range(samples):
        rng = stream(seed, "sugeno.meet_homogeneity", i)
        n = _dims(rng, n_max)
        alpha = random_alpha(n, rng)
        a = random_psd(n, rng)
        k = float(rng.uniform(0.0, 1.5 * (alpha[n] + 1.0)))
        lhs = sugeno_trace(fuzzy_meet_scalar(a, k), alpha)
        rhs = min(k, sugeno_trace(a, alpha))
        prop.record(abs(lhs - rhs) - tol)
    rep.properties.append(prop.report())

    prop = _Property("identity_saturation", seed)
    for i in range(samples):
        rng = stream(seed, "sugeno.identity_saturation", i)
        n = _dims(rng, n_max)
        alpha = random_alpha(n, rng)
        # Alternate below/above the saturation level alpha(n).
        c = float(rng.uniform(0.0, alpha[n] if i % 2 == 0 else 3.0 * alpha[n] + 1.0))
        lhs = sugeno_trace(c * np.eye(n, dtype=np.complex128), alpha)
        prop.record(abs(lhs - min(c, alpha[n])) - tol)
    rep.properties.append(prop.report())

    prop = _Property("scalar_consistency", seed)
    for i in range(samples):
        rng = stream(seed, "sugeno.scalar_consistency", i)
        n = _dims(rng, n_max)
        alpha = random_alpha(n, rng)
        x = rng.uniform(0.0, 10.0, n)
        lhs = sugeno_trace(np.diag(x).astype(np.complex128), alpha)
        rhs = sugeno_integral(x, measure_from_alpha(alpha))
        prop.record(abs(lhs - rhs) - 1e-10)
    rep.properties.append(prop.report())

    prop = _Property("value_bound", seed)
    for i in range(samples):
        rng = stream(seed, "sugeno.value_bound", i)
        n = _dims(rng, n_max)
        alpha = random_alpha(n, rng)
        a = random_psd(n, rng)
        val = sugeno_trace(a, alpha)
        top = float(eig_desc_psd(a).eigenvalues[0])
        prop.record(max(-val, val - min(top, alpha[n])) - 1e-12)
    rep.properties.append(prop.report())

    return rep


def _dominated_pair(n: int, rng: np.random.Generator):
    """(a, b) with b eigen-dominating a, via a contraction transform of b."""
    b = random_psd(n, rng)
    c0 = random_contraction(n, rng)
    a = c0 @ b @ c0.conj().T
    return 0.5 * (a + a.conj().T), b


def _level_alpha(n: int, i: int) -> AlphaWeights:
    """Weights 0 up to i-1 then 1: the trace picking the i-th eigenvalue."""
    a = np.zeros(n + 1)
    a[i:] = 1.0
    return AlphaWeights(a)


def run_majorization_suite(n_max: int, samples: int, seed: int) -> SuiteReport:
    """Dominance, contraction factorization and majorization order relations."""
    _check_args(n_max, samples)
    tol = config.comparison_tol()
    rep = SuiteReport(suite="majorization", seed=seed, n_max=n_max, samples=samples)

    prop = _Property("contraction_transform_dominated", seed)
    for i in range(samples):
        rng = stream(seed, "majorization.contraction_transform_dominated", i)
        n = _dims(rng, n_max)
        a, b = _dominated_pair(n, rng)
        la = eig_desc_psd(a).eigenvalues
        lb = eig_desc_psd(b).eigenvalues
        excess = float(np.max(la - lb)) / (1.0 + float(lb[0]))
        prop.record(excess - tol)
    rep.properties.append(prop.report())

    prop = _Property("dominance_factorization", seed)
    for i in range(samples):
        rng = stream(seed, "majorization.dominance_factorization", i)
        n = _dims(rng, n_max)
        a, b = _dominated_pair(n, rng)
        c = contraction_factor(a, b)
        norm_excess = float(singular_values(c)[0]) - (1.0 + tol)
        recon = float(np.linalg.norm(a - c @ b @ c.conj().T, "fro"))
        recon_excess = recon - 1e-7 * (1.0 + float(np.linalg.norm(b, "fro")))
        prop.record(max(norm_excess, recon_excess))
    rep.properties.append(prop.report())

    prop = _Property("spanning_family_equivalence", seed)
    for i in range(samples):
        rng = stream(seed, "majorization.spanning_family_equivalence", i)
        n = _dims(rng, n_max)
        if i % 2 == 0:
            a, b = _dominated_pair(n, rng)
        else:
            a, b = random_psd(n, rng), random_psd(n, rng)
        dom = eigen_dominates(b, a)
        scale = 1.0 + float(eig_desc_psd(b).eigenvalues[0])
        family = all(
            choquet_trace(a, _level_alpha(n, j))
            <= choquet_trace(b, _level_alpha(n, j)) + tol * scale
            for j in range(1, n + 1)
        )
        ok = dom == family
        if ok and dom:
            alpha = random_alpha(n, rng)
            va, vb = choquet_trace(a, alpha), choquet_trace(b, alpha)
            ok = va <= vb + tol * (1.0 + vb)
        prop.record(0.0 if ok else 1.0)
    rep.properties.append(prop.report())

    prop = _Property("order_implies_dominance", seed)
    for i in range(samples):
        rng = stream(seed, "majorization.order_implies_dominance", i)
        n = _dims(rng, n_max)
        a = random_psd(n, rng)
        p = random_psd(n, rng)
        prop.record(0.0 if eigen_dominates(a + p, a) else 1.0)
    rep.properties.append(prop.report())

    prop = _Property("dominance_implies_weak_majorization", seed)
    for i in range(samples):
        rng = stream(seed, "majorization.dominance_implies_weak_majorization", i)
        n = _dims(rng, n_max)
        a, b = _dominated_pair(n, rng)
        ok = weak_majorizes(eig_desc_psd(b).eigenvalues, eig_desc_psd(a).eigenvalues)
        prop.record(0.0 if ok else 1.0)
    rep.properties.append(prop.report())

    prop = _Property("majorization_implies_weak", seed)
    for i in range(samples):
        rng = stream(seed, "majorization.majorization_implies_weak", i)
        n = _dims(rng, n_max)
        y = rng.standard_normal(n) * 3.0
        # Convex mix of permutations of y is majorized by y.
        x = np.mean([rng.permutation(y) for _ in range(3)], axis=0)
        ok = majorizes(y, x) and weak_majorizes(y, x)
        prop.record(0.0 if ok else 1.0)
    rep.properties.append(prop.report())

    return rep


def concavity_panel(n_max: int, seed: int):
    """Panel of (alpha, is_concave_expected) pairs for n in 3..n_max.

    Three concave and three non-concave members per dimension; all
    non-concave members keep alpha(1) > 0 so the norm-axiom sampler
    applies.
    """
    n_low = 3
    if n_max < n_low:
        raise PreconditionError("concavity panel needs n_max >= 3")
    panel = []
    for n in range(n_low, n_max + 1):
        rng = stream(seed, "norms.panel", n)
        panel.append((AlphaWeights(np.arange(n + 1, dtype=float)), True))
        flat = np.ones(n + 1)
        flat[0] = 0.0
        panel.append((AlphaWeights(flat), True))
        panel.append((random_concave_alpha(n, rng), True))
        bump = np.arange(n + 1, dtype=float)
        bump[-1] += 1.0  # last step doubles: concavity fails at i = n-1
        panel.append((AlphaWeights(bump), False))
        panel.append((random_nonconcave_alpha(n, rng), False))
        panel.append((random_nonconcave_alpha(n, rng), False))
    return panel


def run_norms_suite(
    n_max: int, samples: int, seed: int, panel_samples: int = PANEL_SAMPLES
) -> SuiteReport:
    """Concavity / norm / 2-positivity equivalence panel plus block lemmas."""
    _check_args(n_max, samples)
    tol = config.comparison_tol()
    rep = SuiteReport(suite="norms", seed=seed, n_max=n_max, samples=samples)
    panel = concavity_panel(max(n_max, 3), seed)
    child_seed = [
        int(stream(seed, "norms.child_seeds", i).integers(0, 2**63))
        for i in range(len(panel))
    ]

    prop = _Property("concavity_matches_decreasing_coeffs", seed)
    for idx, (alpha, expected) in enumerate(panel):
        coeffs = alpha_to_coeffs(alpha)
        decreasing = bool(np.all(np.diff(coeffs) <= 1e-12))
        agree = is_concave(alpha) == decreasing == expected
        prop.record(0.0 if agree else 1.0)
    for i in range(samples):
        rng = stream(seed, "norms.concavity_random", i)
        alpha = random_alpha(_dims(rng, n_max), rng)
        decreasing = bool(np.all(np.diff(alpha_to_coeffs(alpha)) <= 1e-12))
        prop.record(0.0 if is_concave(alpha) == decreasing else 1.0)
    rep.properties.append(prop.report())

    prop = _Property("concave_norm_axioms", seed)
    for idx, (alpha, expected) in enumerate(panel):
        if not expected:
            continue
        report = norm_axiom_check(alpha, panel_samples, child_seed[idx])
        prop.record(float(report.total_violations))
    rep.properties.append(prop.report())

    prop = _Property("concave_two_positive", seed)
    for idx, (alpha, expected) in enumerate(panel):
        if not expected:
            continue
        report = two_positivity_sample_test(
            alpha_norm_functional(alpha), alpha.n, panel_samples, child_seed[idx]
        )
        prop.record(float(report.violations))
    rep.properties.append(prop.report())

    prop = _Property("nonconcave_witness_certified", seed)
    for idx, (alpha, expected) in enumerate(panel):
        if expected:
            continue
        coeffs = alpha_to_coeffs(alpha)
        rising = np.nonzero(coeffs[:-1] < coeffs[1:] - 1e-12)[0]
        if rising.size == 0:
            prop.record(1.0)
            continue
        k = int(rising[0]) + 1
        witness = non_two_positive_witness(coeffs, k, pick_witness_scale(coeffs, k))
        certified = witness.determinant < 0 and block2_is_positive(witness.block())
        prop.record(0.0 if certified else 1.0)
    rep.properties.append(prop.report())

    prop = _Property("nonconcave_triangle_violation", seed)
    for idx, (alpha, expected) in enumerate(panel):
        if expected:
            continue
        report = norm_axiom_check(alpha, min(samples, 50), child_seed[idx])
        prop.record(0.0 if report.triangle_violations >= 1 else 1.0)
    rep.properties.append(prop.report())

    prop = _Property("block_factorization_roundtrip", seed)
    for i in range(samples):
        rng = stream(seed, "norms.block_factorization_roundtrip", i)
        n = _dims(rng, n_max)
        a = random_psd(n, rng)
        b = random_psd(n, rng)
        k0 = random_contraction(n, rng)
        c = psd_sqrt(a) @ k0 @ psd_sqrt(b)
        blk = Block2(a=a, b=b, c=c)
        if not block2_is_positive(blk):
            prop.record(1.0)
            continue
        k = block2_contraction(blk)
        norm_excess = float(singular_values(k)[0]) - (1.0 + 1e-7)
        recon = float(
            np.linalg.norm(blk.c - psd_sqrt(a) @ k @ psd_sqrt(b), "fro")
        )
        recon_excess = recon - 1e-7 * (1.0 + float(np.linalg.norm(blk.c, "fro")))
        prop.record(max(norm_excess, recon_excess))
    rep.properties.append(prop.report())

    prop = _Property("schwartz_from_positive_blocks", seed)
    for i in range(samples):
        rng = stream(seed, "norms.schwartz_from_positive_blocks", i)
        n = _dims(rng, n_max)
        alpha = random_concave_alpha(n, rng)
        phi = alpha_norm_functional(alpha)
        a = random_psd(n, rng)
        b = random_psd(n, rng)
        k0 = random_contraction(n, rng)
        x = psd_sqrt(a)
        y = k0 @ psd_sqrt(b)
        ok = schwartz_check(phi, x, y)
        prop.record(0.0 if ok else 1.0)
    rep.properties.append(prop.report())

    prop = _Property("kyfan_reconstruction", seed)
    for i in range(samples):
        rng = stream(seed, "norms.kyfan_reconstruction", i)
        n = _dims(rng, n_max)
        alpha = random_concave_alpha(n, rng)
        weights = ky_fan_decomposition(alpha)
        a = random_complex(n, rng)
        direct = alpha_norm(a, alpha)
        combined = float(
            sum(w * ky_fan_norm(a, k + 1) for k, w in enumerate(weights))
        )
        prop.record(abs(direct - combined) - tol * (1.0 + direct))
    rep.properties.append(prop.report())

    return rep


_RUNNERS = {
    "choquet": run_choquet_suite,
    "sugeno": run_sugeno_suite,
    "majorization": run_majorization_suite,
    "norms": run_norms_suite,
}


def run_suites(which: str, n_max: int, samples: int, seed: int):
    """Run one named suite or all of them; returns a list of SuiteReports."""
    if which == "all":
        names = SUITE_NAMES
    elif which in _RUNNERS:
        names = (which,)
    else:
        raise PreconditionError(f"unknown suite {which!r}")
    return [_RUNNERS[name](n_max, samples, seed) for name in names]
