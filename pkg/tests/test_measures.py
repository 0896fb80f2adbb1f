import numpy as np
import pytest

from nltrace.errors import PreconditionError, SizeError
from nltrace.measures import (
    AlphaWeights,
    MonotoneMeasure,
    alpha_from_measure,
    alpha_to_coeffs,
    coeffs_to_alpha,
    is_concave,
    measure_from_alpha,
)


class TestAlphaWeights:
    def test_requires_zero_start(self):
        with pytest.raises(PreconditionError):
            AlphaWeights([1, 2, 3])

    def test_requires_monotone(self):
        with pytest.raises(PreconditionError):
            AlphaWeights([0, 2, 1])

    def test_flat_steps_allowed(self):
        alpha = AlphaWeights([0, 1, 1, 1])
        assert alpha.n == 3
        assert alpha[2] == 1.0

    def test_rejects_non_finite(self):
        with pytest.raises(PreconditionError):
            AlphaWeights([0, np.inf])


class TestMeasureFromAlpha:
    def test_counting_measure(self):
        mu = measure_from_alpha(AlphaWeights([0, 1, 2, 3]))
        assert mu.value(0b111) == 3.0
        assert mu.value(0b101) == 2.0
        assert mu.value(0b010) == 1.0
        assert mu.value(0) == 0.0

    def test_top_indicator(self):
        mu = measure_from_alpha(AlphaWeights([0, 1, 1, 1]))
        assert all(mu.value(m) == 1.0 for m in range(1, 8))

    def test_cardinality_readout(self):
        mu = measure_from_alpha(AlphaWeights([0, 0.5, 0.5, 2]))
        assert mu.value(0b010) == 0.5  # {2}
        assert mu.value(0b101) == 0.5  # {1, 3}
        assert mu.value(0b111) == 2.0

    def test_size_cap(self):
        with pytest.raises(SizeError):
            measure_from_alpha(AlphaWeights(np.zeros(22)))

    def test_permutation_invariance(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            n = int(rng.integers(1, 8))
            mu = measure_from_alpha(
                AlphaWeights(np.concatenate(([0.0], np.cumsum(rng.uniform(0, 1, n)))))
            )
            perm = rng.permutation(n)
            for _ in range(10):
                mask = int(rng.integers(0, 1 << n))
                image = 0
                for j in range(n):
                    if mask >> j & 1:
                        image |= 1 << int(perm[j])
                assert mu.value(image) == mu.value(mask)


class TestMonotoneMeasure:
    def test_rejects_nonmonotone(self):
        # {1} has larger value than {1, 2}
        with pytest.raises(PreconditionError):
            MonotoneMeasure(2, [0.0, 0.9, 0.2, 0.5])

    def test_rejects_nonzero_empty_set(self):
        with pytest.raises(PreconditionError):
            MonotoneMeasure(2, [0.1, 0.2, 0.2, 0.5])

    def test_general_measure_lookup(self):
        mu = MonotoneMeasure(2, [0.0, 0.2, 0.5, 1.0])
        assert mu.value(0b01) == 0.2
        assert mu.total() == 1.0


class TestAlphaFromMeasure:
    def test_counting(self):
        mu = measure_from_alpha(AlphaWeights([0, 1, 2, 3]))
        assert np.array_equal(alpha_from_measure(mu).alpha, [0, 1, 2, 3])

    def test_round_trip_exact(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            n = int(rng.integers(1, 8))
            alpha = AlphaWeights(np.concatenate(([0.0], np.cumsum(rng.uniform(0, 1, n)))))
            back = alpha_from_measure(measure_from_alpha(alpha))
            assert np.array_equal(back.alpha, alpha.alpha)

    def test_non_permutation_invariant_prefix_readout(self):
        # mu({1}) = 0.2, mu({1,2}) = 0.9, mu({1,2,3}) = 1; other values
        # chosen monotone.
        table = np.zeros(8)
        table[0b001] = 0.2
        table[0b010] = 0.5
        table[0b011] = 0.9
        table[0b100] = 0.1
        table[0b101] = 0.6
        table[0b110] = 0.8
        table[0b111] = 1.0
        mu = MonotoneMeasure(3, table)
        assert np.allclose(alpha_from_measure(mu).alpha, [0, 0.2, 0.9, 1.0])


class TestCoefficients:
    def test_linear_trace_weights(self):
        assert np.array_equal(alpha_to_coeffs(AlphaWeights([0, 1, 2, 3])), [1, 1, 1])

    def test_top_eigenvalue_weights(self):
        assert np.array_equal(alpha_to_coeffs(AlphaWeights([0, 1, 1, 1])), [1, 0, 0])

    def test_successive_differences(self):
        assert np.allclose(
            alpha_to_coeffs(AlphaWeights([0, 1, 1.5, 1.75])), [1, 0.5, 0.25]
        )

    def test_partial_sums(self):
        assert np.array_equal(coeffs_to_alpha([1, 1, 1]).alpha, [0, 1, 2, 3])

    def test_bottom_eigenvalue_weights(self):
        assert np.array_equal(coeffs_to_alpha([0, 0, 0, 1]).alpha, [0, 0, 0, 0, 1])

    def test_round_trips(self):
        rng = np.random.default_rng(6)
        for _ in range(30):
            n = int(rng.integers(1, 12))
            c = rng.uniform(0, 5, n)
            back = alpha_to_coeffs(coeffs_to_alpha(c))
            assert np.max(np.abs(back - c)) <= 1e-12
            alpha = AlphaWeights(np.concatenate(([0.0], np.cumsum(rng.uniform(0, 1, n)))))
            back_alpha = coeffs_to_alpha(alpha_to_coeffs(alpha))
            assert np.max(np.abs(back_alpha.alpha - alpha.alpha)) <= 1e-12

    def test_rejects_negative_coefficients(self):
        with pytest.raises(PreconditionError):
            coeffs_to_alpha([1.0, -0.5])


class TestConcavity:
    def test_linear_is_concave(self):
        assert is_concave(AlphaWeights([0, 1, 2, 3]))

    def test_flat_tail_is_concave(self):
        assert is_concave(AlphaWeights([0, 1, 1, 1]))

    def test_late_jump_is_not(self):
        assert not is_concave(AlphaWeights([0, 1, 1, 2]))

    def test_matches_decreasing_coefficients(self):
        rng = np.random.default_rng(7)
        for _ in range(100):
            n = int(rng.integers(2, 10))
            alpha = AlphaWeights(np.concatenate(([0.0], np.cumsum(rng.uniform(0, 1, n)))))
            decreasing = bool(np.all(np.diff(alpha_to_coeffs(alpha)) <= 1e-12))
            assert is_concave(alpha) == decreasing
