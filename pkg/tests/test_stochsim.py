"""Classical-permutation Levy processes: exact marginals, sampling, bridge triple."""

import numpy as np
import pytest
import scipy.stats

from qperm.errors import ValidationError
from qperm.schurmann import gen_functional
from qperm.semigroup import fundamental_semigroup, generator_matrix
from qperm.stochsim import (
    MarginalEstimate,
    PermProcessSpec,
    exact_marginals,
    path_sample,
    process_triple,
    simulate_marginals,
)
from qperm.words import parse_word


CYCLE4 = PermProcessSpec((2, 3, 4, 1), [1.0])
MIXED = PermProcessSpec((2, 1, 4, 5, 3, 6), [0.5, 1.5])  # (1 2)(3 4 5), 6 fixed


class TestSpec:
    def test_cycle_alignment(self):
        assert MIXED.cycles == [(1, 2), (3, 4, 5)]
        assert MIXED.rates == (0.5, 1.5)
        assert MIXED.n == 6

    def test_dict_rates_by_min_element(self):
        spec = PermProcessSpec((2, 1, 4, 5, 3, 6), {1: 0.5, 3: 1.5})
        assert spec.rates == MIXED.rates

    def test_dict_rates_by_cycle_tuple(self):
        spec = PermProcessSpec((2, 1, 4, 5, 3, 6), {(4, 5, 3): 1.5, (1, 2): 0.5})
        assert spec.rates == MIXED.rates

    def test_rate_count_mismatch(self):
        with pytest.raises(ValidationError):
            PermProcessSpec((2, 1, 3), [1.0, 2.0])

    def test_missing_dict_rate(self):
        with pytest.raises(ValidationError):
            PermProcessSpec((2, 1, 4, 5, 3, 6), {1: 0.5})

    def test_nonpositive_rate(self):
        with pytest.raises(ValidationError):
            PermProcessSpec((2, 1), [0.0])

    def test_identity_needs_no_rates(self):
        spec = PermProcessSpec((1, 2, 3), [])
        assert spec.cycles == []


class TestExactMarginals:
    def test_time_zero_is_identity(self):
        assert np.allclose(exact_marginals(MIXED, 0.0), np.eye(6))

    def test_rows_are_distributions(self):
        M = exact_marginals(MIXED, 0.8)
        assert float(M.min()) >= 0.0
        assert np.allclose(M.sum(axis=1), 1.0, atol=1e-12)

    def test_transposition_diagonal_frozen(self):
        # ell = 2, lam = 1, t = 1: P(even count) = e^{-1} cosh(1)
        spec = PermProcessSpec((2, 1), [1.0])
        M = exact_marginals(spec, 1.0)
        assert abs(M[0, 0] - 0.5676676416183064) < 1e-15
        assert abs(M[0, 1] - (1.0 - 0.5676676416183064)) < 1e-15

    def test_cycle_entry_is_modular_poisson_sum(self):
        lam, t = 0.7, 1.3
        M = exact_marginals(PermProcessSpec((2, 3, 4, 1), [lam]), t)
        for r in range(4):
            direct = float(scipy.stats.poisson.pmf(np.arange(r, 80, 4), lam * t).sum())
            assert abs(M[0, r] - direct) < 1e-12

    def test_chapman_kolmogorov(self):
        for s, u in ((0.3, 0.4), (0.1, 1.1)):
            lhs = exact_marginals(MIXED, s) @ exact_marginals(MIXED, u)
            assert np.allclose(lhs, exact_marginals(MIXED, s + u), atol=1e-12)

    def test_cross_cycle_entries_vanish(self):
        M = exact_marginals(MIXED, 2.0)
        assert M[0, 2] == 0.0
        assert M[3, 0] == 0.0
        assert M[5, 5] == 1.0
        assert np.allclose(M[5, :5], 0.0)

    def test_tiny_rate_is_near_identity(self):
        spec = PermProcessSpec((2, 3, 1), [1e-9])
        assert np.allclose(exact_marginals(spec, 1.0), np.eye(3), atol=1e-8)

    def test_negative_time_rejected(self):
        with pytest.raises(ValidationError):
            exact_marginals(MIXED, -0.5)


class TestSimulate:
    def test_deterministic_for_fixed_seed(self):
        a = simulate_marginals(MIXED, 0.7, 5000, seed=3)
        b = simulate_marginals(MIXED, 0.7, 5000, seed=3)
        assert np.array_equal(a.probs, b.probs)
        assert np.array_equal(a.stderr, b.stderr)

    def test_block_partition_is_part_of_the_stream_layout(self):
        # per-block substreams: a fixed (seed, block_size) pair is reproducible,
        # and any partition stays calibrated against the exact law
        exact = exact_marginals(MIXED, 0.7)
        for bs in (512, 1 << 16):
            a = simulate_marginals(MIXED, 0.7, 3000, seed=5, block_size=bs)
            b = simulate_marginals(MIXED, 0.7, 3000, seed=5, block_size=bs)
            assert np.array_equal(a.probs, b.probs)
            assert np.all(np.abs(a.probs - exact) <= 5.0 * (a.stderr + 1e-12) + 1e-9)

    def test_within_stderr_of_exact(self):
        est = simulate_marginals(MIXED, 1.0, 40000, seed=11)
        exact = exact_marginals(MIXED, 1.0)
        guard = est.stderr + 1e-12
        assert np.all(np.abs(est.probs - exact) <= 4.0 * guard + 1e-9)

    def test_fixed_point_entries_exact(self):
        est = simulate_marginals(MIXED, 1.0, 1000, seed=0)
        assert est.probs[5, 5] == 1.0
        assert est.stderr[5, 5] == 0.0

    def test_rows_are_distributions(self):
        est = simulate_marginals(CYCLE4, 0.9, 2000, seed=1)
        assert np.allclose(est.probs.sum(axis=1), 1.0, atol=1e-12)

    def test_estimate_is_frozen(self):
        est = simulate_marginals(CYCLE4, 0.5, 100, seed=0)
        assert isinstance(est, MarginalEstimate)
        with pytest.raises(ValueError):
            est.probs[0, 0] = 2.0

    def test_sample_count_validated(self):
        with pytest.raises(ValidationError):
            simulate_marginals(CYCLE4, 0.5, 0, seed=0)


class TestPathSample:
    def test_grid_values_cover_exact_distribution(self):
        # empirical law of X_t(1) over many paths vs the exact row, chi-square
        t = 0.9
        exact_row = exact_marginals(CYCLE4, t)[0]
        counts = np.zeros(4)
        paths = 4000
        for k in range(paths):
            state = path_sample(CYCLE4, [t], seed=1000 + k)[0]
            counts[state[0] - 1] += 1
        result = scipy.stats.chisquare(counts, exact_row * paths)
        assert result.pvalue > 1e-3

    def test_identity_permutation_constant_path(self):
        spec = PermProcessSpec((1, 2, 3), [])
        states = path_sample(spec, [0.0, 1.0, 5.0], seed=2)
        assert states == [(1, 2, 3)] * 3

    def test_time_zero_is_identity_map(self):
        state = path_sample(MIXED, [0.0], seed=9)[0]
        assert state == (1, 2, 3, 4, 5, 6)

    def test_paths_move_only_along_cycles(self):
        for seed in range(5):
            for state in path_sample(MIXED, [0.5, 1.5, 2.5], seed=seed):
                assert state[5] == 6  # the fixed point never moves
                assert set(state[:2]) == {1, 2}
                assert set(state[2:5]) == {3, 4, 5}

    def test_grid_must_be_sorted(self):
        with pytest.raises(ValidationError):
            path_sample(CYCLE4, [1.0, 0.5], seed=0)
        with pytest.raises(ValidationError):
            path_sample(CYCLE4, [-1.0, 0.5], seed=0)

    def test_path_is_right_continuous_in_jumps(self):
        # consecutive grid states differ by an admissible cycle power
        grid = np.linspace(0.0, 3.0, 31)
        states = path_sample(CYCLE4, grid, seed=7)
        seen = {s[0] for s in states}
        assert seen <= {1, 2, 3, 4}
        assert len(states) == 31


class TestProcessTriple:
    def test_semigroup_reproduces_exact_marginals(self):
        t = process_triple(MIXED)
        for time in (0.0, 0.4, 1.3):
            T = fundamental_semigroup(t, time)
            assert np.allclose(T, exact_marginals(MIXED, time), atol=1e-12)

    def test_generator_rates(self):
        t = process_triple(MIXED)
        A = generator_matrix(t)
        assert abs(A[0, 0] + 0.5) < 1e-12
        assert abs(A[0, 1] - 0.5) < 1e-12
        assert abs(A[2, 3] - 1.5) < 1e-12
        assert abs(A[5, 5]) < 1e-12

    def test_identity_process_has_zero_generator(self):
        spec = PermProcessSpec((1, 2), [])
        t = process_triple(spec)
        assert np.allclose(generator_matrix(t), 0.0)

    def test_custom_vectors_cross_cycle_value(self):
        # L(p_ii p_i'i') = <v, w> - |v|^2 - |w|^2 for i, i' in different cycles
        v = np.array([1.0, 1.0]) / np.sqrt(2.0)
        w = np.array([1.0, -1.0j]) / np.sqrt(2.0)
        spec = PermProcessSpec((2, 1, 4, 3), [1.0, 1.0])
        t = process_triple(spec, vectors=[v, w])
        word = parse_word("p(1,1) p(3,3)", 4)
        want = complex(np.vdot(v, w)) - 1.0 - 1.0
        assert abs(gen_functional(t, word) - want) < 1e-12

    def test_custom_vectors_validated(self):
        spec = PermProcessSpec((2, 1, 4, 3), [1.0, 1.0])
        with pytest.raises(ValidationError):
            process_triple(spec, vectors=[np.ones(2)])
        with pytest.raises(ValidationError):
            process_triple(spec, vectors=[np.ones(2), np.zeros(2)])

    def test_vector_rescaling_preserves_rates(self):
        spec = PermProcessSpec((2, 1, 4, 3), [0.3, 2.0])
        t = process_triple(spec, vectors=[np.array([5.0, 0.0]), np.array([1.0, 1.0])])
        A = generator_matrix(t)
        assert abs(A[0, 1] - 0.3) < 1e-12
        assert abs(A[2, 3] - 2.0) < 1e-12
