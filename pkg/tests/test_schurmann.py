"""Triples (rho, eta, L): evaluation identities, Poisson certificates, symmetry."""

import numpy as np
import pytest

from qperm.cohomology import h1_representatives
from qperm.errors import ValidationError
from qperm.magic import TwoBlockSpec, fourier, from_hadamard, from_permutation
from qperm.schurmann import (
    SchurmannTriple,
    cocycle_violation,
    eta,
    fourier_symmetry,
    gen_functional,
    gen_functional_batch,
    is_gaussian,
    is_symmetric_words,
    is_tracial,
    poisson_certificate,
    poisson_value,
    random_cocycle,
    symmetrize,
    triple_from_stacked,
    two_block_symmetry,
    two_block_triple,
)
from qperm.words import (
    LinComb,
    Word,
    adjoint,
    antipode,
    counit,
    defining_relations,
    parse_word,
    reduced_words,
    unit_word,
)


def cycle_triple(n=3, lam=1.0):
    """Triple on the n-cycle permutation with a constant cocycle."""
    sigma = tuple(list(range(2, n + 1)) + [1])
    rep = from_permutation(sigma)
    xs = np.full((n, 1), np.sqrt(lam), dtype=complex)
    return SchurmannTriple(rep, xs)


def fourier_triple(n, rng, scale=1.0):
    rep = from_hadamard(fourier(n))
    return SchurmannTriple(rep, random_cocycle(rep, rng, scale))


def counterexample_data():
    """A two-block instance whose generating functional is not symmetric."""
    v = np.array([1.0, 0.0, 1j])
    P = np.diag([1.0, 1.0, 0.0]).astype(complex)
    q = np.ones(3) / np.sqrt(3.0)
    Q = np.outer(q, q.conj())
    xi = (np.eye(3) - P) @ v
    zeta = (np.eye(3) - Q) @ v
    return TwoBlockSpec(P, Q), xi, zeta


class TestConstruction:
    def test_rejects_non_cocycle(self):
        rep = from_permutation((2, 3, 1))
        bad = np.array([[1.0], [2.0], [3.0]], dtype=complex)
        assert cocycle_violation(rep, bad) > 0.5
        with pytest.raises(ValidationError):
            SchurmannTriple(rep, bad)

    def test_rejects_shape_mismatch(self):
        rep = from_permutation((2, 3, 1))
        with pytest.raises(ValidationError):
            SchurmannTriple(rep, np.zeros((3, 2)))

    def test_letter_values(self):
        t = cycle_triple(3, lam=2.0)
        # L(p_ii) = -|xi_i|^2, L(p_i sigma(i)) = |xi_i|^2, other letters 0
        assert np.allclose(t.letter_L, 2.0 * (np.array([[ -1, 1, 0], [0, -1, 1], [1, 0, -1]])))

    def test_triple_from_stacked(self, rng):
        rep = from_hadamard(fourier(4))
        vec = random_cocycle(rep, rng).reshape(-1)
        t = triple_from_stacked(rep, vec)
        assert np.allclose(t.xs.reshape(-1), vec)


class TestEvaluation:
    def test_unit_values(self, rng):
        t = fourier_triple(4, rng)
        assert gen_functional(t, unit_word(4)) == 0
        assert np.allclose(eta(t, unit_word(4)), 0.0)

    def test_generator_values(self, rng):
        t = fourier_triple(4, rng)
        for i in range(1, 5):
            assert np.allclose(eta(t, parse_word(f"p({i},{i})", 4)), t.xs[i - 1])
            for j in range(1, 5):
                w = parse_word(f"p({i},{j})", 4)
                assert abs(gen_functional(t, w) - t.letter_L[i - 1, j - 1]) < 1e-12

    def test_vanishes_on_defining_relations(self, rng):
        t = fourier_triple(4, rng)
        for rel in defining_relations(4):
            assert abs(gen_functional(t, rel)) < 1e-10
            assert np.linalg.norm(eta(t, rel)) < 1e-10

    def test_hermitian(self, rng):
        t = fourier_triple(4, rng)
        for _ in range(30):
            letters = [
                (int(rng.integers(1, 5)), int(rng.integers(1, 5)))
                for _ in range(int(rng.integers(1, 5)))
            ]
            x = LinComb.from_word(Word(letters, 4), 1.0 + 0.5j)
            assert abs(gen_functional(t, adjoint(x)) - np.conj(gen_functional(t, x))) < 1e-10

    def test_cocycle_rule(self, rng):
        # eta(ab) = rho(a) eta(b) + eta(a) eps(b)
        t = fourier_triple(3, rng)
        from qperm.magic import apply

        for _ in range(20):
            la = [(int(rng.integers(1, 4)), int(rng.integers(1, 4))) for _ in range(2)]
            lb = [(int(rng.integers(1, 4)), int(rng.integers(1, 4))) for _ in range(2)]
            a, b = Word(la, 3), Word(lb, 3)
            want = apply(t.rep, a) @ eta(t, b) + eta(t, a) * counit(b)
            assert np.allclose(eta(t, a * b), want, atol=1e-10)

    def test_coboundary_identity(self, rng):
        # L(ab) = <eta(a*), eta(b)> + eps(a) L(b) + L(a) eps(b)
        t = fourier_triple(4, rng)
        for _ in range(50):
            la = [(int(rng.integers(1, 5)), int(rng.integers(1, 5))) for _ in range(2)]
            lb = [(int(rng.integers(1, 5)), int(rng.integers(1, 5))) for _ in range(2)]
            a, b = Word(la, 4), Word(lb, 4)
            want = (
                complex(np.vdot(eta(t, adjoint(a)), eta(t, b)))
                + counit(a) * gen_functional(t, b)
                + gen_functional(t, a) * counit(b)
            )
            assert abs(gen_functional(t, a * b) - want) < 1e-10

    def test_batch_matches_scalar(self, rng):
        t = fourier_triple(4, rng)
        words = reduced_words(4, 3, min_len=3)[:200]
        batch = np.array([w.letters for w in words], dtype=np.int64)
        vals = gen_functional_batch(t, batch)
        for w, v in zip(words[:40], vals[:40]):
            assert abs(gen_functional(t, w) - v) < 1e-12

    def test_batch_shape_check(self, rng):
        t = fourier_triple(3, rng)
        with pytest.raises(ValidationError):
            gen_functional_batch(t, np.zeros((4, 3), dtype=np.int64))

    def test_conditional_positivity_on_kernel(self, rng):
        # the Gram matrix L(a_i* a_j) on ker eps elements is PSD
        t = fourier_triple(4, rng)
        elems = []
        for i in range(1, 4):
            w = parse_word(f"p(1,{i + 1})", 4)
            elems.append(LinComb.from_word(w) - LinComb.unit(4, counit(w)))
        base = parse_word("p(2,1) p(1,2)", 4)
        elems.append(LinComb.from_word(base) - LinComb.unit(4, counit(base)))
        G = np.array(
            [[gen_functional(t, adjoint(a) * b) for b in elems] for a in elems]
        )
        G = 0.5 * (G + G.conj().T)
        assert float(np.linalg.eigvalsh(G).min()) >= -1e-9


class TestGaussian:
    def test_zero_triple_is_gaussian_and_flat(self):
        rep = from_hadamard(fourier(4))
        t = SchurmannTriple(rep, np.zeros((4, 4)))
        assert is_gaussian(t)
        for w in reduced_words(4, 3):
            assert gen_functional(t, w) == 0

    def test_nonzero_triple_is_not_gaussian(self, rng):
        assert not is_gaussian(fourier_triple(4, rng))


class TestPoisson:
    def test_cycle_constant_tuple_certified(self):
        t = cycle_triple(3, lam=1.5)
        cert = poisson_certificate(t)
        assert cert is not None
        assert cert.residual < 1e-10
        # no fixed points: (P_ii - I) v = xi forces v = -xi
        assert np.allclose(cert.v, -t.xs[0], atol=1e-10)

    def test_certificate_reproduces_functional(self, rng):
        t = cycle_triple(4, lam=0.7)
        cert = poisson_certificate(t)
        for w in reduced_words(4, 2):
            assert abs(poisson_value(t, cert.v, w) - gen_functional(t, w)) < 1e-10

    def test_h1_direction_rejected(self):
        rep = from_hadamard(fourier(4))
        reps = h1_representatives(rep)
        assert reps.dim == 1
        t = triple_from_stacked(rep, reps.vectors[0])
        assert poisson_certificate(t) is None


class TestSymmetry:
    def test_counterexample_detected(self):
        spec, xi, zeta = counterexample_data()
        assert abs(complex(np.vdot(zeta, xi)).imag + 1.0 / 3.0) < 1e-12
        assert not two_block_symmetry(spec, xi, zeta)
        t = two_block_triple(spec, xi, zeta)
        sym, worst = is_symmetric_words(t, max_len=3)
        assert not sym
        assert worst > 1e-6

    def test_real_instances_are_symmetric(self, rng):
        for _ in range(10):
            d = int(rng.integers(2, 5))
            A = rng.normal(size=(d, d))
            q = np.linalg.qr(A)[0]
            P = q[:, :1] @ q[:, :1].T
            B = rng.normal(size=(d, d))
            r = np.linalg.qr(B)[0]
            Q = r[:, :1] @ r[:, :1].T
            xi = (np.eye(d) - P) @ rng.normal(size=d)
            zeta = (np.eye(d) - Q) @ rng.normal(size=d)
            spec = TwoBlockSpec(P, Q)
            assert two_block_symmetry(spec, xi, zeta)
            sym, _ = is_symmetric_words(two_block_triple(spec, xi, zeta), max_len=3)
            assert sym

    def test_precondition_enforced(self):
        spec, xi, zeta = counterexample_data()
        with pytest.raises(ValidationError):
            two_block_symmetry(spec, np.array([1.0, 0.0, 0.0]), zeta)

    def test_fourier_criterion_agrees_with_word_sweep(self, rng):
        for n in (3, 4):
            for _ in range(5):
                rep = from_hadamard(fourier(n))
                xs = random_cocycle(rep, rng)
                t = SchurmannTriple(rep, xs)
                sym_words, _ = is_symmetric_words(t, max_len=3)
                assert fourier_symmetry(n, xs) == sym_words

    def test_fourier_criterion_rejects_non_cocycle(self):
        with pytest.raises(ValidationError):
            fourier_symmetry(3, np.ones((3, 3)))

    def test_symmetrize_is_symmetric(self, rng):
        t = fourier_triple(4, rng)
        ev = symmetrize(t)
        for w in reduced_words(4, 2)[:50]:
            assert abs(ev(w) - ev(antipode(w))) < 1e-10

    def test_antipode_invariance_of_symmetrized_matches_definition(self, rng):
        t = fourier_triple(3, rng)
        ev = symmetrize(t)
        w = parse_word("p(1,2) p(2,3)", 3)
        want = 0.5 * (gen_functional(t, w) + gen_functional(t, antipode(w)))
        assert abs(ev(w) - want) < 1e-14


class TestTracial:
    def test_permutation_multiplicity_one_is_tracial(self):
        assert is_tracial(cycle_triple(3), max_len=4)

    def test_counterexample_is_not_tracial(self):
        spec, xi, zeta = counterexample_data()
        t = two_block_triple(spec, xi, zeta)
        assert not is_tracial(t, max_len=4)
