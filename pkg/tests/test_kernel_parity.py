"""Compiled kernel agrees with the pure-Python fallback on every entry point."""

import pytest

from qperm import _kernel
from qperm import _wordkernel_py as pure

compiled = pytest.importorskip("qperm._wordkernel", reason="compiled kernel not built")


def random_letters(rng, n, length):
    return tuple(
        (int(rng.integers(1, n + 1)), int(rng.integers(1, n + 1))) for _ in range(length)
    )


def test_active_kernel_is_compiled():
    assert _kernel.COMPILED
    assert _kernel.reduce_letters is compiled.reduce_letters


def test_reduce_letters_parity(rng):
    for _ in range(500):
        n = int(rng.integers(2, 6))
        letters = random_letters(rng, n, int(rng.integers(0, 9)))
        assert compiled.reduce_letters(letters) == pure.reduce_letters(letters)


def test_expand_legs_parity(rng):
    for _ in range(30):
        n = int(rng.integers(2, 5))
        letters = random_letters(rng, n, int(rng.integers(1, 4)))
        legs = int(rng.integers(2, 4))
        assert compiled.expand_legs(letters, n, legs) == pure.expand_legs(letters, n, legs)


def test_expand_legs_parity_on_unit():
    assert compiled.expand_legs((), 3, 2) == pure.expand_legs((), 3, 2)


@pytest.mark.parametrize("n,length", [(2, 4), (3, 3), (4, 2), (5, 2)])
def test_reduced_words_exact_parity(n, length):
    a = compiled.reduced_words_exact(n, length)
    b = pure.reduced_words_exact(n, length)
    assert sorted(a) == sorted(b)
    assert len(a) == n * n * (n - 1) ** (2 * (length - 1))
