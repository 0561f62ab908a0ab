"""Benchmark the compiled word kernel against the pure-Python fallback.

Run after installing the package:

    python benchmarks/bench_kernel.py [--repeat 5]

Times the hot kernel entry points (word reduction, coproduct leg expansion,
reduced-word enumeration) on both implementations and prints the speedup.
"""

from __future__ import annotations

import argparse
import time

from qperm import _wordkernel_py as pure

try:
    from qperm import _wordkernel as compiled
except ImportError:
    compiled = None


def _best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _tasks():
    letters_batch = []
    n = 4
    # deterministic batch of raw words, many of which collapse or die
    state = 12345
    for _ in range(20_000):
        word = []
        for _ in range(6):
            state = (1103515245 * state + 12345) % (1 << 31)
            i = state % n + 1
            state = (1103515245 * state + 12345) % (1 << 31)
            j = state % n + 1
            word.append((i, j))
        letters_batch.append(tuple(word))

    def reduce_batch(mod):
        for letters in letters_batch:
            mod.reduce_letters(letters)

    w3 = ((1, 2), (2, 3), (3, 4))
    w2 = ((1, 2), (3, 4))

    return [
        ("reduce 20k raw words (len 6, n=4)", reduce_batch),
        ("expand_legs len-3 word, 2 legs, n=4", lambda mod: mod.expand_legs(w3, 4, 2)),
        ("expand_legs len-3 word, 3 legs, n=4", lambda mod: mod.expand_legs(w3, 4, 3)),
        ("expand_legs len-2 word, 4 legs, n=4", lambda mod: mod.expand_legs(w2, 4, 4)),
        ("reduced_words_exact(4, 4)", lambda mod: mod.reduced_words_exact(4, 4)),
    ]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5, help="best-of repetitions")
    args = ap.parse_args()

    if compiled is None:
        print("compiled kernel not available; showing pure-Python times only")
    header = f"{'task':42s} {'pure':>10s} {'compiled':>10s} {'speedup':>8s}"
    print(header)
    print("-" * len(header))
    for label, task in _tasks():
        tp = _best_of(lambda: task(pure), args.repeat)
        if compiled is not None:
            tc = _best_of(lambda: task(compiled), args.repeat)
            print(f"{label:42s} {tp * 1e3:8.2f}ms {tc * 1e3:8.2f}ms {tp / tc:7.1f}x")
        else:
            print(f"{label:42s} {tp * 1e3:8.2f}ms {'-':>10s} {'-':>8s}")
    # sanity: both implementations must agree on a spot check
    if compiled is not None:
        for letters in [((1, 1), (1, 2)), ((1, 2), (1, 2), (3, 4))]:
            assert compiled.reduce_letters(letters) == pure.reduce_letters(letters)
        assert compiled.expand_legs(((1, 2), (2, 3)), 4, 3) == pure.expand_legs(
            ((1, 2), (2, 3)), 4, 3
        )
        print("parity spot checks passed")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
