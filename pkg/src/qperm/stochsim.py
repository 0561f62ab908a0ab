"""Monte-Carlo and exact marginals for classical-permutation Levy processes.

The process is X_t = sigma^{N_t} with one independent Poisson clock per
nontrivial cycle of sigma; positions inside a cycle of length ell shift by
the clock count mod ell, so the marginal probabilities are modular Poisson
sums, evaluated exactly with a roots-of-unity filter.

Seed discipline: numpy SeedSequence(seed) is spawned once per cycle in the
stored cycle order, and each cycle's stream is spawned again per sample
block; results are independent of how blocks are scheduled, so parallel and
serial execution agree for a fixed seed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import perms
from .errors import ValidationError
from .magic import from_permutation
from .schurmann import SchurmannTriple

#: samples drawn per substream block
BLOCK_SIZE = 1 << 16


@dataclass(frozen=True)
class PermProcessSpec:
    """A permutation together with one Poisson rate per nontrivial cycle.

    `rates` may be a sequence aligned with the nontrivial cycles in
    min-element order, or a mapping keyed by cycle tuple (any rotation) or
    by the cycle's minimum element.
    """

    sigma: tuple[int, ...]
    rates: tuple[float, ...]

    def __init__(self, sigma, rates):
        sigma = perms.check_perm(sigma)
        cycs = [c for c in perms.cycles(sigma) if len(c) > 1]
        if isinstance(rates, dict):
            normalized = {}
            for key, lam in rates.items():
                if isinstance(key, int):
                    normalized[key] = float(lam)
                else:
                    normalized[min(key)] = float(lam)
            try:
                rates = [normalized[min(c)] for c in cycs]
            except KeyError as exc:
                raise ValidationError(f"missing rate for cycle containing {exc}") from exc
        else:
            rates = [float(v) for v in rates]
            if len(rates) != len(cycs):
                raise ValidationError(
                    f"{len(cycs)} nontrivial cycles but {len(rates)} rates given"
                )
        if any(lam <= 0 for lam in rates):
            raise ValidationError("all cycle rates must be > 0")
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "rates", tuple(rates))

    @property
    def n(self) -> int:
        return len(self.sigma)

    @property
    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles in min-element order, aligned with `rates`."""
        return [c for c in perms.cycles(self.sigma) if len(c) > 1]


@dataclass(frozen=True)
class MarginalEstimate:
    """Monte-Carlo estimate of the marginal matrix omega_t(p_ij)."""

    t: float
    probs: np.ndarray
    stderr: np.ndarray
    samples: int
    seed: int

    def __post_init__(self):
        for name in ("probs", "stderr"):
            arr = np.asarray(getattr(self, name), dtype=float)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)


def _modular_poisson(lam_t: float, ell: int) -> np.ndarray:
    """probs[r] = P(N = r mod ell) for N ~ Poisson(lam_t), roots-of-unity filter."""
    m = np.arange(ell)
    omega = np.exp(2j * np.pi * m / ell)
    weights = np.exp(lam_t * (omega - 1.0))
    r = np.arange(ell)
    phases = np.exp(-2j * np.pi * np.outer(m, r) / ell)
    return (weights @ phases).real / ell


def exact_marginals(spec: PermProcessSpec, t: float) -> np.ndarray:
    """Entry (i, j): probability that X_t maps i to j.

    Within a cycle this is the modular Poisson probability of advancing by
    the cycle distance from i to j; fixed points give delta_ij; entries
    across different cycles vanish.
    """
    if t < 0:
        raise ValidationError("time must be >= 0")
    n = spec.n
    out = np.zeros((n, n))
    for i in range(1, n + 1):
        if spec.sigma[i - 1] == i:
            out[i - 1, i - 1] = 1.0
    for cyc, lam in zip(spec.cycles, spec.rates):
        ell = len(cyc)
        probs = _modular_poisson(lam * t, ell)
        for a, origin in enumerate(cyc):
            for r in range(ell):
                out[origin - 1, cyc[(a + r) % ell] - 1] = probs[r]
    return out


def simulate_marginals(
    spec: PermProcessSpec,
    t: float,
    samples: int,
    seed: int,
    block_size: int = BLOCK_SIZE,
) -> MarginalEstimate:
    """Tally X_t(i) = j over Poisson draws of the cycle clocks.

    Each cycle advances all its positions by the same Poisson count, so one
    draw per cycle per sample decides the whole block row.
    """
    if samples < 1:
        raise ValidationError("samples must be >= 1")
    if t < 0:
        raise ValidationError("time must be >= 0")
    n = spec.n
    probs = np.zeros((n, n))
    for i in range(1, n + 1):
        if spec.sigma[i - 1] == i:
            probs[i - 1, i - 1] = 1.0
    root = np.random.SeedSequence(seed)
    streams = root.spawn(len(spec.rates))
    for cyc, lam, stream in zip(spec.cycles, spec.rates, streams):
        ell = len(cyc)
        hist = np.zeros(ell)
        blocks = stream.spawn((samples + block_size - 1) // block_size)
        left = samples
        for blk in blocks:
            take = min(block_size, left)
            left -= take
            rng = np.random.Generator(np.random.PCG64(blk))
            counts = rng.poisson(lam * t, size=take)
            hist += np.bincount(counts % ell, minlength=ell)
        hist /= samples
        for a, origin in enumerate(cyc):
            for r in range(ell):
                probs[origin - 1, cyc[(a + r) % ell] - 1] = hist[r]
    stderr = np.sqrt(np.clip(probs * (1.0 - probs), 0.0, None) / samples)
    # deterministic entries carry no sampling error
    for i in range(1, n + 1):
        if spec.sigma[i - 1] == i:
            stderr[i - 1, i - 1] = 0.0
    return MarginalEstimate(t, probs, stderr, samples, seed)


def process_triple(spec: PermProcessSpec, vectors=None) -> SchurmannTriple:
    """Generating triple whose semigroup reproduces the classical marginals.

    The representation is the permutation one with multiplicity d = number of
    nontrivial cycles; the cocycle is constant on each cycle, zero on fixed
    points, with squared norm equal to the cycle rate.  By default the cycle
    vectors are orthogonal (sqrt(rate) along distinct coordinates); `vectors`
    overrides them, one per cycle, and is rescaled to the rates.
    """
    cycs = spec.cycles
    d = max(len(cycs), 1)
    if vectors is None:
        vecs = [np.sqrt(lam) * np.eye(d)[c] for c, lam in enumerate(spec.rates)]
    else:
        if len(vectors) != len(cycs):
            raise ValidationError("need one vector per nontrivial cycle")
        vecs = []
        for v, lam in zip(vectors, spec.rates):
            v = np.asarray(v, dtype=complex)
            norm = np.linalg.norm(v)
            if v.shape != (d,) or norm == 0:
                raise ValidationError(f"cycle vectors must be nonzero of length {d}")
            vecs.append(np.sqrt(lam) * v / norm)
    xs = np.zeros((spec.n, d), dtype=complex)
    for cyc, v in zip(cycs, vecs):
        for i in cyc:
            xs[i - 1] = v
    return SchurmannTriple(from_permutation(spec.sigma, d), xs)


def path_sample(spec: PermProcessSpec, times, seed: int) -> list[tuple[int, ...]]:
    """Sample one path via exponential inter-arrival times; X_t on the grid.

    The grid must be nondecreasing and start at >= 0.
    """
    times = [float(v) for v in times]
    if any(b < a for a, b in zip(times, times[1:])) or (times and times[0] < 0):
        raise ValidationError("time grid must be nondecreasing and nonnegative")
    n = spec.n
    horizon = times[-1] if times else 0.0
    root = np.random.SeedSequence(seed)
    streams = root.spawn(len(spec.rates))
    jump_times: list[np.ndarray] = []
    for lam, stream in zip(spec.rates, streams):
        rng = np.random.Generator(np.random.PCG64(stream))
        arrivals = []
        clock = 0.0
        while True:
            gaps = rng.exponential(1.0 / lam, size=64)
            for g in gaps:
                clock += g
                if clock > horizon:
                    break
                arrivals.append(clock)
            if clock > horizon:
                break
        jump_times.append(np.asarray(arrivals))
    out = []
    for t in times:
        images = list(range(1, n + 1))
        for cyc, arr in zip(spec.cycles, jump_times):
            ell = len(cyc)
            shift = int(np.searchsorted(arr, t, side="right")) % ell
            for a, origin in enumerate(cyc):
                images[origin - 1] = cyc[(a + shift) % ell]
        out.append(tuple(images))
    return out
