"""Schurmann triples (rho, eta, L) on Pol(S_n+) and their classification.

A triple is determined by a magic unitary rho and the diagonal cocycle
values xi_i = eta(p_ii); the off-diagonal values are xi_ij = -P_ij xi_i.
The cocycle and the generating functional extend to words by

    eta(a b) = rho(a) eta(b) + eta(a) eps(b),
    L(a b)   = <eta(a*), eta(b)> + eps(a) L(b) + L(a) eps(b),

splitting off the leftmost letter (generators are self-adjoint).  Letter
values: L(p_ii) = -|xi_i|^2 and L(p_ij) = |xi_ij|^2 for i != j.

Inner products are conjugate-linear in the first slot.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernel
from .cohomology import coboundary_map, split_tuple, stack_tuple
from .config import DEFAULT_CONFIG
from .errors import BudgetError, ValidationError
from .magic import MagicUnitary, TwoBlockSpec, apply, fourier, from_hadamard, validate
from .words import LinComb, Word, counit

#: exhaustive word sweeps switch to sampling above these sizes
_EXHAUSTIVE_N = 4
_EXHAUSTIVE_LEN = 4
_SAMPLE_WORDS = 10_000


class SchurmannTriple:
    """Representation plus cocycle data; evaluates eta and L on any element."""

    __slots__ = ("rep", "xs", "xi", "letter_L", "__weakref__")

    def __init__(self, rep: MagicUnitary, xs, tol: float = DEFAULT_CONFIG.tol,
                 check_rep: bool = False):
        if check_rep:
            report = validate(rep, tol)
            if not report.ok:
                raise ValidationError(f"representation is not a magic unitary: {report}")
        n, d = rep.n, rep.d
        xs = np.asarray(xs, dtype=complex)
        if xs.shape != (n, d):
            raise ValidationError(f"expected cocycle tuple of shape ({n}, {d}), got {xs.shape}")
        scale = 1.0 + float(np.max(np.linalg.norm(xs, axis=1), initial=0.0))
        worst = 0.0
        for i in range(n):
            worst = max(worst, float(np.linalg.norm(rep.blocks[i, i] @ xs[i])))
            for j in range(n):
                if i != j:
                    worst = max(worst, float(np.linalg.norm(rep.blocks[i, j] @ (xs[i] - xs[j]))))
        if worst > tol * scale:
            raise ValidationError(
                f"cocycle conditions violated by {worst:.3e} (tol {tol * scale:.3e})"
            )
        xi = np.empty((n, n, d), dtype=complex)
        for i in range(n):
            for j in range(n):
                xi[i, j] = xs[i] if i == j else -(rep.blocks[i, j] @ xs[i])
        # the two off-diagonal formulas agree thanks to the cocycle conditions
        letter_L = np.empty((n, n))
        for i in range(n):
            for j in range(n):
                nrm = float(np.vdot(xi[i, j], xi[i, j]).real)
                letter_L[i, j] = -nrm if i == j else nrm
        xs.setflags(write=False)
        xi.setflags(write=False)
        letter_L.setflags(write=False)
        object.__setattr__(self, "rep", rep)
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "xi", xi)
        object.__setattr__(self, "letter_L", letter_L)

    def __setattr__(self, name, value):
        raise AttributeError("SchurmannTriple is immutable")

    @property
    def n(self) -> int:
        return self.rep.n

    @property
    def d(self) -> int:
        return self.rep.d

    def __repr__(self):
        return f"SchurmannTriple(n={self.n}, d={self.d})"


def cocycle_violation(rep: MagicUnitary, xs) -> float:
    """Worst violation of the cocycle conditions for a candidate tuple."""
    xs = np.asarray(xs, dtype=complex)
    worst = 0.0
    for i in range(rep.n):
        worst = max(worst, float(np.linalg.norm(rep.blocks[i, i] @ xs[i])))
        for j in range(rep.n):
            if i != j:
                worst = max(worst, float(np.linalg.norm(rep.blocks[i, j] @ (xs[i] - xs[j]))))
    return worst


def triple_from_stacked(rep: MagicUnitary, vec, tol: float = DEFAULT_CONFIG.tol) -> SchurmannTriple:
    """Build a triple from a stacked nd-vector (e.g. a cohomology basis vector)."""
    xs = np.array(split_tuple(np.asarray(vec, dtype=complex), rep.n, rep.d))
    return SchurmannTriple(rep, xs, tol)


# --- evaluation ---------------------------------------------------------------


def _eta_word(t: SchurmannTriple, letters) -> np.ndarray:
    eta = np.zeros(t.d, dtype=complex)
    eps = 1.0
    for i, j in reversed(letters):
        eta = t.rep.blocks[i - 1, j - 1] @ eta + (t.xi[i - 1, j - 1] * eps if eps else 0.0)
        eps = eps if i == j else 0.0
    return eta


def _L_word(t: SchurmannTriple, letters) -> complex:
    val = 0j
    eta = np.zeros(t.d, dtype=complex)
    eps = 1.0
    for i, j in reversed(letters):
        xi = t.xi[i - 1, j - 1]
        val = np.vdot(xi, eta) + (val if i == j else 0.0) + t.letter_L[i - 1, j - 1] * eps
        eta = t.rep.blocks[i - 1, j - 1] @ eta + xi * eps
        eps = eps if i == j else 0.0
    return complex(val)


def eta(t: SchurmannTriple, x: LinComb | Word) -> np.ndarray:
    """The cocycle eta evaluated on a word or linear combination."""
    if isinstance(x, Word):
        x = LinComb.from_word(x)
    if x.n != t.n:
        raise ValidationError("ambient size mismatch")
    out = np.zeros(t.d, dtype=complex)
    for w, c in x.terms.items():
        out += c * _eta_word(t, w.letters)
    return out


def gen_functional(t: SchurmannTriple, x: LinComb | Word) -> complex:
    """The generating functional L evaluated on a word or linear combination."""
    if isinstance(x, Word):
        x = LinComb.from_word(x)
    if x.n != t.n:
        raise ValidationError("ambient size mismatch")
    return complex(sum(c * _L_word(t, w.letters) for w, c in x.terms.items()))


def gen_functional_batch(t: SchurmannTriple, letters: np.ndarray) -> np.ndarray:
    """Vectorized L over a batch of equal-length words.

    letters: int array of shape (count, length, 2) with 1-based indices.
    """
    letters = np.asarray(letters, dtype=np.int64)
    if letters.ndim != 3 or letters.shape[2] != 2:
        raise ValidationError("expected letters of shape (count, length, 2)")
    count, length = letters.shape[0], letters.shape[1]
    n, d = t.n, t.d
    blocks_flat = t.rep.blocks.reshape(n * n, d, d)
    xi_flat = t.xi.reshape(n * n, d)
    lgen_flat = t.letter_L.reshape(n * n)
    val = np.zeros(count, dtype=complex)
    eta_suf = np.zeros((count, d), dtype=complex)
    eps = np.ones(count)
    for pos in range(length - 1, -1, -1):
        ii = letters[:, pos, 0] - 1
        jj = letters[:, pos, 1] - 1
        code = ii * n + jj
        xi_l = xi_flat[code]
        delta = (ii == jj).astype(float)
        val = np.einsum("md,md->m", xi_l.conj(), eta_suf) + delta * val + lgen_flat[code] * eps
        eta_suf = np.einsum("mab,mb->ma", blocks_flat[code], eta_suf) + xi_l * eps[:, None]
        eps = delta * eps
    return val


# --- classification -----------------------------------------------------------


def is_gaussian(t: SchurmannTriple, tol: float = DEFAULT_CONFIG.tol) -> bool:
    """True iff all xi_i vanish; the only Gaussian triple is the trivial one."""
    return float(np.max(np.abs(t.xs), initial=0.0)) <= tol


@dataclass(frozen=True)
class PoissonCertificate:
    """A vector v with (P_ii - I) v = xi_i, exhibiting L as Poisson type."""

    v: np.ndarray
    residual: float

    def __post_init__(self):
        v = np.asarray(self.v, dtype=complex)
        v.setflags(write=False)
        object.__setattr__(self, "v", v)


def poisson_certificate(
    t: SchurmannTriple, tol: float | None = None
) -> PoissonCertificate | None:
    """Least-squares solve (P_ii - I) v = xi_i; a certificate iff the residual is small.

    When a certificate exists, L(a) = <v, (rho(a) - eps(a)) v> for all a.
    """
    B = coboundary_map(t.rep)
    target = stack_tuple(t.xs)
    v = np.linalg.lstsq(B, target, rcond=None)[0]
    fit = B @ v
    residual = max(
        float(np.linalg.norm(fit[k * t.d : (k + 1) * t.d] - t.xs[k])) for k in range(t.n)
    )
    if tol is None:
        tol = 1e-7 * (1.0 + float(np.max(np.linalg.norm(t.xs, axis=1), initial=0.0)))
    if residual <= tol:
        return PoissonCertificate(v, residual)
    return None


def poisson_value(t: SchurmannTriple, v: np.ndarray, x: LinComb | Word) -> complex:
    """<v, (rho(x) - eps(x)) v> -- the Poisson-type form of L for certificate v."""
    v = np.asarray(v, dtype=complex)
    mat = apply(t.rep, x)
    return complex(np.vdot(v, mat @ v) - counit(x) * np.vdot(v, v))


def _sweep_words(n: int, max_len: int, rng=None) -> list[np.ndarray]:
    """Arrays of reduced words per length; exhaustive at small size, else sampled."""
    out = []
    if n <= _EXHAUSTIVE_N and max_len <= _EXHAUSTIVE_LEN:
        for ln in range(1, max_len + 1):
            ws = _kernel.reduced_words_exact(n, ln)
            out.append(np.array(ws, dtype=np.int64).reshape(len(ws), ln, 2))
        return out
    if rng is None:
        rng = np.random.default_rng(DEFAULT_CONFIG.seed)
    counts = np.array([n * n * ((n - 1) ** (2 * (ln - 1))) for ln in range(1, max_len + 1)], float)
    if counts.sum() > 10 ** 9:
        raise BudgetError("reduced-word sweep out of range")
    quota = np.maximum(1, np.round(_SAMPLE_WORDS * counts / counts.sum()).astype(int))
    for ln in range(1, max_len + 1):
        m = int(quota[ln - 1])
        rows = np.empty((m, ln), dtype=np.int64)
        cols = np.empty((m, ln), dtype=np.int64)
        rows[:, 0] = rng.integers(1, n + 1, size=m)
        cols[:, 0] = rng.integers(1, n + 1, size=m)
        for pos in range(1, ln):
            # next letter differs from the previous in both row and column
            roff = rng.integers(1, n, size=m)
            coff = rng.integers(1, n, size=m)
            rows[:, pos] = (rows[:, pos - 1] - 1 + roff) % n + 1
            cols[:, pos] = (cols[:, pos - 1] - 1 + coff) % n + 1
        out.append(np.stack([rows, cols], axis=2))
    return out


def is_symmetric_words(
    t: SchurmannTriple,
    max_len: int = DEFAULT_CONFIG.max_word_len,
    tol: float = DEFAULT_CONFIG.tol,
    rng=None,
) -> tuple[bool, float]:
    """Check |L(S w) - L(w)| over reduced words of length <= max_len.

    Returns (symmetric, worst violation).  Exhaustive for n <= 4 and
    max_len <= 4, sampled beyond that.
    """
    if max_len < 1:
        raise ValidationError("max_len must be >= 1")
    scale = 1.0 + float(np.max(np.abs(t.letter_L), initial=0.0))
    worst = 0.0
    for batch in _sweep_words(t.n, max_len, rng):
        vals = gen_functional_batch(t, batch)
        svals = gen_functional_batch(t, batch[:, ::-1, ::-1])  # antipode: reverse, swap indices
        worst = max(worst, float(np.max(np.abs(vals - svals), initial=0.0)))
    return worst <= tol * scale, worst


def two_block_symmetry(
    spec: TwoBlockSpec,
    xi: np.ndarray,
    zeta: np.ndarray,
    tol: float = DEFAULT_CONFIG.tol,
) -> bool:
    """Exact two-block criterion: <zeta, (PQ)^k xi> real for k = 0..d-1.

    Higher powers are linear combinations of the first d by the minimal
    polynomial of PQ, so d powers decide symmetry.
    """
    P = np.asarray(spec.P, dtype=complex)
    Q = np.asarray(spec.Q, dtype=complex)
    xi = np.asarray(xi, dtype=complex)
    zeta = np.asarray(zeta, dtype=complex)
    nx = float(np.linalg.norm(xi))
    nz = float(np.linalg.norm(zeta))
    if float(np.linalg.norm(P @ xi)) > tol * (1.0 + nx):
        raise ValidationError("xi must lie in ker P")
    if float(np.linalg.norm(Q @ zeta)) > tol * (1.0 + nz):
        raise ValidationError("zeta must lie in ker Q")
    scale = (1.0 + nx) * (1.0 + nz)
    PQ = P @ Q
    w = xi.copy()
    for _ in range(spec.d):
        val = complex(np.vdot(zeta, w))
        if abs(val.imag) > tol * scale:
            return False
        w = PQ @ w
    return True


def two_block_triple(
    spec: TwoBlockSpec, xi, zeta, tol: float = DEFAULT_CONFIG.tol
) -> SchurmannTriple:
    """The triple on the two-block representation with eta(p_11) = xi, eta(p_33) = zeta."""
    from .magic import two_block

    rep = two_block(spec, tol)
    xs = np.array([xi, xi, zeta, zeta], dtype=complex)
    return SchurmannTriple(rep, xs, tol)


def fourier_symmetry(n: int, xs, tol: float = DEFAULT_CONFIG.tol) -> bool:
    """Fourier-representation criterion: <xi_i, P_m xi_k> = <P_{2-m} xi_k, xi_i>.

    P_m is the common value of the blocks with (j - k + 1) = m mod n; the
    index 2 - m is taken mod n in 1..n.
    """
    rep = from_hadamard(fourier(n))
    xs = np.asarray(xs, dtype=complex)
    if xs.shape != (n, rep.d):
        raise ValidationError(f"expected tuple of shape ({n}, {rep.d})")
    dev = cocycle_violation(rep, xs)
    scale = 1.0 + float(np.max(np.linalg.norm(xs, axis=1), initial=0.0))
    if dev > tol * scale:
        raise ValidationError(f"not a cocycle tuple for the Fourier representation ({dev:.3e})")
    pm = [rep.blocks[m - 1, 0] for m in range(1, n + 1)]  # P_m = block (m, 1)
    worst = 0.0
    for m in range(1, n + 1):
        m2 = (2 - m) % n
        pm2 = pm[m2 - 1 if m2 != 0 else n - 1]
        for i in range(n):
            for k in range(n):
                lhs = complex(np.vdot(xs[i], pm[m - 1] @ xs[k]))
                rhs = complex(np.vdot(pm2 @ xs[k], xs[i]))
                worst = max(worst, abs(lhs - rhs))
    return worst <= tol * scale * scale


def is_tracial(
    t: SchurmannTriple,
    max_len: int = DEFAULT_CONFIG.max_word_len,
    tol: float = DEFAULT_CONFIG.tol,
    rng=None,
) -> bool:
    """Check L(uv) = L(vu) over reduced word pairs with |u| + |v| <= max_len.

    Also checks the necessary condition |eta(a)| = |eta(a*)| on sampled
    elements of ker eps.
    """
    if max_len < 2:
        raise ValidationError("max_len must be >= 2 for traciality")
    scale = 1.0 + float(np.max(np.abs(t.letter_L), initial=0.0))
    per_len = _sweep_words(t.n, max_len - 1, rng)
    worst = 0.0
    for la in range(1, max_len):
        for lb in range(1, max_len - la + 1):
            wa = per_len[la - 1]
            wb = per_len[lb - 1]
            if wa.shape[0] * wb.shape[0] > 200_000:
                raise BudgetError("too many word pairs; lower max_len")
            uv = np.concatenate(
                [
                    np.repeat(wa, wb.shape[0], axis=0),
                    np.tile(wb, (wa.shape[0], 1, 1)),
                ],
                axis=1,
            )
            vu = np.concatenate([uv[:, la:], uv[:, :la]], axis=1)
            diff = gen_functional_batch(t, uv) - gen_functional_batch(t, vu)
            worst = max(worst, float(np.max(np.abs(diff), initial=0.0)))
    if worst > tol * scale:
        return False
    # necessary condition via the GNS anti-unitary: |eta(a)| = |eta(a*)|
    if rng is None:
        rng = np.random.default_rng(DEFAULT_CONFIG.seed)
    for batch in _sweep_words(t.n, max_len, rng):
        take = batch if batch.shape[0] <= 64 else batch[rng.choice(batch.shape[0], 64, replace=False)]
        for letters in take:
            w = Word([tuple(map(int, let)) for let in letters], t.n)
            na = float(np.linalg.norm(_eta_word(t, w.letters)))
            nastar = float(np.linalg.norm(_eta_word(t, tuple(reversed(w.letters)))))
            if abs(na - nastar) > tol * scale:
                return False
    return True


def symmetrize(t: SchurmannTriple):
    """Evaluator for L_sym = (L + L o S) / 2; symmetric by construction."""
    from .words import antipode

    def evaluator(x: LinComb | Word) -> complex:
        return 0.5 * (gen_functional(t, x) + gen_functional(t, antipode(x)))

    return evaluator


def random_cocycle(rep: MagicUnitary, rng, scale: float = 1.0) -> np.ndarray:
    """A random cocycle tuple drawn from the cocycle space of the representation."""
    from .cohomology import cocycle_space

    z = cocycle_space(rep)
    if z.dim == 0:
        return np.zeros((rep.n, rep.d), dtype=complex)
    coeff = rng.normal(size=z.dim) + 1j * rng.normal(size=z.dim)
    vec = scale * (coeff @ z.vectors)
    return vec.reshape(rep.n, rep.d)
