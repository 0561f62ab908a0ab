"""Cocycles, coboundaries and first cohomology of a magic-unitary representation.

A cocycle for the representation rho with blocks P_ij is determined by the
diagonal values xi_i = eta(p_ii), subject to

    P_ii xi_i = 0          and          P_ij xi_i = P_ij xi_j   (i != j).

Coboundaries are the tuples ((P_ii - I) v)_i.  All spaces live in the
stacked nd-dimensional space with xi_i occupying slots (i-1)d .. id-1;
dimensions are decided by singular values relative to the largest one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import perms
from .config import DEFAULT_CONFIG
from .errors import ValidationError
from .magic import MagicUnitary

_EMPTY = None  # sentinel for "no rows" in constraint assembly


@dataclass(frozen=True)
class SubspaceBasis:
    """Orthonormal rows spanning a subspace of the stacked space."""

    vectors: np.ndarray  # shape (dim, total)

    def __post_init__(self):
        v = np.asarray(self.vectors, dtype=complex)
        v.setflags(write=False)
        object.__setattr__(self, "vectors", v)

    @property
    def dim(self) -> int:
        return self.vectors.shape[0]

    @property
    def total(self) -> int:
        return self.vectors.shape[1]

    def orthonormality_defect(self) -> float:
        if self.dim == 0:
            return 0.0
        g = self.vectors @ self.vectors.conj().T
        return float(np.max(np.abs(g - np.eye(self.dim))))

    def project(self, vec: np.ndarray) -> np.ndarray:
        """Orthogonal projection of a stacked vector onto the subspace."""
        if self.dim == 0:
            return np.zeros_like(np.asarray(vec, dtype=complex))
        co = self.vectors.conj() @ vec
        return self.vectors.T @ co

    def contains(self, vec: np.ndarray, tol: float = 1e-8) -> bool:
        vec = np.asarray(vec, dtype=complex)
        scale = float(np.linalg.norm(vec))
        if scale == 0.0:
            return True
        return float(np.linalg.norm(vec - self.project(vec))) <= tol * scale


def split_tuple(vec: np.ndarray, n: int, d: int) -> list[np.ndarray]:
    """Slice a stacked vector into the n blocks xi_1 .. xi_n."""
    vec = np.asarray(vec, dtype=complex)
    if vec.shape != (n * d,):
        raise ValidationError(f"expected stacked shape ({n * d},), got {vec.shape}")
    return [vec[(i - 1) * d : i * d] for i in range(1, n + 1)]


def stack_tuple(xs) -> np.ndarray:
    return np.concatenate([np.asarray(x, dtype=complex).ravel() for x in xs])


def _rank(s: np.ndarray, rank_threshold: float) -> int:
    # matrices here are built from projection blocks, so their natural scale
    # is O(1); the max(1, s[0]) floor keeps a numerically-zero matrix at rank 0
    if s.size == 0:
        return 0
    return int(np.sum(s > rank_threshold * max(1.0, float(s[0]))))


def _nullspace(C: np.ndarray, rank_threshold: float) -> np.ndarray:
    """Orthonormal rows spanning ker C (SVD based)."""
    if C.shape[0] == 0:
        return np.eye(C.shape[1], dtype=complex)
    _, s, vh = np.linalg.svd(C)
    return vh[_rank(s, rank_threshold) :].conj()


def _colspace(C: np.ndarray, rank_threshold: float) -> np.ndarray:
    """Orthonormal rows spanning the column space of C."""
    if C.shape[1] == 0:
        return np.zeros((0, C.shape[0]), dtype=complex)
    u, s, _ = np.linalg.svd(C, full_matrices=False)
    return u[:, : _rank(s, rank_threshold)].T


def cocycle_constraint_matrix(M: MagicUnitary) -> np.ndarray:
    """Stack the linear conditions P_ii xi_i = 0 and P_ij (xi_i - xi_j) = 0."""
    n, d = M.n, M.d
    rows = []
    for i in range(n):
        block = np.zeros((d, n * d), dtype=complex)
        block[:, i * d : (i + 1) * d] = M.blocks[i, i]
        rows.append(block)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            block = np.zeros((d, n * d), dtype=complex)
            block[:, i * d : (i + 1) * d] = M.blocks[i, j]
            block[:, j * d : (j + 1) * d] = -M.blocks[i, j]
            rows.append(block)
    return np.vstack(rows)


def cocycle_space(
    M: MagicUnitary, rank_threshold: float = DEFAULT_CONFIG.rank_threshold
) -> SubspaceBasis:
    """Orthonormal basis of all stacked cocycle tuples (xi_1, ..., xi_n)."""
    return SubspaceBasis(_nullspace(cocycle_constraint_matrix(M), rank_threshold))


def coboundary_map(M: MagicUnitary) -> np.ndarray:
    """The (nd, d) matrix sending v to the stacked tuple ((P_ii - I) v)_i."""
    n, d = M.n, M.d
    B = np.zeros((n * d, d), dtype=complex)
    eye = np.eye(d)
    for i in range(n):
        B[i * d : (i + 1) * d] = M.blocks[i, i] - eye
    return B


def coboundary_space(
    M: MagicUnitary, rank_threshold: float = DEFAULT_CONFIG.rank_threshold
) -> SubspaceBasis:
    """Orthonormal basis of the coboundary tuples ((P_ii - I) v)_i."""
    return SubspaceBasis(_colspace(coboundary_map(M), rank_threshold))


def h1_dim(M: MagicUnitary, rank_threshold: float = DEFAULT_CONFIG.rank_threshold) -> int:
    """dim H_1(rho) = dim Z_1 - dim B_1."""
    z = cocycle_space(M, rank_threshold)
    b = coboundary_space(M, rank_threshold)
    return z.dim - b.dim


def h1_representatives(
    M: MagicUnitary, rank_threshold: float = DEFAULT_CONFIG.rank_threshold
) -> SubspaceBasis:
    """Orthonormal basis of the orthogonal complement of B_1 inside Z_1."""
    z = cocycle_space(M, rank_threshold)
    b = coboundary_space(M, rank_threshold)
    if z.dim == 0:
        return z
    # express B_1 in Z_1 coordinates and take the kernel of the coefficient map
    coeff = b.vectors.conj() @ z.vectors.T if b.dim else np.zeros((0, z.dim))
    null = _nullspace(coeff, rank_threshold)
    return SubspaceBasis(null @ z.vectors)


def gaussian_subspace(
    M: MagicUnitary, rank_threshold: float = DEFAULT_CONFIG.rank_threshold
) -> SubspaceBasis:
    """Cocycle tuples that would generate a Gaussian functional.

    On top of the cocycle conditions, a Gaussian cocycle needs every
    generator to act trivially on the values: (P_ab - delta_ab I) xi_i = 0.
    Combined with P_ii xi_i = 0 this forces xi = 0 (no Gaussian processes);
    the function exists to verify that numerically.
    """
    n, d = M.n, M.d
    eye = np.eye(d)
    rows = [cocycle_constraint_matrix(M)]
    for a in range(n):
        for b in range(n):
            op = M.blocks[a, b] - (eye if a == b else 0.0)
            for i in range(n):
                block = np.zeros((d, n * d), dtype=complex)
                block[:, i * d : (i + 1) * d] = op
                rows.append(block)
    return SubspaceBasis(_nullspace(np.vstack(rows), rank_threshold))


# --- closed-form oracles ------------------------------------------------------


def perm_h1_formula(sigma) -> int:
    """cyc(sigma) - fix(sigma) - 1 for sigma != id, 0 for the identity.

    cyc counts fixed points as 1-cycles, so cyc - fix is the number of
    cycles of length >= 2.
    """
    sigma = perms.check_perm(sigma)
    if sigma == perms.identity(len(sigma)):
        return 0
    return perms.cycle_count(sigma) - perms.fixed_point_count(sigma) - 1


def fourier_h1_formula(n: int) -> int:
    """sum_{k=1}^{n-1} (gcd(n, k) - 1); zero exactly when n is prime."""
    if n < 2:
        raise ValidationError("Fourier formula needs n >= 2")
    return sum(math.gcd(n, k) - 1 for k in range(1, n))


def projection_meet(
    P: np.ndarray,
    Q: np.ndarray,
    tol: float = DEFAULT_CONFIG.tol,
    rank_threshold: float = DEFAULT_CONFIG.rank_threshold,
) -> np.ndarray:
    """Orthogonal projection onto range(P) intersect range(Q).

    Computed as the projection onto the null space of (I-P) + (I-Q), which
    is positive semidefinite with kernel exactly the intersection.
    """
    P = np.asarray(P, dtype=complex)
    Q = np.asarray(Q, dtype=complex)
    if P.shape != Q.shape or P.ndim != 2 or P.shape[0] != P.shape[1]:
        raise ValidationError("projections must be square and equally sized")
    d = P.shape[0]
    dev = max(
        float(np.linalg.norm(P @ P - P, 2)),
        float(np.linalg.norm(P - P.conj().T, 2)),
        float(np.linalg.norm(Q @ Q - Q, 2)),
        float(np.linalg.norm(Q - Q.conj().T, 2)),
    )
    if dev > tol:
        raise ValidationError(f"inputs are not projections: max deviation {dev:.3e}")
    gap = (np.eye(d) - P) + (np.eye(d) - Q)
    basis = _nullspace(gap, rank_threshold)  # rows orthonormal
    return basis.T @ basis.conj()


def projection_rank(P: np.ndarray, rank_threshold: float = DEFAULT_CONFIG.rank_threshold) -> int:
    s = np.linalg.svd(np.asarray(P, dtype=complex), compute_uv=False)
    return _rank(s, rank_threshold)
