"""Small permutation helpers: 1-based image tuples and cycle notation."""

from __future__ import annotations

import re

from .errors import ValidationError

Perm = tuple[int, ...]


def check_perm(sigma) -> Perm:
    sigma = tuple(int(v) for v in sigma)
    n = len(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValidationError(f"not a permutation of 1..{n}: {sigma}")
    return sigma


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def compose(a: Perm, b: Perm) -> Perm:
    """Composition (a o b)(i) = a(b(i))."""
    if len(a) != len(b):
        raise ValidationError("size mismatch")
    return tuple(a[b[i - 1] - 1] for i in range(1, len(a) + 1))


def inverse(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, v in enumerate(a, start=1):
        out[v - 1] = i
    return tuple(out)


def power(a: Perm, k: int) -> Perm:
    n = len(a)
    out = identity(n)
    base = a if k >= 0 else inverse(a)
    for _ in range(abs(k)):
        out = compose(base, out)
    return out


def cycles(sigma: Perm) -> list[tuple[int, ...]]:
    """Cycle decomposition, fixed points included as 1-cycles.

    Cycles are rotated to start at their minimum and sorted by it.
    """
    sigma = check_perm(sigma)
    seen = [False] * len(sigma)
    out = []
    for start in range(1, len(sigma) + 1):
        if seen[start - 1]:
            continue
        cyc = [start]
        seen[start - 1] = True
        nxt = sigma[start - 1]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt - 1] = True
            nxt = sigma[nxt - 1]
        out.append(tuple(cyc))
    return out


def cycle_count(sigma: Perm) -> int:
    return len(cycles(sigma))


def fixed_point_count(sigma: Perm) -> int:
    return sum(1 for i, v in enumerate(check_perm(sigma), start=1) if v == i)


def from_cycles(cycs, n: int) -> Perm:
    images = list(range(1, n + 1))
    for cyc in cycs:
        cyc = [int(v) for v in cyc]
        for v in cyc:
            if not 1 <= v <= n:
                raise ValidationError(f"cycle entry {v} out of range for n={n}")
        if len(set(cyc)) != len(cyc):
            raise ValidationError(f"repeated entry in cycle {tuple(cyc)}")
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            images[a - 1] = b
    return check_perm(images)


def parse_cycles(text: str, n: int | None = None) -> Perm:
    """Parse 1-based cycle notation like '(1 2)(3 4 5)'; fixed points omissible.

    Without an explicit n the ambient size is the largest index mentioned.
    'id' or '()' denote the identity (n required).
    """
    text = text.strip()
    body = text.replace(",", " ")
    if body in ("id", "()", ""):
        if n is None:
            raise ValidationError("identity permutation needs an explicit n")
        return identity(n)
    groups = re.findall(r"\(([^()]*)\)", body)
    if not groups or "".join(groups).strip() == "":
        raise ValidationError(f"cannot parse permutation {text!r}")
    leftover = re.sub(r"\([^()]*\)", "", body).strip()
    if leftover:
        raise ValidationError(f"cannot parse permutation {text!r}")
    cycs = []
    top = 0
    for g in groups:
        entries = [int(v) for v in g.split()]
        if not entries:
            raise ValidationError(f"empty cycle in {text!r}")
        cycs.append(tuple(entries))
        top = max(top, max(entries))
    size = top if n is None else int(n)
    if size < top:
        raise ValidationError(f"permutation {text!r} exceeds n={size}")
    flat = [v for c in cycs for v in c]
    if len(set(flat)) != len(flat):
        raise ValidationError(f"overlapping cycles in {text!r}")
    return from_cycles(cycs, size)


def format_cycles(sigma: Perm, include_fixed: bool = False) -> str:
    parts = []
    for cyc in cycles(sigma):
        if len(cyc) == 1 and not include_fixed:
            continue
        parts.append("(" + " ".join(str(v) for v in cyc) + ")")
    return "".join(parts) if parts else "id"


def random_permutation(rng, n: int) -> Perm:
    return tuple(int(v) + 1 for v in rng.permutation(n))
