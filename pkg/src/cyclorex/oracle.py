"""Brute-force reference implementations.

Nothing here shares code with the fast modules beyond byte normalization,
so a bug in one route cannot hide itself in the other. Everything is
polynomial and slow on purpose.
"""

from __future__ import annotations

from itertools import combinations

from cyclorex.text import ParameterError, TextLike, as_text


def naive_rotations(u: bytes) -> list[bytes]:
    return [u[d:] + u[:d] for d in range(len(u))]


def naive_is_rotation(u: TextLike, v: TextLike) -> bool:
    return _rot(as_text(u, allow_empty=True), as_text(v, allow_empty=True))


def _rot(u: bytes, v: bytes) -> bool:
    if len(u) != len(v):
        return False
    if not u:
        return True
    if sorted(u) != sorted(v):
        return False
    return any(v == u[d:] + u[:d] for d in range(len(u)))


def naive_canonical_rotation(u: TextLike) -> tuple[bytes, int]:
    u = as_text(u)
    rots = naive_rotations(u)
    best = min(rots)
    return best, rots.index(best) + 1


def _blocks(x: bytes, k: int) -> list[bytes]:
    return [x[i : i + k] for i in range(0, len(x), k)]


def naive_k_cyclic(x: TextLike, k: int) -> bool:
    x = as_text(x)
    n = len(x)
    if not 1 <= k <= n:
        raise ParameterError(f"block length {k} outside [1, {n}]")
    if n % k:
        return False
    blocks = _blocks(x, k)
    return all(_rot(a, b) for a, b in combinations(blocks, 2))


def naive_all_periods(x: TextLike) -> list[tuple[int, int]]:
    x = as_text(x)
    n = len(x)
    return [(k, n // k) for k in range(1, n + 1) if naive_k_cyclic(x, k)]


def naive_period_array(x: TextLike) -> list[int]:
    x = as_text(x)
    out = []
    for i in range(1, len(x) + 1):
        k = min(k for k in range(1, i + 1) if naive_k_cyclic(x[:i], k))
        out.append(i // k)
    return out


def naive_lce(x: TextLike, i: int, j: int) -> int:
    """Character-by-character LCE, 1-based positions."""
    x = as_text(x)
    n = len(x)
    if not (1 <= i <= n and 1 <= j <= n):
        raise ParameterError(f"positions ({i}, {j}) outside [1, {n}]")
    ell = 0
    while i + ell <= n and j + ell <= n and x[i + ell - 1] == x[j + ell - 1]:
        ell += 1
    return ell


def naive_cover_marks(x: TextLike, length: int) -> tuple[list[int], list[bool]]:
    """1-based occurrence starts and per-position coverage for cover length ``length``."""
    x = as_text(x)
    n = len(x)
    u = x[:length]
    occ = []
    covered = [False] * n
    for s in range(n - length + 1):
        if _rot(u, x[s : s + length]):
            occ.append(s + 1)
            for p in range(s, s + length):
                covered[p] = True
    return occ, covered


def naive_covers(x: TextLike) -> list[int]:
    x = as_text(x)
    return [m for m in range(1, len(x)) if all(naive_cover_marks(x, m)[1])]


def naive_cyclic_periodic(y: bytes) -> bool:
    """At least two blocks, all pairwise rotations."""
    m = len(y)
    for k in range(1, m // 2 + 1):
        if m % k == 0:
            blocks = _blocks(y, k)
            if all(_rot(a, b) for a, b in combinations(blocks, 2)):
                return True
    return False


def naive_maximal_runs(x: TextLike) -> list[tuple[int, int]]:
    """Containment-maximal cyclic periodic intervals, 1-based inclusive, sorted."""
    x = as_text(x)
    n = len(x)
    periodic = [
        (s, e)
        for s in range(1, n + 1)
        for e in range(s + 1, n + 1)
        if naive_cyclic_periodic(x[s - 1 : e])
    ]
    return sorted(
        (s, e)
        for s, e in periodic
        if not any(a <= s and e <= b and (a, b) != (s, e) for a, b in periodic)
    )
