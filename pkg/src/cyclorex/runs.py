"""Maximal local cyclic periodicity.

A substring is cyclic periodic when it splits into at least two
equal-length blocks that are pairwise rotations. A run is a cyclic
periodic occurrence ``[start, end]`` (1-based, inclusive) not contained in
any other cyclic periodic occurrence.
"""

from __future__ import annotations

from dataclasses import dataclass

from cyclorex.period import _conjugate_blocks, divisors
from cyclorex.text import ParameterError, TextLike, as_text, check_interval


@dataclass(frozen=True, order=True)
class Run:
    start: int
    end: int
    witnesses: tuple[tuple[int, int], ...] = ()

    @property
    def length(self) -> int:
        return self.end - self.start + 1

    @property
    def interval(self) -> tuple[int, int]:
        return self.start, self.end


def _witnesses(y: bytes) -> tuple[tuple[int, int], ...]:
    m = len(y)
    return tuple((k, m // k) for k in divisors(m) if k < m and _conjugate_blocks(y, k))


def is_cyclic_periodic_substring(x: TextLike, start: int, end: int) -> int | None:
    """Smallest block length ``k`` making ``x[start..end]`` cyclic periodic with >= 2 blocks."""
    x = as_text(x)
    check_interval(len(x), start, end)
    y = x[start - 1 : end]
    m = len(y)
    for k in divisors(m):
        if k == m:
            break
        if _conjugate_blocks(y, k):
            return k
    return None


def _chains(x: bytes, k: int) -> list[tuple[int, int]]:
    """Maximal chains of >= 2 consecutive conjugate length-k blocks, 0-based half-open."""
    n = len(x)
    out = []
    for r in range(k):
        first = r
        prev = x[r : r + k]
        i = r + k
        while i + k <= n:
            block = x[i : i + k]
            if block != prev and block not in prev + prev:
                if i - first >= 2 * k:
                    out.append((first, i))
                first = i
            prev = block
            i += k
        if i - first >= 2 * k:
            out.append((first, i))
    return out


def _maximal(intervals) -> list[tuple[int, int]]:
    """Containment-maximal members of a collection of ``(start, stop)`` intervals."""
    kept = []
    reach = -1
    for s, e in sorted(set(intervals), key=lambda iv: (iv[0], -iv[1])):
        if e > reach:
            kept.append((s, e))
            reach = e
    return kept


def maximal_k_cyclic_runs(x: TextLike, k: int) -> list[Run]:
    """Maximal chains of at least two conjugate length-k blocks, for this ``k`` only."""
    x = as_text(x)
    n = len(x)
    if not 1 <= k <= n // 2:
        raise ParameterError(f"block length {k} outside [1, {n // 2}]")
    return [Run(s + 1, e, ((k, (e - s) // k),)) for s, e in _maximal(_chains(x, k))]


def maximal_cyclic_runs(x: TextLike) -> list[Run]:
    """All maximal cyclic periodic substrings, sorted by start then end.

    Every cyclic periodic occurrence extends to a maximal block chain for
    its own block length, so the containment-maximal chains over all ``k``
    are exactly the runs. Each run lists every ``(k, block count)`` valid
    for its interval.
    """
    x = as_text(x)
    n = len(x)
    candidates = []
    for k in range(1, n // 2 + 1):
        candidates.extend(_chains(x, k))
    return [Run(s + 1, e, _witnesses(x[s:e])) for s, e in _maximal(candidates)]
