"""Cyclic covers: is every position inside a window that is a rotation of a prefix?

For a cover length ``L`` the candidate cover is ``u = x[1..L]``. Windows are
screened with polynomial fingerprints of all rotations of ``u`` and every
hit is then confirmed exactly with two LCE queries, so the verdicts never
depend on the absence of hash collisions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from cyclorex.lce import LceIndex
from cyclorex.text import ParameterError, TextLike, as_text

_MODS = (1_000_000_007, 998_244_353)
_BASES = (911_382_323, 972_663_749)


@dataclass(frozen=True)
class CoverReport:
    length: int
    cover_string: bytes
    occurrences: tuple[int, ...]
    gaps: tuple[tuple[int, int], ...]
    is_cover: bool


class _Fingerprints:
    """Prefix hashes of a text under two moduli."""

    def __init__(self, x: bytes):
        n = len(x)
        self.prefix = []
        self.powers = []
        for mod, base in zip(_MODS, _BASES):
            h = [0] * (n + 1)
            p = [1] * (n + 1)
            acc, pw = 0, 1
            for i, c in enumerate(x):
                acc = (acc * base + c + 1) % mod
                pw = pw * base % mod
                h[i + 1] = acc
                p[i + 1] = pw
            self.prefix.append(np.array(h, dtype=np.int64))
            self.powers.append(np.array(p, dtype=np.int64))

    def windows(self, length: int) -> np.ndarray:
        """Combined key of every window ``x[i:i+length]``."""
        keys = np.zeros(len(self.prefix[0]) - length, dtype=np.int64)
        for h, p, mod in zip(self.prefix, self.powers, _MODS):
            part = (h[length:] - h[:-length] * p[length]) % mod
            keys = keys * mod + part
        return keys

    def rotations(self, length: int) -> np.ndarray:
        """Combined key of ``x[d:length] + x[:d]`` for ``d`` in ``range(length)``."""
        d = np.arange(length, dtype=np.int64)
        keys = np.zeros(length, dtype=np.int64)
        for h, p, mod in zip(self.prefix, self.powers, _MODS):
            tail = (h[length] - h[d] * p[length - d]) % mod
            part = (tail * p[d] + h[d]) % mod
            keys = keys * mod + part
        return keys


class _CoverScanner:
    """Shared preprocessing for scanning many cover lengths over one text."""

    def __init__(self, x: bytes):
        self.x = x
        self.n = len(x)
        self._index = None
        self._prints = None

    @property
    def index(self) -> LceIndex:
        if self._index is None:
            self._index = LceIndex(self.x)
        return self._index

    @property
    def prints(self) -> _Fingerprints:
        if self._prints is None:
            self._prints = _Fingerprints(self.x)
        return self._prints

    def occurrences(self, length: int) -> np.ndarray:
        """0-based starts of windows that are rotations of ``x[:length]``."""
        n = self.n
        if length == n:
            return np.zeros(1, dtype=np.int64)
        rot = self.prints.rotations(length)
        keys, first = np.unique(rot, return_index=True)
        win = self.prints.windows(length)
        pos = np.searchsorted(keys, win)
        pos[pos == len(keys)] = 0
        hit = np.flatnonzero(keys[pos] == win)
        d = first[pos[hit]].astype(np.int64)
        # window i equals x[d:length] + x[:d] iff both pieces match
        idx = self.index
        ok = idx.lce_many(hit, d) >= length - d
        has_head = d > 0
        tail_start = hit + length - d
        head = np.ones(len(hit), dtype=bool)
        if has_head.any():
            sel = np.flatnonzero(has_head & ok)
            head[sel] = idx.lce_many(tail_start[sel], np.zeros(len(sel), dtype=np.int64)) >= d[sel]
        ok &= head
        if not ok.all():
            # fingerprint collision: decide the rejected windows directly
            u = self.x[:length]
            doubled = u + u
            for j in np.flatnonzero(~ok).tolist():
                i = int(hit[j])
                ok[j] = self.x[i : i + length] in doubled
        return hit[ok]

    def report(self, length: int) -> CoverReport:
        occ = self.occurrences(length)
        gaps = _gaps(occ, length, self.n)
        return CoverReport(
            length=length,
            cover_string=self.x[:length],
            occurrences=tuple(int(i) + 1 for i in occ),
            gaps=gaps,
            is_cover=not gaps,
        )

    def covers(self, length: int) -> bool:
        n = self.n
        if length == n:
            return True
        u = self.x[:length]
        # position n is only reachable through the last window
        if self.x[n - length :] not in u + u:
            return False
        occ = self.occurrences(length)
        return not _gaps(occ, length, n)


def _gaps(occ: np.ndarray, length: int, n: int) -> tuple[tuple[int, int], ...]:
    """Maximal uncovered 1-based intervals given sorted 0-based occurrence starts."""
    ends = occ + length  # exclusive
    jumps = np.flatnonzero(occ[1:] > ends[:-1])
    gaps = [(int(ends[j]) + 1, int(occ[j + 1])) for j in jumps.tolist()]
    if int(ends[-1]) < n:
        gaps.append((int(ends[-1]) + 1, n))
    return tuple(gaps)


def _check_length(n: int, length: int) -> None:
    if not 1 <= length <= n:
        raise ParameterError(f"cover length {length} outside [1, {n}]")


def k_cyclic_cover_report(x: TextLike, length: int) -> CoverReport:
    """Occurrences of rotations of ``x[1..length]``, the uncovered gaps and the verdict."""
    x = as_text(x)
    _check_length(len(x), length)
    return _CoverScanner(x).report(length)


def is_k_cyclic_coverable(x: TextLike, length: int) -> bool:
    x = as_text(x)
    _check_length(len(x), length)
    return _CoverScanner(x).covers(length)


def all_cyclic_covers(x: TextLike) -> list[int]:
    """Proper cover lengths (``< n``), ascending. The trivial ``n`` is omitted."""
    x = as_text(x)
    scanner = _CoverScanner(x)
    return [m for m in range(1, len(x)) if scanner.covers(m)]


def smallest_cyclic_cover(x: TextLike) -> int | None:
    x = as_text(x)
    scanner = _CoverScanner(x)
    for m in range(1, len(x)):
        if scanner.covers(m):
            return m
    return None
