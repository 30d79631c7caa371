"""Longest-common-extension queries in constant time.

The index is a suffix array (prefix doubling), the Kasai LCP array and a
sparse table for range minima over the LCP array. ``lce(i, j)`` is the
length of the longest common prefix of the suffixes starting at ``i`` and
``j`` (1-based).
"""

from __future__ import annotations

import numpy as np

from cyclorex.text import ParameterError, TextLike, as_text


def suffix_array(x: bytes) -> np.ndarray:
    """Suffix array of ``x`` by prefix doubling, O(n log^2 n) with numpy sorts."""
    n = len(x)
    rank = np.frombuffer(x, dtype=np.uint8).astype(np.int64)
    if n == 1:
        return np.zeros(1, dtype=np.int64)
    base = max(256, n) + 1
    h = 1
    while True:
        second = np.zeros(n, dtype=np.int64)
        # shorter suffixes sort first: 0 marks "past the end"
        second[: n - h] = rank[h:] + 1
        key = rank * base + second
        sa = np.argsort(key, kind="stable")
        sorted_key = key[sa]
        bumps = np.empty(n, dtype=np.int64)
        bumps[0] = 0
        np.not_equal(sorted_key[1:], sorted_key[:-1], out=bumps[1:])
        rank = np.empty(n, dtype=np.int64)
        rank[sa] = np.cumsum(bumps)
        if rank[sa[-1]] == n - 1 or h >= n:
            return sa
        h *= 2


def lcp_array(x: bytes, sa: np.ndarray, rank: np.ndarray) -> np.ndarray:
    """Kasai: ``lcp[r]`` is the LCP of suffixes ``sa[r-1]`` and ``sa[r]``; ``lcp[0] = 0``."""
    n = len(x)
    sa_l = sa.tolist()
    rank_l = rank.tolist()
    lcp = [0] * n
    h = 0
    for i in range(n):
        r = rank_l[i]
        if r == 0:
            h = 0
            continue
        j = sa_l[r - 1]
        while i + h < n and j + h < n and x[i + h] == x[j + h]:
            h += 1
        lcp[r] = h
        if h:
            h -= 1
    return np.array(lcp, dtype=np.int64)


class LceIndex:
    """Immutable LCE index over a text.

    >>> idx = LceIndex(b"aababa")
    >>> idx.lce(2, 4)
    3
    """

    def __init__(self, x: TextLike):
        x = as_text(x)
        self.text = x
        self.n = n = len(x)
        self.sa = suffix_array(x)
        self.rank = np.empty(n, dtype=np.int64)
        self.rank[self.sa] = np.arange(n, dtype=np.int64)
        lcp = lcp_array(x, self.sa, self.rank)
        table = [lcp]
        width = 1
        while 2 * width <= n:
            prev = table[-1]
            table.append(np.minimum(prev[: len(prev) - width], prev[width:]))
            width *= 2
        self._table = table
        # padded copy for vectorized lookups: row d valid for columns < n - 2^d + 1
        self._sparse = np.zeros((len(table), n), dtype=np.int64)
        for d, row in enumerate(table):
            self._sparse[d, : len(row)] = row
        log2 = np.zeros(n + 1, dtype=np.int64)
        for d in range(1, len(table)):
            log2[1 << d :] += 1
        self._log2 = log2
        for arr in (self.sa, self.rank, self._sparse, self._log2):
            arr.flags.writeable = False

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"LceIndex(n={self.n})"

    def _check(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise ParameterError(f"position {i} outside [1, {self.n}]")

    def lce(self, i: int, j: int) -> int:
        """Length of the longest common prefix of ``x[i..n]`` and ``x[j..n]``."""
        self._check(i)
        self._check(j)
        return self.lce0(i - 1, j - 1)

    def lce0(self, i: int, j: int) -> int:
        """0-based variant of :meth:`lce` without bounds checks."""
        if i == j:
            return self.n - i
        a = int(self.rank[i])
        b = int(self.rank[j])
        if a > b:
            a, b = b, a
        lo = a + 1
        d = (b - lo + 1).bit_length() - 1
        row = self._table[d]
        return int(min(row[lo], row[b - (1 << d) + 1]))

    def lce_many(self, i, j) -> np.ndarray:
        """Vectorized 0-based LCE over equal-length integer arrays."""
        i = np.asarray(i, dtype=np.int64)
        j = np.asarray(j, dtype=np.int64)
        a = self.rank[i]
        b = self.rank[j]
        lo = np.minimum(a, b) + 1
        hi = np.maximum(a, b)
        same = i == j
        span = np.where(same, 1, hi - lo + 1)
        d = self._log2[span]
        lo = np.where(same, 0, lo)
        right = np.where(same, 0, hi - np.left_shift(1, d) + 1)
        out = np.minimum(self._sparse[d, lo], self._sparse[d, right])
        return np.where(same, self.n - i, out)


def build(x: TextLike) -> LceIndex:
    """Index ``x`` for forward LCE queries."""
    return LceIndex(x)


def build_reverse(x: TextLike) -> LceIndex:
    """Index the reverse of ``x``; query it with :func:`lce_reverse`."""
    return LceIndex(as_text(x)[::-1])


def lce(idx: LceIndex, i: int, j: int) -> int:
    return idx.lce(i, j)


def lce_reverse(idx_r: LceIndex, i: int, j: int) -> int:
    """LCE on an index over the reversed text.

    Position ``i`` of the reversed text is position ``n - i + 1`` of the
    original, so the result is the longest common suffix of
    ``x[1..n-i+1]`` and ``x[1..n-j+1]``.
    """
    return idx_r.lce(i, j)
