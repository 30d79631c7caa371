"""k-cyclic periodicity: decompositions, all periods, the prefix array."""

from __future__ import annotations

from dataclasses import dataclass

from cyclorex.text import ParameterError, TextLike, as_text, rotate, rotation_shift


@dataclass(frozen=True)
class CyclicDecomposition:
    """Witness that ``x = u_1 u_2 ... u_ell`` with every block a rotation of ``u_1``.

    ``shifts[i]`` is the smallest ``delta`` with
    ``rotate(x[1..k], delta) == block i + 1``.
    """

    k: int
    ell: int
    shifts: tuple[int, ...]

    def blocks(self, x: TextLike) -> list[bytes]:
        x = as_text(x)
        k = self.k
        return [x[i : i + k] for i in range(0, self.k * self.ell, k)]

    def reconstruct(self, x: TextLike) -> bytes:
        """Rebuild the whole string from the first block and the shifts."""
        u = as_text(x)[: self.k]
        return b"".join(rotate(u, d) for d in self.shifts)


def divisors(n: int) -> list[int]:
    """Ascending divisors of ``n`` by trial division."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _check_k(n: int, k: int) -> None:
    if not 1 <= k <= n:
        raise ParameterError(f"block length {k} outside [1, {n}]")


def _conjugate_blocks(x: bytes, k: int) -> bool:
    """True iff ``k | len(x)`` and every length-k block is a rotation of the first."""
    n = len(x)
    if n % k:
        return False
    if x[k:] == x[:-k]:
        return True
    u = x[:k]
    doubled = u + u
    seen = {u}
    for i in range(k, n, k):
        block = x[i : i + k]
        if block in seen:
            continue
        if block not in doubled:
            return False
        seen.add(block)
    return True


def k_cyclic_decompose(x: TextLike, k: int) -> CyclicDecomposition | None:
    """Split ``x`` into length-k blocks that are all rotations of each other.

    Returns None when ``k`` does not divide ``len(x)`` or some block is not a
    rotation of the first one.
    """
    x = as_text(x)
    n = len(x)
    _check_k(n, k)
    if n % k:
        return None
    ell = n // k
    if x[k:] == x[:-k]:
        return CyclicDecomposition(k, ell, (1,) * ell)
    u = x[:k]
    cache = {u: 1}
    shifts = []
    for i in range(0, n, k):
        block = x[i : i + k]
        d = cache.get(block)
        if d is None:
            d = rotation_shift(u, block)
            if d is None:
                return None
            cache[block] = d
        shifts.append(d)
    return CyclicDecomposition(k, ell, tuple(shifts))


def is_k_cyclic_periodic(x: TextLike, k: int) -> bool:
    x = as_text(x)
    _check_k(len(x), k)
    return _conjugate_blocks(x, k)


def all_cyclic_periods(x: TextLike) -> list[tuple[int, int]]:
    """All ``(k, ell)`` with ``x`` k-cyclic periodic, ascending in ``k``.

    The trivial ``(n, 1)`` entry is always last.
    """
    x = as_text(x)
    n = len(x)
    return [(k, n // k) for k in divisors(n) if _conjugate_blocks(x, k)]


def smallest_cyclic_period(x: TextLike) -> tuple[int, int]:
    x = as_text(x)
    n = len(x)
    for k in divisors(n):
        if _conjugate_blocks(x, k):
            return k, n // k
    raise AssertionError("unreachable: k = n always qualifies")


def cyclic_period_array(x: TextLike) -> list[int]:
    """``A[i] = i / k`` for the shortest cyclic period ``k`` of ``x[1..i]``.

    Returned as a plain list; ``A[i]`` is at index ``i - 1``.
    """
    x = as_text(x)
    out = []
    for i in range(1, len(x) + 1):
        prefix = x[:i]
        for k in divisors(i):
            if _conjugate_blocks(prefix, k):
                out.append(i // k)
                break
    return out
