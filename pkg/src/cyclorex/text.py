"""Byte strings, rotations and conjugacy.

Strings are handled as immutable ``bytes``; ``str`` arguments are encoded
as UTF-8 at the boundary. Public positions are 1-based and inclusive,
rotation shifts ``delta`` run from 1 (identity) to ``len(u)``.
"""

from __future__ import annotations

from typing import Union

TextLike = Union[bytes, bytearray, memoryview, str]


class ParameterError(ValueError):
    """An argument is outside the domain of an operation."""


def as_text(x: TextLike, *, allow_empty: bool = False) -> bytes:
    """Normalize ``x`` to ``bytes``, rejecting the empty string by default."""
    if isinstance(x, str):
        data = x.encode("utf-8")
    elif isinstance(x, (bytes, bytearray, memoryview)):
        data = bytes(x)
    else:
        raise TypeError(f"expected bytes or str, got {type(x).__name__}")
    if not data and not allow_empty:
        raise ParameterError("empty string")
    return data


def reverse(x: TextLike) -> bytes:
    return as_text(x)[::-1]


def rotate(u: TextLike, delta: int) -> bytes:
    """Return ``u[delta..|u|] + u[1..delta-1]``.

    >>> rotate(b"ababc", 2)
    b'babca'
    """
    u = as_text(u)
    if not 1 <= delta <= len(u):
        raise ParameterError(f"rotation shift {delta} outside [1, {len(u)}]")
    d = delta - 1
    return u[d:] + u[:d]


def least_rotation_offset(u: bytes) -> int:
    """0-based start of the lexicographically least rotation of ``u``.

    Two-pointer minimum-expression scan, linear in ``len(u)``. When several
    offsets give the least rotation the smallest one is returned.
    """
    n = len(u)
    s = u + u
    i, j, k = 0, 1, 0
    while i < n and j < n and k < n:
        a = s[i + k]
        b = s[j + k]
        if a == b:
            k += 1
            continue
        if a > b:
            i += k + 1
        else:
            j += k + 1
        if i == j:
            j += 1
        k = 0
    return min(i, j)


def canonical_rotation(u: TextLike) -> tuple[bytes, int]:
    """Least rotation of ``u`` and the smallest shift producing it.

    >>> canonical_rotation(b"baaa")
    (b'aaab', 2)
    """
    u = as_text(u)
    d = least_rotation_offset(u)
    return u[d:] + u[:d], d + 1


def is_rotation(u: TextLike, v: TextLike) -> bool:
    """True iff ``v`` is a cyclic rotation (conjugate) of ``u``."""
    u = as_text(u, allow_empty=True)
    v = as_text(v, allow_empty=True)
    if len(u) != len(v):
        return False
    if not u:
        return True
    return canonical_rotation(u)[0] == canonical_rotation(v)[0]


def rotation_shift(u: bytes, v: bytes) -> int | None:
    """Smallest ``delta`` with ``rotate(u, delta) == v``, or None.

    Search for ``v`` inside ``u + u`` minus its last symbol; the first hit
    is the smallest offset.
    """
    if len(u) != len(v):
        return None
    if u == v:
        return 1
    pos = (u + u[:-1]).find(v)
    return None if pos < 0 else pos + 1


def check_interval(n: int, start: int, end: int) -> None:
    if not 1 <= start <= end <= n:
        raise ParameterError(f"interval [{start}, {end}] outside [1, {n}]")
