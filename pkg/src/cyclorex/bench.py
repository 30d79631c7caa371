"""Deterministic input families and wall-clock timing of the analyses."""

from __future__ import annotations

import csv
import math
import random
import time
from typing import Callable, Iterable, TextIO

from cyclorex.cover import all_cyclic_covers
from cyclorex.period import all_cyclic_periods, cyclic_period_array, is_k_cyclic_periodic

FAMILIES = ("random", "unary", "k-periodic", "de-bruijn-like")


def _rng(seed: int, family: str, n: int) -> random.Random:
    return random.Random(f"{seed}:{family}:{n}")


def de_bruijn(alphabet: bytes, order: int) -> bytes:
    """De Bruijn sequence B(|alphabet|, order) via Lyndon word concatenation."""
    size = len(alphabet)
    a = [0] * size * order
    seq = []

    def db(t, p):
        if t > order:
            if order % p == 0:
                seq.extend(a[1 : p + 1])
        else:
            a[t] = a[t - p]
            db(t + 1, p)
            for j in range(a[t - p] + 1, size):
                a[t] = j
                db(t + 1, t)

    db(1, 1)
    return bytes(alphabet[i] for i in seq)


def generate(family: str, n: int, seed: int = 0, *, alphabet: bytes = b"ab", block: int = 4) -> bytes:
    """A length-``n`` string from ``family``; same arguments give the same string."""
    rng = _rng(seed, family, n)
    if family == "random":
        return bytes(rng.choice(alphabet) for _ in range(n))
    if family == "unary":
        return alphabet[:1] * n
    if family == "k-periodic":
        u = bytes(rng.choice(alphabet) for _ in range(block))
        shifts = [rng.randrange(block) for _ in range(-(-n // block))]
        return b"".join(u[d:] + u[:d] for d in shifts)[:n]
    if family == "de-bruijn-like":
        order = 1
        while len(alphabet) ** order < n:
            order += 1
        seq = de_bruijn(alphabet, order)
        return (seq * (n // len(seq) + 1))[:n]
    raise ValueError(f"unknown family {family!r}")


def operations(block: int = 4) -> dict[str, Callable[[bytes], object]]:
    return {
        "k-period": lambda x: is_k_cyclic_periodic(x, block) if block <= len(x) else False,
        "all-periods": all_cyclic_periods,
        "covers": all_cyclic_covers,
        "period-array": cyclic_period_array,
    }


def time_call(fn: Callable[[bytes], object], x: bytes, repeat: int = 1) -> float:
    """Best wall time in seconds over ``repeat`` calls."""
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(x)
        best = min(best, time.perf_counter() - t0)
    return best


def run(
    sizes: Iterable[int],
    families: Iterable[str],
    ops: Iterable[str],
    seed: int = 0,
    *,
    repeat: int = 1,
    block: int = 4,
    alphabet: bytes = b"ab",
) -> list[tuple[str, int, str, float]]:
    table = operations(block)
    rows = []
    for family in families:
        for n in sizes:
            x = generate(family, n, seed, alphabet=alphabet, block=block)
            for op in ops:
                rows.append((family, n, op, time_call(table[op], x, repeat)))
    return rows


def write_csv(rows, out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["family", "n", "operation", "seconds"])
    for family, n, op, sec in rows:
        writer.writerow([family, n, op, f"{sec:.6f}"])


def growth_exponent(points: list[tuple[int, float]]) -> float:
    """Least-squares slope of log(time) against log(n)."""
    xs = [math.log(n) for n, _ in points]
    ys = [math.log(max(t, 1e-9)) for _, t in points]
    mx = sum(xs) / len(xs)
    my = sum(ys) / len(ys)
    num = sum((a - mx) * (b - my) for a, b in zip(xs, ys))
    den = sum((a - mx) ** 2 for a in xs)
    return num / den
