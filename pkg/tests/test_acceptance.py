"""Exit criteria. Each test prints one PASS/FAIL line (also collected in the
terminal summary under "acceptance criteria")."""

import random
import subprocess
import sys
import time

import numpy as np
import pytest

from conftest import binary_strings
from cyclorex import bench
from cyclorex.cover import all_cyclic_covers, k_cyclic_cover_report
from cyclorex.lce import LceIndex
from cyclorex.oracle import (
    naive_all_periods,
    naive_cover_marks,
    naive_covers,
    naive_k_cyclic,
    naive_lce,
    naive_maximal_runs,
    naive_period_array,
)
from cyclorex.period import (
    all_cyclic_periods,
    cyclic_period_array,
    is_k_cyclic_periodic,
    k_cyclic_decompose,
)
from cyclorex.runs import is_cyclic_periodic_substring, maximal_cyclic_runs
from cyclorex.text import rotate

pytestmark = pytest.mark.slow


def test_c1_worked_examples(record_criterion):
    t0 = time.perf_counter()
    x1 = b"aaabaabaabaabaaa"
    dec = k_cyclic_decompose(x1, 4)
    checks = {
        "example 1": is_k_cyclic_periodic(x1, 4)
        and dec.ell == 4
        and dec.blocks(x1) == [b"aaab", b"aaba", b"abaa", b"baaa"],
        "example 2": cyclic_period_array(b"aababa") == [1, 2, 1, 1, 1, 2],
        "example 3": is_cyclic_periodic_substring(b"aaaabababaaa", 3, 11) == 3
        and is_cyclic_periodic_substring(b"aaaabababaaa", 2, 11) is None
        and is_cyclic_periodic_substring(b"aaaabababaaa", 3, 12) is None,
        "example 4": (lambda r: r.is_cover and r.occurrences == (1, 4))(
            k_cyclic_cover_report(b"aababaa", 4)
        ),
        "example 6": all_cyclic_covers(b"ababbaba") == [2, 4, 5, 7],
    }
    elapsed = time.perf_counter() - t0
    ok = all(checks.values()) and elapsed < 1.0
    failed = [k for k, v in checks.items() if not v]
    record_criterion("C1 worked examples", ok, f"{elapsed * 1000:.1f} ms, failed={failed}")
    assert ok


def test_c2_exhaustive_binary_up_to_12(record_criterion):
    t0 = time.perf_counter()
    count = 0
    bad = []
    for x in binary_strings(12):
        count += 1
        n = len(x)
        for k in range(1, n + 1):
            if is_k_cyclic_periodic(x, k) != naive_k_cyclic(x, k):
                bad.append(("k-cyclic", x, k))
        if all_cyclic_covers(x) != naive_covers(x):
            bad.append(("covers", x))
        if cyclic_period_array(x) != naive_period_array(x):
            bad.append(("array", x))
    elapsed = time.perf_counter() - t0
    ok = count == 8190 and not bad and elapsed < 60
    record_criterion(
        "C2 exhaustive binary n<=12 (periods, covers, array)",
        ok,
        f"{count} strings, {len(bad)} discrepancies, {elapsed:.1f} s",
    )
    assert ok, bad[:5]


def test_c3_exhaustive_runs_up_to_14(record_criterion):
    t0 = time.perf_counter()
    count = 0
    bad = []
    for x in binary_strings(14):
        count += 1
        if [r.interval for r in maximal_cyclic_runs(x)] != naive_maximal_runs(x):
            bad.append(x)
    elapsed = time.perf_counter() - t0
    ok = count == 2**15 - 2 and not bad and elapsed < 300
    record_criterion(
        "C3 exhaustive binary n<=14 (maximal runs)",
        ok,
        f"{count} strings, {len(bad)} discrepancies, {elapsed:.1f} s",
    )
    assert ok, bad[:5]


def test_c4_random_ternary(record_criterion):
    rng = random.Random(20240501)
    bad = []
    t0 = time.perf_counter()
    for _ in range(10_000):
        x = bytes(rng.choice(b"abc") for _ in range(rng.randint(1, 64)))
        n = len(x)
        if any(is_k_cyclic_periodic(x, k) != naive_k_cyclic(x, k) for k in range(1, n + 1)):
            bad.append(("k-cyclic", x))
        if all_cyclic_periods(x) != naive_all_periods(x):
            bad.append(("periods", x))
        if cyclic_period_array(x) != naive_period_array(x):
            bad.append(("array", x))
        if [r.interval for r in maximal_cyclic_runs(x)] != naive_maximal_runs(x):
            bad.append(("runs", x))
        if all_cyclic_covers(x) != naive_covers(x):
            bad.append(("covers", x))
    elapsed = time.perf_counter() - t0
    record_criterion(
        "C4 random ternary n<=64 x 10^4 (five analyses)",
        not bad,
        f"{len(bad)} discrepancies, {elapsed:.1f} s",
    )
    assert not bad, bad[:5]


def _property_inputs(rng, count):
    for i in range(count):
        n = rng.randint(1, 256)
        if i % 2:
            yield bytes(rng.choice(b"abc") for _ in range(n))
        else:
            k = rng.randint(1, 8)
            u = bytes(rng.choice(b"ab") for _ in range(k))
            reps = max(1, n // k)
            yield b"".join(rotate(u, rng.randint(1, k)) for _ in range(reps))


def test_c5_cross_module_properties(record_criterion):
    rng = random.Random(77)
    failures = {"a": 0, "b": 0, "c": 0, "d": 0}
    for x in _property_inputs(rng, 1000):
        n = len(x)
        periods = all_cyclic_periods(x)
        covers = set(all_cyclic_covers(x))
        # (a) nontrivial cyclic periods are cyclic covers
        if any(ell >= 2 and k not in covers for k, ell in periods):
            failures["a"] += 1
        # (b) decompositions rebuild x
        for k, _ in periods:
            dec = k_cyclic_decompose(x, k)
            if dec.reconstruct(x) != x or dec.shifts[0] != 1:
                failures["b"] += 1
        # (c) runs are pairwise non-nested and re-validate
        runs = maximal_cyclic_runs(x)
        ivs = [r.interval for r in runs]
        nested = any(a != b and b[0] <= a[0] and a[1] <= b[1] for a in ivs for b in ivs)
        revalid = all(
            is_cyclic_periodic_substring(x, s, e) is not None
            and (s == 1 or is_cyclic_periodic_substring(x, s - 1, e) is None)
            and (e == n or is_cyclic_periodic_substring(x, s, e + 1) is None)
            for s, e in ivs
        )
        if nested or not revalid:
            failures["c"] += 1
        # (d) gaps are exactly the positions no occurrence covers
        k = rng.randint(1, n)
        rep = k_cyclic_cover_report(x, k)
        covered = [False] * n
        for i in rep.occurrences:
            covered[i - 1 : i - 1 + k] = [True] * k
        in_gap = [False] * n
        for s, e in rep.gaps:
            in_gap[s - 1 : e] = [True] * (e - s + 1)
        occ, _ = naive_cover_marks(x, k)
        if (
            any(c == g for c, g in zip(covered, in_gap))
            or rep.is_cover != (not rep.gaps)
            or list(rep.occurrences) != occ
        ):
            failures["d"] += 1
    ok = not any(failures.values())
    record_criterion("C5 cross-module properties (10^3 strings, n<=256)", ok, str(failures))
    assert ok


def test_c6_lce(record_criterion):
    t0 = time.perf_counter()
    bad = 0
    for x in binary_strings(12):
        n = len(x)
        idx = LceIndex(x)
        ii, jj = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
        got = idx.lce_many(ii.ravel(), jj.ravel()).tolist()
        expect = [naive_lce(x, i + 1, j + 1) for i in range(n) for j in range(n)]
        bad += sum(g != e for g, e in zip(got, expect))
        bad += sum(idx.lce(i, j) != naive_lce(x, i, j) for i, j in ((1, n), (n, 1), (1, 1)))
    exhaustive = time.perf_counter() - t0

    rng = random.Random(99)
    x = bytes(rng.choice(b"acgt") for _ in range(100_000))
    t1 = time.perf_counter()
    idx = LceIndex(x)
    build = time.perf_counter() - t1
    queries = [(rng.randint(1, 100_000), rng.randint(1, 100_000)) for _ in range(10_000)]
    bad_random = sum(idx.lce(i, j) != naive_lce(x, i, j) for i, j in queries)
    ok = bad == 0 and bad_random == 0
    record_criterion(
        "C6 LCE exhaustive n<=12 + 10^4 random at n=10^5",
        ok,
        f"{bad}+{bad_random} mismatches, exhaustive {exhaustive:.1f} s, build {build:.2f} s",
    )
    assert ok


def _timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def test_c7_scaling(record_criterion):
    results = {}
    periodic = bench.generate("k-periodic", 10**6, seed=1, block=4)
    ok1, t = _timed(is_k_cyclic_periodic, periodic, 4)
    results["k-period n=1e6 <1s"] = (ok1 and t < 1.0, t)
    periods, t = _timed(all_cyclic_periods, periodic)
    results["all-periods k-periodic n=1e6 <5s"] = ((4, 250_000) in periods and t < 5.0, t)
    _, t = _timed(all_cyclic_periods, b"a" * 10**6)
    results["all-periods unary n=1e6 <5s"] = (t < 5.0, t)
    rnd = bench.generate("random", 5000, seed=1)
    _, t = _timed(all_cyclic_covers, rnd)
    results["covers random n=5000 <30s"] = (t < 30.0, t)
    for family in ("random", "unary"):
        _, t = _timed(cyclic_period_array, bench.generate(family, 2000, seed=1))
        results[f"period-array {family} n=2000 <30s"] = (t < 30.0, t)

    # cover enumeration growth over n in {1000, 2000, 4000}; quadratic is ~2
    exponents = {}
    for family in ("random", "unary", "k-periodic"):
        rows = bench.run([1000, 2000, 4000], [family], ["covers"], seed=3, repeat=3)
        exponents[family] = bench.growth_exponent([(n, sec) for _, n, _, sec in rows])
    growth_ok = all(e < 2.5 for e in exponents.values())

    ok = all(v for v, _ in results.values()) and growth_ok
    detail = ", ".join(f"{k}: {t:.2f}s" for k, (_, t) in results.items())
    detail += ", cover growth exponents " + ", ".join(f"{f}={e:.2f}" for f, e in exponents.items())
    record_criterion("C7 scaling", ok, detail)
    assert ok, (results, exponents)


def _cli(*argv):
    return subprocess.run([sys.executable, "-m", "cyclorex", *argv], capture_output=True)


def test_c8_cli_contract(tmp_path, record_criterion):
    bad_fasta = tmp_path / "bad.fa"
    bad_fasta.write_text("ACGT\n>late header\n")
    good_fasta = tmp_path / "good.fa"
    good_fasta.write_text(">chr\nACGTACGT\nACGT\n")
    cases = [
        (("period", "aaabaabaabaabaaa", "--k", "4"), 0),
        (("period", "aababa", "--k", "2"), 1),
        (("cover", "ababbaba", "--k", "3"), 1),
        (("covers", "--fasta", str(good_fasta)), 0),
        (("period", "aababa", "--k", "0"), 2),
        (("cover",), 2),
        (("frobnicate", "abc"), 2),
        (("covers", "--fasta", str(bad_fasta)), 3),
        (("covers", "--input", str(tmp_path / "missing.txt")), 3),
    ]
    codes = [(argv, _cli(*argv).returncode, want) for argv, want in cases]
    wrong = [(a, got, want) for a, got, want in codes if got != want]

    argv = ("runs", "--fasta", str(good_fasta), "--json", "--seed", "5", "--naive")
    first, second = _cli(*argv), _cli(*argv)
    identical = first.returncode == 0 and first.stdout == second.stdout and first.stdout
    ok = not wrong and bool(identical)
    record_criterion("C8 CLI exit codes and deterministic JSON", ok, f"wrong={wrong}, identical={bool(identical)}")
    assert ok
