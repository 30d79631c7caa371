"""Structured reports: payload builders and round-trip validation.

A report is a JSON object with the keys ``analysis``, ``n``,
``alphabet_size``, ``result`` and ``elapsed_ms``. Intervals are
``[start, end]`` pairs, 1-based and inclusive.
"""

from __future__ import annotations

import json

from cyclorex.cover import CoverReport
from cyclorex.period import CyclicDecomposition
from cyclorex.runs import Run
from cyclorex.text import rotate


def show(b: bytes) -> str:
    return b.decode("utf-8", errors="backslashreplace")


def envelope(analysis: str, x: bytes, result: dict, elapsed_ms: float | None = None) -> dict:
    return {
        "analysis": analysis,
        "n": len(x),
        "alphabet_size": len(set(x)),
        "result": result,
        "elapsed_ms": None if elapsed_ms is None else round(elapsed_ms, 3),
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, ensure_ascii=False, separators=(", ", ": "))


def decomposition_payload(x: bytes, k: int, dec: CyclicDecomposition | None) -> dict:
    if dec is None:
        return {"k": k, "periodic": False}
    return {
        "k": dec.k,
        "periodic": True,
        "ell": dec.ell,
        "shifts": list(dec.shifts),
        "blocks": [show(b) for b in dec.blocks(x)],
    }


def run_payload(run: Run) -> dict:
    return {"interval": [run.start, run.end], "witnesses": [list(w) for w in run.witnesses]}


def cover_payload(rep: CoverReport) -> dict:
    return {
        "k": rep.length,
        "cover_string": show(rep.cover_string),
        "occurrences": list(rep.occurrences),
        "gaps": [list(g) for g in rep.gaps],
        "is_cover": rep.is_cover,
    }


def _is_conjugate(u: bytes, v: bytes) -> bool:
    return len(u) == len(v) and v in u + u


def validate_report(doc: dict | str, x: bytes) -> list[str]:
    """Re-check a report against its input; returns a list of problems (empty if valid)."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    problems = []
    n = len(x)
    if doc.get("n") != n:
        problems.append(f"n is {doc.get('n')}, input has {n}")
    res = doc["result"]
    analysis = doc["analysis"]

    if analysis == "period" and res.get("periodic"):
        k, ell, shifts = res["k"], res["ell"], res["shifts"]
        if k * ell != n:
            problems.append(f"k * ell = {k * ell} != {n}")
        rebuilt = b"".join(rotate(x[:k], d) for d in shifts)
        if rebuilt != x:
            problems.append("shifts do not reconstruct the input")
    elif analysis == "periods":
        for k, ell in res["periods"]:
            blocks = [x[i : i + k] for i in range(0, n, k)]
            if k * ell != n or not all(_is_conjugate(blocks[0], b) for b in blocks):
                problems.append(f"({k}, {ell}) is not a cyclic period")
    elif analysis == "period-array":
        for i, a in enumerate(res["array"], start=1):
            if a < 1 or i % a:
                problems.append(f"A[{i}] = {a} does not divide {i}")
    elif analysis == "runs":
        for run in res["runs"]:
            s, e = run["interval"]
            if not 1 <= s < e <= n:
                problems.append(f"run [{s}, {e}] out of range")
                continue
            y = x[s - 1 : e]
            for k, t in run["witnesses"]:
                blocks = [y[i : i + k] for i in range(0, len(y), k)]
                if k * t != len(y) or t < 2 or not all(_is_conjugate(blocks[0], b) for b in blocks):
                    problems.append(f"witness ({k}, {t}) fails on [{s}, {e}]")
    elif analysis == "cover":
        k = res["k"]
        u = x[:k]
        covered = [False] * n
        for i in res["occurrences"]:
            if not 1 <= i <= n - k + 1 or not _is_conjugate(u, x[i - 1 : i - 1 + k]):
                problems.append(f"occurrence {i} does not match")
                continue
            for p in range(i - 1, i - 1 + k):
                covered[p] = True
        in_gap = [False] * n
        for s, e in res["gaps"]:
            for p in range(s - 1, e):
                in_gap[p] = True
        if any(c == g for c, g in zip(covered, in_gap)):
            problems.append("gaps and occurrences do not partition the positions")
        if res["is_cover"] != (not res["gaps"]):
            problems.append("verdict disagrees with gaps")
    elif analysis == "covers":
        for k in res["covers"]:
            u = x[:k]
            reach = 0
            for i in range(n - k + 1):
                if i <= reach and _is_conjugate(u, x[i : i + k]):
                    reach = i + k
            if reach < n:
                problems.append(f"{k} is not a cyclic cover")
    elif analysis == "canonical":
        if not _is_conjugate(x, res["canonical"].encode("utf-8")):
            problems.append("canonical form is not a rotation of the input")
    return problems
