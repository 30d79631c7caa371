"""``cyclorex`` command line.

Exit codes: 0 success or affirmative verdict, 1 negative verdict,
2 usage or parameter error, 3 input/parse error.
"""

from __future__ import annotations

import argparse
import sys
import time

from cyclorex import bench, oracle
from cyclorex.cover import all_cyclic_covers, k_cyclic_cover_report
from cyclorex.period import all_cyclic_periods, cyclic_period_array, k_cyclic_decompose
from cyclorex.report import (
    cover_payload,
    decomposition_payload,
    dumps,
    envelope,
    run_payload,
    show,
)
from cyclorex.runs import maximal_cyclic_runs, maximal_k_cyclic_runs
from cyclorex.text import ParameterError, canonical_rotation, rotate

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3
NAIVE_LIMIT = 2000
DNA = frozenset(b"ACGT")


class InputError(Exception):
    """Unreadable or malformed input."""


def parse_fasta(text: str, record: str | None = None) -> tuple[str, str]:
    """Return ``(identifier, sequence)`` of the selected record (first by default)."""
    records: list[tuple[str, list[str]]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith(";"):
            continue
        if line.startswith(">"):
            ident = line[1:].split(maxsplit=1)
            if not ident:
                raise InputError(f"line {lineno}: header without identifier")
            records.append((ident[0], []))
        elif not records:
            raise InputError(f"line {lineno}: sequence data before the first '>' header")
        else:
            records[-1][1].append("".join(line.split()))
    if not records:
        raise InputError("no FASTA records found")
    for ident, parts in records:
        if record is None or ident == record:
            seq = "".join(parts)
            if not seq:
                raise InputError(f"record {ident!r} has an empty sequence")
            return ident, seq
    raise InputError(f"record {record!r} not found")


def read_input(args) -> bytes:
    if args.fasta is not None:
        try:
            with open(args.fasta, encoding="utf-8") as fh:
                text = fh.read()
        except (OSError, UnicodeDecodeError) as exc:
            raise InputError(str(exc)) from exc
        _, seq = parse_fasta(text, args.record)
        if not args.keep_case:
            seq = seq.upper()
        x = seq.encode("utf-8")
        if args.strict_dna and not set(x) <= DNA:
            bad = sorted(set(x) - DNA)
            raise InputError(f"non-ACGT symbols: {show(bytes(bad))}")
    elif args.input is not None:
        try:
            with open(args.input, "rb") as fh:
                x = fh.read()
        except OSError as exc:
            raise InputError(str(exc)) from exc
        if x.endswith(b"\r\n"):
            x = x[:-2]
        elif x.endswith(b"\n"):
            x = x[:-1]
        if any(c in b" \t\r\n\v\f" for c in x):
            raise InputError("whitespace inside plain-text input")
    elif args.string:
        x = args.string.encode("utf-8")
    elif args.string is not None:
        raise ParameterError("empty input string")
    else:
        raise ParameterError("no input: give STRING, --input FILE or --fasta FILE")
    if not x:
        raise InputError("empty input")
    if len(x) > args.max_length:
        raise InputError(f"input length {len(x)} exceeds --max-length {args.max_length}")
    if args.rotate is not None:
        x = rotate(x, args.rotate)
    return x


def _need_k(args) -> int:
    if args.k is None:
        raise ParameterError(f"{args.command} needs --k")
    return args.k


def analyze(args, x: bytes) -> tuple[dict, int, list[str]]:
    """Run the subcommand; returns the result payload, exit code and human lines."""
    cmd = args.command
    n = len(x)
    if cmd == "period":
        k = _need_k(args)
        dec = k_cyclic_decompose(x, k)
        res = decomposition_payload(x, k, dec)
        if args.naive:
            res["naive_agrees"] = oracle.naive_k_cyclic(x, k) == (dec is not None)
        if dec is None:
            return res, EXIT_NEGATIVE, [f"not {k}-cyclic periodic"]
        lines = [f"{k}-cyclic periodic, ell = {dec.ell}"]
        lines += [f"  block {i}: {show(b)} (shift {d})" for i, (b, d) in enumerate(zip(dec.blocks(x), dec.shifts), 1)]
        return res, EXIT_OK, lines
    if cmd == "periods":
        periods = all_cyclic_periods(x)
        res = {"periods": [list(p) for p in periods if not args.nontrivial or p[1] >= 2]}
        if args.naive:
            res["naive_agrees"] = oracle.naive_all_periods(x) == periods
        return res, EXIT_OK, [f"k = {k}, ell = {ell}" for k, ell in res["periods"]]
    if cmd == "period-array":
        arr = cyclic_period_array(x)
        res = {"array": arr}
        if args.naive:
            res["naive_agrees"] = oracle.naive_period_array(x) == arr
        return res, EXIT_OK, [" ".join(map(str, arr))]
    if cmd == "runs":
        if args.k is not None:
            runs = maximal_k_cyclic_runs(x, args.k)
            res = {"k": args.k, "runs": [run_payload(r) for r in runs]}
        else:
            runs = maximal_cyclic_runs(x)
            res = {"runs": [run_payload(r) for r in runs]}
            if args.naive:
                res["naive_agrees"] = oracle.naive_maximal_runs(x) == [r.interval for r in runs]
        lines = [
            f"[{r.start}, {r.end}] {show(x[r.start - 1 : r.end])}  "
            + " ".join(f"k={k}x{t}" for k, t in r.witnesses)
            for r in runs
        ]
        return res, EXIT_OK, lines
    if cmd == "cover":
        k = _need_k(args)
        rep = k_cyclic_cover_report(x, k)
        res = cover_payload(rep)
        if args.naive:
            occ, covered = oracle.naive_cover_marks(x, k)
            res["naive_agrees"] = occ == list(rep.occurrences) and all(covered) == rep.is_cover
        lines = [
            f"{k}-cyclic cover by {show(rep.cover_string)}: {'yes' if rep.is_cover else 'no'}",
            "  occurrences: " + " ".join(map(str, rep.occurrences)),
        ]
        if rep.gaps:
            lines.append("  gaps: " + " ".join(f"[{s}, {e}]" for s, e in rep.gaps))
        return res, EXIT_OK if rep.is_cover else EXIT_NEGATIVE, lines
    if cmd == "covers":
        covers = all_cyclic_covers(x)
        res = {"covers": covers, "smallest": covers[0] if covers else None, "trivial": n}
        if args.naive:
            res["naive_agrees"] = oracle.naive_covers(x) == covers
        return res, EXIT_OK, [" ".join(map(str, covers)) or "(only the trivial cover)"]
    if cmd == "canonical":
        canon, shift = canonical_rotation(x)
        res = {"canonical": show(canon), "shift": shift}
        if args.naive:
            res["naive_agrees"] = oracle.naive_canonical_rotation(x) == (canon, shift)
        return res, EXIT_OK, [f"{show(canon)} (shift {shift})"]
    raise AssertionError(cmd)


def _csv_ints(text: str) -> list[int]:
    try:
        vals = [int(v) for v in text.split(",") if v]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not vals or min(vals) < 1:
        raise argparse.ArgumentTypeError("sizes must be positive")
    return vals


def _csv_choice(choices):
    def parse(text: str) -> list[str]:
        vals = [v for v in text.split(",") if v]
        bad = [v for v in vals if v not in choices]
        if bad or not vals:
            raise argparse.ArgumentTypeError(f"choose from {', '.join(choices)}")
        return vals

    return parse


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("string", nargs="?", help="input string (omit when using --input/--fasta)")
    src = common.add_mutually_exclusive_group()
    src.add_argument("--input", metavar="FILE", help="plain-text file holding one string")
    src.add_argument("--fasta", metavar="FILE", help="FASTA file")
    common.add_argument("--record", metavar="ID", help="FASTA record identifier (default: first)")
    common.add_argument("--k", type=int, help="block length / cover length")
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--naive", action="store_true", help=f"cross-check with brute force (n <= {NAIVE_LIMIT})")
    common.add_argument("--nontrivial", action="store_true", help="drop the trivial (n, 1) period")
    common.add_argument("--rotate", type=int, metavar="D", help="rotate the input to start at position D first")
    common.add_argument("--seed", type=int, default=0, help="accepted for symmetry with bench; analyses are deterministic")
    common.add_argument("--timing", action="store_true", help="fill elapsed_ms (otherwise null)")
    common.add_argument("--keep-case", action="store_true", help="do not uppercase FASTA sequences")
    common.add_argument("--strict-dna", action="store_true", help="reject FASTA symbols other than ACGT")
    common.add_argument("--max-length", type=int, default=10**7, help="reject longer inputs (default 10^7)")

    parser = argparse.ArgumentParser(prog="cyclorex", description="Cyclic periods, runs and covers of strings.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in [
        ("period", "test k-cyclic periodicity (--k)"),
        ("periods", "all cyclic periods"),
        ("period-array", "cyclic-periodic array over prefixes"),
        ("runs", "maximal cyclic periodic substrings (optionally for one --k)"),
        ("cover", "k-cyclic cover report (--k)"),
        ("covers", "all proper cyclic cover lengths"),
        ("canonical", "least rotation"),
    ]:
        sub.add_parser(name, parents=[common], help=help_)

    b = sub.add_parser("bench", help="time the analyses on generated inputs, CSV to stdout")
    b.add_argument("--sizes", type=_csv_ints, default=[1000, 2000, 4000])
    b.add_argument("--families", type=_csv_choice(bench.FAMILIES), default=list(bench.FAMILIES))
    b.add_argument("--ops", type=_csv_choice(tuple(bench.operations())), default=list(bench.operations()))
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--block", type=int, default=4, help="block length for k-periodic inputs and the k-period test")
    b.add_argument("--alphabet", default="ab")
    b.add_argument("--repeat", type=int, default=1)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "bench":
        if args.block < 1 or args.repeat < 1 or not args.alphabet:
            parser.error("--block and --repeat must be positive, --alphabet non-empty")
        rows = bench.run(
            args.sizes, args.families, args.ops, args.seed,
            repeat=args.repeat, block=args.block, alphabet=args.alphabet.encode("utf-8"),
        )
        bench.write_csv(rows, sys.stdout)
        return EXIT_OK

    try:
        x = read_input(args)
        if args.naive and len(x) > NAIVE_LIMIT:
            raise ParameterError(f"--naive refuses inputs longer than {NAIVE_LIMIT}")
        t0 = time.perf_counter()
        result, code, lines = analyze(args, x)
        elapsed = (time.perf_counter() - t0) * 1000 if args.timing else None
    except ParameterError as exc:
        print(f"cyclorex: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InputError as exc:
        print(f"cyclorex: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    if args.json:
        print(dumps(envelope(args.command, x, result, elapsed)))
    else:
        for line in lines:
            print(line)
        if "naive_agrees" in result:
            print(f"naive cross-check: {'agrees' if result['naive_agrees'] else 'DISAGREES'}")
        if elapsed is not None:
            print(f"elapsed: {elapsed:.3f} ms", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
