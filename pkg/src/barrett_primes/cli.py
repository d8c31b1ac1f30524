"""Command-line surface: counting, tables, term inspection, verification, benchmarks.

Exit codes are a stable contract: 0 success, 1 verification mismatch,
2 usage or domain error, 3 resource limit exceeded.  Data rows go to stdout
and are byte-identical across runs and thread counts; timing and progress
notes go to stderr.  Real columns are printed with a fixed number of decimal
places and a '.' decimal point regardless of locale.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
import time
from dataclasses import dataclass

import numpy as np

from .counter import barrett_count, barrett_term, pnt_estimate, reduced_sine_arguments
from .errors import DomainError, ResourceLimitError
from .sieve import DEFAULT_SIEVE_CAP, build_sieve
from .trig import NAIVE_UNDEFINED_REASON, compare_methods, term_naive_float, term_reduced_trig
from .verify import full_verification

FORMATS = ("human", "csv", "tsv", "jsonl")
THREADS_ENV = "BARRETT_THREADS"

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


@dataclass(frozen=True)
class RunConfig:
    """Resolved global options for one invocation."""

    threads: int
    sieve_cap: int
    fmt: str


def _resolve_threads(flag: int | None) -> int:
    """Worker count: --threads flag, then BARRETT_THREADS, then machine parallelism."""
    if flag is not None:
        return flag
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            value = int(env)
        except ValueError:
            raise DomainError(f"{THREADS_ENV} must be an integer, got {env!r}") from None
        if value < 1:
            raise DomainError(f"{THREADS_ENV} must be >= 1, got {value}")
        return value
    return os.cpu_count() or 1


def _format_cell(value, spec: str | None) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if spec is not None and isinstance(value, float):
        return format(value, spec)
    return str(value)


def _json_value(value, spec: str | None):
    if spec is not None and isinstance(value, float):
        # parse the fixed-point rendering back so every format carries the same number
        return float(format(value, spec))
    return value


def _emit_rows(rows, columns, cfg: RunConfig, float_spec=None) -> None:
    """Write dict rows to stdout in the configured format.

    ``float_spec`` maps column name to a format spec (e.g. ".6f"); the same
    spec drives every output format so numeric content is identical.
    """
    float_spec = float_spec or {}
    if cfg.fmt == "jsonl":
        for row in rows:
            record = {c: _json_value(row[c], float_spec.get(c)) for c in columns}
            sys.stdout.write(json.dumps(record) + "\n")
        return
    if cfg.fmt in ("csv", "tsv"):
        writer = csv.writer(
            sys.stdout, delimiter="," if cfg.fmt == "csv" else "\t", lineterminator="\n"
        )
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_format_cell(row[c], float_spec.get(c)) for c in columns])
        return
    cells = [[_format_cell(row[c], float_spec.get(c)) for c in columns] for row in rows]
    widths = [max(len(c), *(len(r[i]) for r in cells)) if cells else len(c) for i, c in enumerate(columns)]
    sys.stdout.write("  ".join(c.rjust(w) for c, w in zip(columns, widths)) + "\n")
    for r in cells:
        sys.stdout.write("  ".join(cell.rjust(w) for cell, w in zip(r, widths)) + "\n")


def _count_lookup(n_hi: int, threads: int):
    """One residue sweep serving Barr(n) for every n in [5, n_hi]."""
    if n_hi >= 6:
        m = reduced_sine_arguments(5, n_hi - 1, threads=threads)
        csum = np.cumsum(m == np.arange(5, n_hi, dtype=np.int64) - 1)
    else:
        csum = np.zeros(0, dtype=np.int64)

    def barr(n: int) -> int:
        return 3 if n == 5 else 3 + int(csum[n - 6])

    return barr


def cmd_count(args, cfg: RunConfig) -> int:
    n = args.n
    barr = barrett_count(n, threads=cfg.threads)
    oracle = build_sieve(n - 1, cap=cfg.sieve_cap)
    pi = oracle.pi(n - 1)
    if cfg.fmt == "human":
        print(f"Barr({n}) = {barr}; pi({n - 1}) = {pi}; difference = {barr - pi}")
    else:
        _emit_rows([{"n": n, "barr": barr, "pi": pi, "diff": barr - pi}],
                   ["n", "barr", "pi", "diff"], cfg)
    return EXIT_OK


def cmd_table(args, cfg: RunConfig) -> int:
    start, stop, step = args.start, args.stop, args.step
    if start < 5:
        raise DomainError(f"table rows start at n = 5, got {start}")
    if stop < start:
        raise DomainError(f"empty table range [{start}, {stop}]")
    if step < 1:
        raise DomainError(f"step must be >= 1, got {step}")
    oracle = build_sieve(stop - 1, cap=cfg.sieve_cap)
    barr = _count_lookup(stop, cfg.threads)
    rows = []
    for n in range(start, stop + 1, step):
        b = barr(n)
        rows.append({
            "n": n,
            "barr": b,
            "pi": oracle.pi(n - 1),
            "pnt": pnt_estimate(n),
            "ratio": b * math.log(n) / n,
        })
    _emit_rows(rows, ["n", "barr", "pi", "pnt", "ratio"], cfg,
               float_spec={"pnt": ".6f", "ratio": ".6f"})
    return EXIT_OK


def cmd_term(args, cfg: RunConfig) -> int:
    k, method = args.k, args.method
    term = barrett_term(k)
    note = None
    if method == "exact":
        value = term.value
    elif method == "reduced-trig":
        value = term_reduced_trig(k)
    else:
        value = term_naive_float(k)
        if value is None:
            note = NAIVE_UNDEFINED_REASON
    if cfg.fmt == "human":
        shown = "undefined" if value is None else (
            str(value) if method == "exact" else format(value, ".6f"))
        line = f"k = {k}: method = {method}, m = {term.m}, value = {shown}, {term.classification}"
        if note:
            line += f" ({note})"
        print(line)
    else:
        _emit_rows(
            [{"k": k, "method": method, "m": term.m, "value": value,
              "classification": term.classification, "note": note}],
            ["k", "method", "m", "value", "classification", "note"],
            cfg, float_spec={"value": ".6f"},
        )
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig) -> int:
    started = time.perf_counter()
    report = full_verification(args.max, threads=cfg.threads, sieve_cap=cfg.sieve_cap)
    elapsed = time.perf_counter() - started
    result = "pass" if report.passed else "fail"
    if cfg.fmt == "human":
        print(f"verify: k in [5, {report.k_max}]")
        print(f"terms checked: {report.terms_checked}")
        print(f"term mismatches: {len(report.mismatches)}")
        print(f"composite m split: m=0: {report.composite_m_zero}, m=k: {report.composite_m_k}")
        print(f"absorption checked: {report.absorption_checked} composites, "
              f"failures: {len(report.absorption_failures)}")
        print(f"result: {result.upper()}")
    else:
        _emit_rows(
            [{
                "k_max": report.k_max,
                "terms_checked": report.terms_checked,
                "term_mismatches": len(report.mismatches),
                "composite_m_zero": report.composite_m_zero,
                "composite_m_k": report.composite_m_k,
                "absorption_checked": report.absorption_checked,
                "absorption_failures": len(report.absorption_failures),
                "result": result,
            }],
            ["k_max", "terms_checked", "term_mismatches", "composite_m_zero",
             "composite_m_k", "absorption_checked", "absorption_failures", "result"],
            cfg,
        )
    for mismatch in report.mismatches[:20]:
        print(f"mismatch: {mismatch}", file=sys.stderr)
    for k in report.absorption_failures[:20]:
        print(f"absorption failure at k = {k}", file=sys.stderr)
    print(f"elapsed: {elapsed:.2f}s", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_MISMATCH


def cmd_bench(args, cfg: RunConfig) -> int:
    k_max = args.max
    started = time.perf_counter()
    serial = reduced_sine_arguments(5, k_max, threads=1)
    serial_s = time.perf_counter() - started
    started = time.perf_counter()
    parallel = reduced_sine_arguments(5, k_max, threads=cfg.threads)
    parallel_s = time.perf_counter() - started
    identical = bool(np.array_equal(serial, parallel))
    terms = k_max - 4
    primes_found = int(np.count_nonzero(serial == np.arange(5, k_max + 1, dtype=np.int64) - 1))
    if cfg.fmt == "human":
        print(f"bench: exact terms for k in [5, {k_max}] ({terms} terms)")
        print(f"primes found: {primes_found}")
        print(f"serial: {serial_s:.3f}s ({terms / serial_s:,.0f} terms/s)")
        print(f"parallel ({cfg.threads} threads): {parallel_s:.3f}s "
              f"({terms / parallel_s:,.0f} terms/s)")
        print(f"identical results: {'true' if identical else 'false'}")
    else:
        _emit_rows(
            [{
                "max": k_max, "threads": cfg.threads, "terms": terms,
                "primes_found": primes_found, "identical": identical,
                "serial_seconds": serial_s, "parallel_seconds": parallel_s,
            }],
            ["max", "threads", "terms", "primes_found", "identical",
             "serial_seconds", "parallel_seconds"],
            cfg, float_spec={"serial_seconds": ".6f", "parallel_seconds": ".6f"},
        )
    return EXIT_OK if identical else EXIT_MISMATCH


def cmd_compare(args, cfg: RunConfig) -> int:
    report = compare_methods(args.k_lo, args.k_hi, threads=cfg.threads)
    rows = [
        {
            "k": r.k,
            "exact": r.exact,
            "reduced": r.reduced_trig,
            "err_reduced": r.abs_error_reduced,
            "naive": r.naive_float,
            "err_naive": r.abs_error_naive,
            "naive_defined": r.naive_defined,
            "numerator": r.numerator,
        }
        for r in report.rows
    ]
    _emit_rows(
        rows,
        ["k", "exact", "reduced", "err_reduced", "naive", "err_naive",
         "naive_defined", "numerator"],
        cfg,
        float_spec={"reduced": ".6f", "err_reduced": ".3e", "naive": ".6f",
                    "err_naive": ".3e", "numerator": ".3e"},
    )
    divergence = ("none" if report.first_naive_divergence is None
                  else str(report.first_naive_divergence))
    summary = (f"max reduced error: {report.max_abs_error_reduced:.3e}; "
               f"first naive divergence (error > 0.5): {divergence}")
    print(summary, file=sys.stdout if cfg.fmt == "human" else sys.stderr)
    return EXIT_OK


_COMMANDS = {
    "count": cmd_count,
    "table": cmd_table,
    "term": cmd_term,
    "verify": cmd_verify,
    "bench": cmd_bench,
    "compare": cmd_compare,
}


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS,
                        help="output format for data rows (default: human)")
    common.add_argument("--threads", type=_positive_int, default=argparse.SUPPRESS,
                        help=f"worker count (default: ${THREADS_ENV} or machine parallelism)")
    common.add_argument("--sieve-cap", type=_positive_int, default=argparse.SUPPRESS,
                        dest="sieve_cap",
                        help=f"sieve memory cap (default: {DEFAULT_SIEVE_CAP})")

    parser = argparse.ArgumentParser(
        prog="barrett-primes", parents=[common],
        description="Exact evaluation and verification of the 1903 Barrett prime counter.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("count", parents=[common],
                       help="Barr(n), the oracle count pi(n-1), and their difference")
    p.add_argument("n", type=int)

    p = sub.add_parser("table", parents=[common],
                       help="comparison table against the n/ln(n) estimate")
    p.add_argument("start", metavar="from", type=int)
    p.add_argument("stop", metavar="to", type=int)
    p.add_argument("step", type=int)

    p = sub.add_parser("term", parents=[common], help="inspect a single series term")
    p.add_argument("k", type=int)
    p.add_argument("--method", choices=("exact", "reduced-trig", "naive-float"),
                   default="exact")

    p = sub.add_parser("verify", parents=[common],
                       help="full property sweep against the sieve oracle")
    p.add_argument("max", type=int)

    p = sub.add_parser("bench", parents=[common],
                       help="serial vs parallel throughput of the exact evaluator")
    p.add_argument("max", type=int)

    p = sub.add_parser("compare", parents=[common],
                       help="exact vs reduced-trig vs naive-float over a k range")
    p.add_argument("k_lo", type=int)
    p.add_argument("k_hi", type=int)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(
            threads=_resolve_threads(getattr(args, "threads", None)),
            sieve_cap=getattr(args, "sieve_cap", DEFAULT_SIEVE_CAP),
            fmt=getattr(args, "format", "human"),
        )
        return _COMMANDS[args.command](args, cfg)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


def entry() -> None:
    sys.exit(main())
