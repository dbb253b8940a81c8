#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Metacommutation command line

Subcommands:
    classes      list the prime classes over p with their conic labels
    metacommute  rewrite PQ as Q'P' and check the product
    permutation  tau_Q on the classes over p, against its predictions
    verify       sweep every (p, q, Q) up to the given bounds
    so2          property suite for the rotation groups of x^2 - t*y^2

stdout carries the payload (tables or JSON lines); progress, timing and
json-lines summaries go to stderr. Exit codes: 0 pass, 1 check mismatch,
2 bad input.
"""

import os
import sys
import json
import time
import argparse
import concurrent.futures
import multiprocessing
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy import isprime, primerange
from tabulate import tabulate
from tqdm import tqdm

from hurwitz_core import format_hurwitz, mul, norm, parse_hurwitz
from metacommutation import MetaReport, metacommute, observe, summarize
from prime_classes import enumerate_classes
from so2_conic import run_suite

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

FORMATS = ("table", "json-lines")
JOBS_ENV = "METACOMM_JOBS"


@dataclass(frozen=True)
class SweepConfig:
    p_max: int
    q_max: int
    format: str = "table"
    jobs: int = 1
    fail_fast: bool = False
    progress: bool = True

    def __post_init__(self):
        if self.p_max < 2 or self.q_max < 2:
            raise ValueError(f"prime bounds must be >= 2, got p_max={self.p_max} q_max={self.q_max}")
        if self.jobs < 1:
            raise ValueError(f"jobs must be >= 1, got {self.jobs}")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}, got {self.format!r}")


def default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV, "1")
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{JOBS_ENV} must be an integer, got {raw!r}")


def _status(msg: str):
    print(msg, file=sys.stderr)


def _require_prime(n: int, flag: str) -> int:
    if not isprime(n):
        raise ValueError(f"{flag} {n} is not prime")
    return n


def format_cycle_type(ct: Sequence[int]) -> str:
    ct = tuple(ct)
    parts = []
    for length in sorted(set(ct)):
        count = ct.count(length)
        parts.append(f"{length}^{count}" if count > 1 else str(length))
    return " ".join(parts)


def _emit_records(records: List[Dict[str, Any]], fmt: str, headers: Optional[List[str]] = None):
    if fmt == "json-lines":
        for rec in records:
            print(json.dumps(rec, ensure_ascii=False))
    else:
        rows = [list(rec.values()) for rec in records]
        print(tabulate(rows, headers=headers or (list(records[0].keys()) if records else [])))


def _report_row(r: MetaReport) -> List[Any]:
    return [
        r.p,
        r.q,
        format_hurwitz(r.Q),
        str(r.perm),
        format_cycle_type(r.cycle_type),
        f"{r.observed_sign:+d}/{r.predicted_sign:+d}",
        f"{r.observed_fixed}/{r.predicted_fixed}",
        r.case_tag,
        "yes" if r.paths_agree else "NO",
        "✓" if r.passed else "❌",
    ]


REPORT_HEADERS = ["p", "q", "Q", "cycles", "cycle type", "sign obs/pred", "fixed obs/pred", "case", "paths agree", ""]


def _emit_reports(reports: List[MetaReport], fmt: str):
    if fmt == "json-lines":
        for r in reports:
            print(json.dumps(r.to_record(), ensure_ascii=False))
    else:
        print(tabulate([_report_row(r) for r in reports], headers=REPORT_HEADERS))


def _emit_summary(summary: Dict[str, Any], fmt: str):
    rate = summary["trace_variant_disagreement_rate"]
    lines = [
        f"records: {summary['records']}  passed: {summary['passed']}  failed: {summary['failed']}",
        "cases: " + "  ".join(f"{k}={v}" for k, v in summary["cases"].items()),
        f"trace-form fixed-point variant: {summary['trace_variant_disagreements']}"
        f"/{summary['trace_variant_checked']} disagree ({rate:.1%})",
    ]
    stream = sys.stderr if fmt == "json-lines" else sys.stdout
    for line in lines:
        print(line, file=stream)


# ---------------------------------------------------------------------------
# subcommands

def cmd_classes(args) -> int:
    p = args.p
    classes = enumerate_classes(p)
    records = [
        {
            "p": p,
            "index": c.index,
            "rep": format_hurwitz(c.rep),
            "label": f"({c.label.x}:{c.label.y}:{c.label.z})" if c.label else "-",
        }
        for c in classes
    ]
    _emit_records(records, args.format)
    return EXIT_OK


def cmd_metacommute(args) -> int:
    P = parse_hurwitz(args.P)
    Q = parse_hurwitz(args.Q)
    Qp, Pp = metacommute(P, Q)
    ok = mul(Qp, Pp) == mul(P, Q)
    rows = [
        ["P", format_hurwitz(P), norm(P)],
        ["Q", format_hurwitz(Q), norm(Q)],
        ["Q'", format_hurwitz(Qp), norm(Qp)],
        ["P'", format_hurwitz(Pp), norm(Pp)],
        ["PQ", format_hurwitz(mul(P, Q)), norm(P) * norm(Q)],
    ]
    print(tabulate(rows, headers=["", "value", "norm"]))
    if ok:
        _status("✓ product check OK: Q'P' = PQ")
        return EXIT_OK
    _status("❌ product check failed: Q'P' != PQ")
    return EXIT_MISMATCH


def cmd_permutation(args) -> int:
    p = _require_prime(args.p, "--p")
    if args.Q:
        reports = [observe(parse_hurwitz(args.Q), p)]
    elif args.q:
        q = _require_prime(args.q, "--q")
        if q == p:
            raise ValueError("--q must differ from --p")
        reports = [observe(c.rep, p) for c in enumerate_classes(q)]
    else:
        raise ValueError("permutation needs --Q or --q")

    _emit_reports(reports, args.format)
    failed = [r for r in reports if not r.passed]
    for r in failed:
        _status(f"❌ mismatch for Q = {format_hurwitz(r.Q)} over p = {r.p}")
    return EXIT_MISMATCH if failed else EXIT_OK


# ---------------------------------------------------------------------------
# verification sweep

def _worker_init(p_max: int, q_max: int):
    """Warm the per-process class caches."""
    for n in primerange(2, max(p_max, q_max) + 1):
        enumerate_classes(int(n))


def _worker_verify_cell(cell: Tuple[int, int]) -> Tuple[int, int, List[MetaReport], Optional[str]]:
    """All classes over q observed over p; top-level so the spawn pool can pickle it."""
    p, q = cell
    try:
        reports = [observe(c.rep, p) for c in enumerate_classes(q)]
        return p, q, reports, None
    except Exception as e:
        return p, q, [], f"{type(e).__name__}: {e}"


class VerificationSweep:
    """Every (p, q, Q-class) cell up to the configured bounds."""

    def __init__(self, config: SweepConfig):
        self.config = config
        self.reports: List[MetaReport] = []
        self.errors: List[str] = []

    def cells(self) -> List[Tuple[int, int]]:
        return [
            (int(p), int(q))
            for p in primerange(2, self.config.p_max + 1)
            for q in primerange(2, self.config.q_max + 1)
            if p != q
        ]

    def _collect(self, result) -> bool:
        p, q, reports, error = result
        if error is not None:
            self.errors.append(f"p={p} q={q}: {error}")
            _status(f"❌ worker error at p={p} q={q}: {error}")
            return False
        self.reports.extend(reports)
        return all(r.passed for r in reports)

    def run(self) -> "VerificationSweep":
        cfg = self.config
        cells = self.cells()
        bar = tqdm(total=len(cells), desc="Verifying", unit="pairs", file=sys.stderr, disable=not cfg.progress)

        if cfg.jobs > 1:
            mp_ctx = multiprocessing.get_context("spawn")
            with concurrent.futures.ProcessPoolExecutor(
                max_workers=cfg.jobs,
                mp_context=mp_ctx,
                initializer=_worker_init,
                initargs=(cfg.p_max, cfg.q_max),
            ) as ex:
                # map yields in submission order
                for result in ex.map(_worker_verify_cell, cells, chunksize=4):
                    bar.update(1)
                    if not self._collect(result) and cfg.fail_fast:
                        ex.shutdown(wait=True, cancel_futures=True)
                        break
        else:
            for cell in cells:
                bar.update(1)
                if not self._collect(_worker_verify_cell(cell)) and cfg.fail_fast:
                    break
        bar.close()

        self.reports.sort(key=lambda r: (r.p, r.q, r.q_index))
        return self

    @property
    def passed(self) -> bool:
        return not self.errors and all(r.passed for r in self.reports)


def cmd_verify(args) -> int:
    config = SweepConfig(
        p_max=args.p_max,
        q_max=args.q_max,
        format=args.format,
        jobs=args.jobs if args.jobs is not None else default_jobs(),
        fail_fast=args.fail_fast,
        progress=not args.no_progress,
    )
    start = time.time()
    sweep = VerificationSweep(config).run()
    elapsed = time.time() - start

    _emit_reports(sweep.reports, config.format)
    _emit_summary(summarize(sweep.reports), config.format)
    _status(f"⏱ {len(sweep.reports)} records in {elapsed:.2f}s with {config.jobs} job(s)")

    if sweep.passed:
        _status("✓ all checks passed")
        return EXIT_OK
    _status(f"❌ {sum(1 for r in sweep.reports if not r.passed)} mismatches, {len(sweep.errors)} errors")
    return EXIT_MISMATCH


def cmd_so2(args) -> int:
    if args.p_max < 3:
        raise ValueError(f"--p-max must be >= 3, got {args.p_max}")
    rows = run_suite(args.p_max)
    headers = list(rows[0].keys())
    print(tabulate([[row[h] for h in headers] for row in rows], headers=headers))
    if all(row["passed"] for row in rows):
        _status("✓ SO(g_t) suite passed")
        return EXIT_OK
    _status("❌ SO(g_t) suite failed for p = " + ", ".join(str(r["p"]) for r in rows if not r["passed"]))
    return EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Metacommutation of Hurwitz primes")
    sub = parser.add_subparsers(dest="command", required=True)

    p_classes = sub.add_parser("classes", help="List the prime classes over p")
    p_classes.add_argument("--p", type=int, required=True, help="Prime norm")
    p_classes.add_argument("--format", choices=FORMATS, default="table", help="Output format")
    p_classes.set_defaults(func=cmd_classes)

    p_meta = sub.add_parser("metacommute", help="Rewrite PQ as Q'P'")
    p_meta.add_argument("--P", required=True, help='First prime, e.g. "1+i+j"')
    p_meta.add_argument("--Q", required=True, help='Second prime, e.g. "1+2i"')
    p_meta.set_defaults(func=cmd_metacommute)

    p_perm = sub.add_parser("permutation", help="tau_Q on the classes over p")
    p_perm.add_argument("--p", type=int, required=True, help="Prime whose classes are permuted")
    p_perm.add_argument("--Q", help="Prime quaternion Q")
    p_perm.add_argument("--q", type=int, help="Report every class over q instead of a single Q")
    p_perm.add_argument("--format", choices=FORMATS, default="table", help="Output format")
    p_perm.set_defaults(func=cmd_permutation)

    p_verify = sub.add_parser("verify", help="Sweep all (p, q, Q) up to the bounds")
    p_verify.add_argument("--p-max", type=int, default=31, help="Largest p")
    p_verify.add_argument("--q-max", type=int, default=31, help="Largest q")
    p_verify.add_argument("--format", choices=FORMATS, default="table", help="Output format")
    p_verify.add_argument("--jobs", type=int, default=None, help=f"Worker processes (default ${JOBS_ENV} or 1)")
    p_verify.add_argument("--fail-fast", action="store_true", help="Stop at the first failing (p, q) pair")
    p_verify.add_argument("--no-progress", action="store_true", help="Do not display progress bar")
    p_verify.set_defaults(func=cmd_verify)

    p_so2 = sub.add_parser("so2", help="Property suite for SO(x^2 - t*y^2)")
    p_so2.add_argument("--p-max", type=int, default=31, help="Largest odd prime")
    p_so2.set_defaults(func=cmd_so2)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError, OverflowError) as e:
        _status(f"❌ {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
