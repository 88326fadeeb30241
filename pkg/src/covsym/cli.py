"""Command-line entry point.

Exit codes: 0 success, 1 a verification failed, 2 usage or domain error.
"""
from __future__ import annotations

import argparse
import json
import shlex
import sys
import time
from pathlib import Path

from .fixtures import load_fixtures
from .identities import hopf_selfcheck
from .oracle import run_oracle
from .qpoly import DomainError, QPoly, format_qword, render, word_count_of_degree
from .symmetrizer import compute_h

SOFT_MAX_N = 30


class UsageError(Exception):
    pass


class Report:
    """Collects check lines; printed as text or JSON, deterministically."""

    def __init__(self, command: list[str], timings: bool):
        self.command = command
        self.checks: list[dict] = []
        self.timings = timings
        self._t0 = time.perf_counter()

    def add(self, name: str, passed: bool, **detail) -> None:
        self.checks.append({"name": name, "status": "pass" if passed else "fail", **detail})

    @property
    def exit_code(self) -> int:
        return 0 if all(c["status"] == "pass" for c in self.checks) else 1

    def emit(self, as_json: bool, out=None) -> None:
        out = out or sys.stdout
        elapsed = time.perf_counter() - self._t0
        if as_json:
            payload = {"command": self.command, "checks": self.checks, "exit_code": self.exit_code}
            if self.timings:
                payload["seconds"] = round(elapsed, 3)
            print(json.dumps(payload, indent=2, sort_keys=True), file=out)
            return
        print("command: " + " ".join(shlex.quote(a) for a in self.command), file=out)
        for c in self.checks:
            extras = ", ".join(f"{k}={v}" for k, v in c.items() if k not in ("name", "status"))
            line = f"{c['status'].upper()} {c['name']}"
            print(line + (f" ({extras})" if extras else ""), file=out)
        npass = sum(c["status"] == "pass" for c in self.checks)
        print(f"{npass}/{len(self.checks)} passed, exit {self.exit_code}", file=out)
        if self.timings:
            print(f"elapsed {elapsed:.3f}s", file=out)


def first_difference(expected: QPoly, actual: QPoly):
    """Smallest word (canonical order) where the two polynomials disagree."""
    words = sorted(set(expected) | set(actual), key=QPoly.sort_key)
    for w in words:
        if expected[w] != actual[w]:
            return w, expected[w], actual[w]
    return None


def load_fixture_file(path: str) -> dict[int, QPoly]:
    """Fixtures in the ``compute --format json`` schema: one object or a list of them."""
    data = json.loads(Path(path).read_text())
    if isinstance(data, dict):
        data = [data]
    return {int(d["n"]): QPoly.from_json_terms(d["terms"]) for d in data}


def verify(max_n: int, fixtures: dict[int, QPoly], report: Report) -> None:
    for n in range(1, max_n + 1):
        if n not in fixtures:
            report.add(f"H_{n}", False, reason="no fixture")
            continue
        actual = compute_h(n)
        diff = first_difference(fixtures[n], actual)
        if diff is None:
            report.add(f"H_{n}", True, terms=len(actual))
        else:
            w, e, a = diff
            report.add(f"H_{n}", False, word=format_qword(w), expected=str(e), actual=str(a))


def fibonacci(k: int) -> int:
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def _cmd_compute(args, command) -> int:
    if args.n < 0:
        raise UsageError("n must be non-negative")
    if args.n > SOFT_MAX_N:
        print(f"warning: n = {args.n} exceeds {SOFT_MAX_N}; memory grows like φ_(n-1) words",
              file=sys.stderr)
    text = render(compute_h(args.n), args.n, args.format)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    return 0


def _cmd_verify(args, command) -> int:
    if not 1 <= args.max_n <= 10:
        raise UsageError("--max-n must be between 1 and 10")
    fixtures = load_fixture_file(args.fixtures) if args.fixtures else load_fixtures()
    report = Report(command, args.timings)
    verify(args.max_n, fixtures, report)
    report.emit(args.json)
    return report.exit_code


def _cmd_count(args, command) -> int:
    if args.n < 2:
        raise UsageError("count requires n >= 2")
    report = Report(command, args.timings)
    count = len(compute_h(args.n))
    fib = fibonacci(args.n - 1)
    words = word_count_of_degree(args.n)
    report.add(f"count H_{args.n}", count == fib == words, terms=count, fibonacci=fib, words=words)
    report.emit(args.json)
    return report.exit_code


def _cmd_selfcheck(args, command) -> int:
    if args.generators < 1 or args.max_degree < 1 or args.trials < 0:
        raise UsageError("need generators >= 1, max-degree >= 1, trials >= 0")
    report = Report(command, args.timings)
    for r in hopf_selfcheck(args.generators, args.max_degree, args.trials, args.seed):
        detail = {"cases": r.cases, "failures": r.failures}
        if r.first_failure:
            detail["first_failure"] = r.first_failure
        report.add(r.name, r.passed, **detail)
    report.emit(args.json)
    return report.exit_code


def _cmd_oracle(args, command) -> int:
    r = run_oracle(args.surface, args.vnorm, args.order, args.eps, args.tol)
    report = Report(command, args.timings)
    report.add(f"oracle {r.surface} |v|={r.vnorm}", r.passed,
               finite_difference=repr(r.finite_difference), series=repr(r.series),
               closed_form=repr(r.closed_form), err_fd_series=f"{r.err_fd_series:.3e}",
               err_fd_closed=f"{r.err_fd_closed:.3e}", err_series_closed=f"{r.err_series_closed:.3e}",
               tol=repr(r.tol))
    report.emit(args.json)
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="covsym",
        description="Linear-in-w Taylor operators H_n of the double exponential map.",
    )
    parser.add_argument("--threads", type=int, default=1,
                        help="parallelism hint; results never depend on it (currently single-threaded)")
    sub = parser.add_subparsers(dest="command", required=True)

    def reporting(p):
        p.add_argument("--json", action="store_true", help="emit the report as JSON")
        p.add_argument("--timings", action="store_true", help="include wall-clock time in the report")

    p = sub.add_parser("compute", help="compute and print H_n")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=["text", "json", "latex"], default="text")
    p.add_argument("--out", help="write to this file instead of stdout")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("verify", help="compare H_1..H_max_n with the embedded tables")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--fixtures", help="JSON file overriding the embedded tables")
    reporting(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("count", help="term count of H_n against the Fibonacci law")
    p.add_argument("n", type=int)
    reporting(p)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("selfcheck", help="bialgebra identities of K and tau")
    p.add_argument("--generators", type=int, default=2)
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--trials", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    reporting(p)
    p.set_defaults(func=_cmd_selfcheck)

    p = sub.add_parser("oracle", help="constant-curvature geometry check of Σ H_n/n!")
    p.add_argument("--surface", choices=["sphere", "hyperbolic", "flat"], default="sphere")
    p.add_argument("--vnorm", type=float, default=0.4)
    p.add_argument("--order", type=int, default=10)
    p.add_argument("--eps", type=float, default=1e-4)
    p.add_argument("--tol", type=float, default=1e-6)
    reporting(p)
    p.set_defaults(func=_cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, ["covsym", *argv])
    except (UsageError, DomainError) as exc:
        print(f"covsym: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
