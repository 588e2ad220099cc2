"""Command-line front end.

Every command prints one JSON document ``{"status", "command", "payload"}``
(or a table with ``--pretty``). Exit codes: 0 ok, 1 infeasible, 2 input
error, 3 resource or internal error. Column indices are 1-based here.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from . import minimality, minimax, oracle
from .core import greatest_solution, is_solvable, unique_solution_check
from .documents import parse_assignment, parse_problem, read_source, scalar, vector
from .exceptions import (
    FRIError,
    InfeasibleError,
    InputError,
    InternalError,
    PreconditionError,
    ResourceError,
)

EXIT_OK, EXIT_INFEASIBLE, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3

_STATUS = {
    InfeasibleError: ("infeasible", EXIT_INFEASIBLE),
    InputError: ("input-error", EXIT_INPUT),
    PreconditionError: ("input-error", EXIT_INPUT),
    ResourceError: ("resource-error", EXIT_RESOURCE),
    InternalError: ("internal-error", EXIT_RESOURCE),
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise _UsageError(message)


def _fraction_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None


def _perm_arg(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(t) - 1 for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated index list: {text!r}") from None


def _positive_int(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        k = 0
    if k < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return k


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="print a table instead of JSON")
    common.add_argument("--jobs", type=_positive_int, default=1, help="worker count")

    parser = _Parser(
        prog="lukfri",
        description="Exact solver for addition-Lukasiewicz fuzzy relational inequalities.",
        epilog="FILE may name a bundled example (example1.json ... example7.json).",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, help_text in [
        ("check", "report solvability"),
        ("greatest", "greatest solution"),
        ("unique-minimal", "unique minimal solution, if any"),
        ("unique-solution", "whether all-ones is the only solution"),
    ]:
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.add_argument("file")

    sp = sub.add_parser("minimal", parents=[common], help="reduce a solution to a minimal one")
    sp.add_argument("file")
    sp.add_argument("--from", dest="start", metavar="XFILE", help="starting solution (default all-ones)")
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--perm", type=_perm_arg, help="reduction order, e.g. 1,2,3")
    group.add_argument("--all-perms", action="store_true", help="try every order")
    sp.add_argument("--limit", type=_positive_int, default=720, help="max distinct results")
    sp.add_argument("--allow-large", action="store_true", help="permit sweeps with n > 8")

    sp = sub.add_parser("certify", parents=[common], help="minimality certificate of a solution")
    sp.add_argument("file")
    sp.add_argument("--x", dest="point", metavar="XFILE", required=True)

    sp = sub.add_parser("minimax", parents=[common], help="minimize the largest coordinate")
    sp.add_argument("file")
    sp.add_argument("--trace", action="store_true", help="include per-row iteration traces")
    sp.add_argument("--minimal-optimals", action="store_true")
    sp.add_argument("--limit", type=_positive_int, default=720)
    sp.add_argument("--allow-large", action="store_true")
    sp.add_argument("--verify", action="store_true", help="cross-check against the grid oracle")
    sp.add_argument("--step", type=_fraction_arg, help="oracle grid step for --verify")

    sp = sub.add_parser("oracle", parents=[common], help="brute-force grid references")
    sp.add_argument("mode", choices=["feasible", "minimax", "falsify"])
    sp.add_argument("file")
    sp.add_argument("--step", type=_fraction_arg, required=True)
    sp.add_argument("--from", dest="start", metavar="XFILE", help="solution to falsify")
    sp.add_argument("--full-scan", action="store_true", help="n-dimensional minimax scan")
    return parser


def _cert_payload(cert: minimality.MinimalityCertificate) -> Dict[str, Any]:
    return {
        "minimal": cert.minimal,
        "tight_row": None if cert.tight_row is None else cert.tight_row + 1,
        "tight_rows": [i + 1 for i in cert.tight_rows],
        "support": sorted(j + 1 for j in cert.support),
        "strict_flags": {str(j + 1): v for j, v in sorted(cert.strict_flags.items())},
        "fixed_point_deltas": vector(cert.fixed_point_deltas),
    }


def _trace_payload(trace: minimax.RowMinimaxTrace) -> List[Dict[str, Any]]:
    return [
        {
            "k": s.k,
            "u": scalar(s.u),
            "active_set": sorted(j + 1 for j in s.active),
            "row_sum": scalar(s.row_sum),
        }
        for s in trace.steps
    ]


def _dispatch(args) -> Tuple[str, Dict[str, Any]]:
    p = parse_problem(read_source(args.file))
    cmd = args.command

    if cmd == "check":
        payload = {
            "solvable": is_solvable(p),
            "shape": [p.m, p.n],
            "row_sums": vector(p.row_sums()),
            "b": vector(p.b),
        }
        return ("ok" if payload["solvable"] else "infeasible"), payload

    if cmd == "greatest":
        return "ok", {"x": vector(greatest_solution(p))}

    if cmd == "unique-minimal":
        v = minimality.unique_minimal(p)
        return "ok", {"unique_minimal": None if v is None else vector(v)}

    if cmd == "unique-solution":
        return "ok", {"unique_solution": unique_solution_check(p)}

    if cmd == "certify":
        x = parse_assignment(read_source(args.point), p.n)
        return "ok", _cert_payload(minimality.is_minimal(p, x))

    if cmd == "minimal":
        x = parse_assignment(read_source(args.start), p.n) if args.start else greatest_solution(p)
        if args.all_perms:
            sols = minimality.enumerate_minimals(
                p, x, args.limit, allow_large=args.allow_large, jobs=args.jobs
            )
            return "ok", {"start": vector(x), "count": len(sols), "minimal_solutions": [vector(s) for s in sols]}
        tr = minimality.reduction_trace(p, x, args.perm)
        cert = minimality.is_minimal(p, tr.result)
        return "ok", {
            "start": vector(tr.start),
            "perm": [j + 1 for j in tr.perm],
            "shortcut_vector": vector(tr.shortcut_vector),
            "shortcut_used": tr.shortcut_used,
            "steps": [
                {"index": s.index + 1, "delta": scalar(s.delta), "x": vector(s.vector)} for s in tr.steps
            ],
            "minimal": vector(tr.result),
            "certificate": _cert_payload(cert),
        }

    if cmd == "minimax":
        res = minimax.solve_minimax(p, jobs=args.jobs)
        payload: Dict[str, Any] = {
            "u_star": scalar(res.u_star),
            "optimal_value": scalar(res.optimal_value),
            "row_optima": vector(res.row_optima),
            "greatest_optimal": vector(res.greatest_optimal),
            "unique": res.unique,
        }
        if args.trace:
            payload["traces"] = [_trace_payload(t) for _, t in res.per_row]
        if args.minimal_optimals:
            sols = minimax.minimal_optimal_solutions(
                p, args.limit, allow_large=args.allow_large, jobs=args.jobs
            )
            payload["minimal_optimals"] = [vector(s) for s in sols]
        status = "ok"
        if args.verify:
            if args.step is None:
                raise InputError("--verify needs --step")
            g = oracle.GridSpec(args.step)
            value = oracle.grid_minimax_value(p, g, cap=_cap())
            guaranteed = (res.u_star * g.divisions).denominator == 1
            agrees = value == res.u_star if guaranteed else value >= res.u_star
            payload["verify"] = {
                "step": str(g.step),
                "grid_value": scalar(value),
                "guaranteed_equal": guaranteed,
                "agrees": agrees,
            }
            if not agrees:
                status = "internal-error"
        return status, payload

    if cmd == "oracle":
        g = oracle.GridSpec(args.step)
        if args.mode == "feasible":
            pts = list(oracle.grid_feasible(p, g, cap=_cap()))
            return "ok", {"step": str(g.step), "count": len(pts), "points": [vector(x) for x in pts]}
        if args.mode == "minimax":
            value = oracle.grid_minimax_value(p, g, full_scan=args.full_scan, cap=_cap())
            return "ok", {"step": str(g.step), "value": scalar(value)}
        if not args.start:
            raise InputError("oracle falsify needs --from XFILE")
        x = parse_assignment(read_source(args.start), p.n)
        w = oracle.falsify_minimality(p, x, g, cap=_cap())
        return "ok", {"step": str(g.step), "witness": None if w is None else vector(w)}

    raise InputError(f"unknown command {cmd!r}")


def _cap() -> int:
    return oracle.default_cap()


def _exit_for(status: str) -> int:
    return {
        "ok": EXIT_OK,
        "infeasible": EXIT_INFEASIBLE,
        "input-error": EXIT_INPUT,
        "resource-error": EXIT_RESOURCE,
        "internal-error": EXIT_RESOURCE,
    }[status]


def _pretty(doc: Dict[str, Any]) -> str:
    lines = [f"status   {doc['status']}", f"command  {doc.get('command')}"]

    def show(key, value, indent=0):
        pad = "  " * indent
        if isinstance(value, dict) and set(value) == {"exact", "approx"}:
            lines.append(f"{pad}{key:<20} {value['exact']:>12}  (~{value['approx']})")
        elif isinstance(value, list) and value and all(
            isinstance(v, dict) and set(v) == {"exact", "approx"} for v in value
        ):
            lines.append(f"{pad}{key:<20} (" + ", ".join(v["exact"] for v in value) + ")")
        elif isinstance(value, dict):
            lines.append(f"{pad}{key}")
            for k, v in value.items():
                show(k, v, indent + 1)
        elif isinstance(value, list) and value and isinstance(value[0], (dict, list)):
            lines.append(f"{pad}{key}")
            for idx, v in enumerate(value, 1):
                show(f"[{idx}]", v, indent + 1)
        else:
            lines.append(f"{pad}{key:<20} {json.dumps(value)}")

    for k, v in (doc.get("payload") or {}).items():
        show(k, v)
    if "error" in doc:
        lines.append(f"error    {doc['error']}")
    return "\n".join(lines)


def run_command(argv: Sequence[str], out=None) -> Tuple[int, Dict[str, Any]]:
    """Run one CLI invocation; returns the exit code and the result document.

    The rendered document is written to ``out`` (standard output by default).
    """
    out = sys.stdout if out is None else out
    parser = build_parser()
    pretty = "--pretty" in argv
    try:
        args = parser.parse_args(list(argv))
    except _UsageError as exc:
        doc = {"status": "input-error", "command": None, "payload": None, "error": str(exc)}
        code = EXIT_INPUT
    except SystemExit as exc:  # --help
        return int(exc.code or 0), {"status": "ok", "command": None, "payload": None}
    else:
        try:
            status, payload = _dispatch(args)
            doc = {"status": status, "command": args.command, "payload": payload}
        except FRIError as exc:
            status = next(s for cls, (s, _) in _STATUS.items() if isinstance(exc, cls))
            doc = {"status": status, "command": args.command, "payload": None, "error": str(exc)}
        code = _exit_for(doc["status"])
    out.write((_pretty(doc) if pretty else json.dumps(doc, indent=2, ensure_ascii=False)) + "\n")
    return code, doc


def main(argv: Optional[Sequence[str]] = None) -> None:
    code, _ = run_command(sys.argv[1:] if argv is None else argv)
    sys.exit(code)


if __name__ == "__main__":
    main()
