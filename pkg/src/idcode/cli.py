"""Command-line entry point ``idcode``.

Exit status: 0 success, 1 usage or parse error, 2 graph not identifiable,
3 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Callable, Sequence

from .classifier import classify
from .corona import corona
from .errors import GraphFormatError, IdcodeError, NotIdentifiableError, PreconditionError
from .families import GraphSpec, cycle_graph, make_family, parse_spec, path_graph, complete_graph
from .graph import Graph, members
from .solver import (
    min_dominating_set,
    min_identifying_code,
    min_separating_set,
    min_total_dominating_set,
)
from .sweep import VerificationMismatch, verify_sweep
from .theorem import gamma_id_corona, gamma_id_cycle, gamma_id_fan, gamma_id_path, gamma_id_wheel

SCHEMA = "idcode.report/1"

EXIT_OK, EXIT_USAGE, EXIT_NOT_IDENTIFIABLE, EXIT_MISMATCH = 0, 1, 2, 3

INVARIANTS: dict[str, Callable] = {
    "id": min_identifying_code,
    "dom": min_dominating_set,
    "tdom": min_total_dominating_set,
    "sep": min_separating_set,
}


class UsageError(IdcodeError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with status 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)


def load_report(text: str) -> dict:
    report = json.loads(text)
    if report.get("schema") != SCHEMA:
        raise ValueError(f"unsupported report schema {report.get('schema')!r}")
    return report


def _labels(spec: GraphSpec, witness: int) -> list[str] | None:
    if spec.family != "corona":
        return None
    h, g = (make_family(c) for c in spec.children)
    _, layout = corona(h, g)
    return [layout.label(x) for x in members(witness)]


def _solve_entry(fn: Callable, g: Graph, spec: GraphSpec | None = None) -> dict:
    t0 = time.perf_counter()
    r = fn(g)
    out = {
        "value": r.optimum,
        "witness": members(r.witness),
        "nodes": r.nodes_explored,
        "seconds": round(time.perf_counter() - t0, 6),
    }
    if spec is not None:
        labels = _labels(spec, r.witness)
        if labels is not None:
            out["witness_labels"] = labels
    return out


def cmd_solve(args) -> tuple[dict, int]:
    spec = parse_spec(args.spec)
    g = make_family(spec)
    result = _solve_entry(INVARIANTS[args.invariant], g, spec)
    report = {"input": {"spec": str(spec), "invariant": args.invariant, "n": g.n}, "result": result}
    return report, EXIT_OK


def cmd_classify(args) -> tuple[dict, int]:
    spec = parse_spec(args.spec)
    g = make_family(spec)
    report = {"input": {"spec": str(spec), "n": g.n}, "result": classify(g).as_dict()}
    return report, EXIT_OK


def cmd_corona(args) -> tuple[dict, int]:
    hs, gs = parse_spec(args.h_spec), parse_spec(args.g_spec)
    h, g = make_family(hs), make_family(gs)
    product, layout = corona(h, g)
    report: dict = {"input": {"h": str(hs), "g": str(gs), "method": args.method, "n": product.n}}
    status = EXIT_OK
    if args.method in ("theorem", "both"):
        t0 = time.perf_counter()
        res = gamma_id_corona(h, g)
        report["theorem"] = res.as_dict() | {"seconds": round(time.perf_counter() - t0, 6)}
    if args.method in ("brute", "both"):
        brute = _solve_entry(min_identifying_code, product)
        brute["witness_labels"] = [layout.label(x) for x in brute["witness"]]
        report["brute"] = brute
    if args.method == "both":
        report["match"] = report["theorem"]["value"] == report["brute"]["value"]
        if not report["match"]:
            status = EXIT_MISMATCH
    return report, status


def cmd_verify(args) -> tuple[dict, int]:
    t0 = time.perf_counter()
    try:
        sweep = verify_sweep(args.max_h, args.max_g, jobs=args.jobs)
    except VerificationMismatch as exc:
        report = {
            "input": {"max_h": args.max_h, "max_g": args.max_g},
            "result": {"mismatch": exc.detail},
        }
        print(str(exc), file=sys.stderr)
        return report, EXIT_MISMATCH
    result = sweep.as_dict() | {"seconds": round(time.perf_counter() - t0, 3)}
    return {"input": {"max_h": args.max_h, "max_g": args.max_g}, "result": result}, EXIT_OK


def _table_row(family: str, n: int) -> dict:
    row: dict = {"n": n, "formula": None, "theorem": None, "brute": None}
    if family == "paths":
        g, formula = path_graph(n), (lambda: gamma_id_path(n))
    elif family == "cycles":
        g, formula = cycle_graph(n), (lambda: gamma_id_cycle(n))
    elif family == "fans":
        g, formula = corona(complete_graph(1), path_graph(n))[0], (lambda: gamma_id_fan(n))
        row["theorem"] = _maybe(lambda: gamma_id_corona(complete_graph(1), path_graph(n)).value)
    else:
        g, formula = corona(complete_graph(1), cycle_graph(n))[0], (lambda: gamma_id_wheel(n))
        row["theorem"] = _maybe(lambda: gamma_id_corona(complete_graph(1), cycle_graph(n)).value)
    row["formula"] = _maybe(formula)
    row["brute"] = _maybe(lambda: min_identifying_code(g).optimum)
    row["identifiable"] = row["brute"] is not None
    values = {v for v in (row["formula"], row["theorem"], row["brute"]) if v is not None}
    row["match"] = len(values) <= 1
    return row


def _maybe(fn: Callable) -> int | None:
    try:
        return fn()
    except (NotIdentifiableError, PreconditionError):
        return None


def cmd_table(args) -> tuple[dict, int]:
    minimum = {"paths": 1, "cycles": 3, "fans": 3, "wheels": 3}[args.family]
    if args.lo < minimum or args.hi < args.lo:
        raise UsageError(f"{args.family} table needs {minimum} <= --from <= --to")
    rows = [_table_row(args.family, n) for n in range(args.lo, args.hi + 1)]
    status = EXIT_OK if all(r["match"] for r in rows) else EXIT_MISMATCH
    return {"input": {"family": args.family, "from": args.lo, "to": args.hi}, "result": {"rows": rows}}, status


def _format_text(command: str, report: dict) -> str:
    lines = []
    inp = report["input"]
    if command == "solve":
        r = report["result"]
        lines.append(f"{inp['invariant']}({inp['spec']}) = {r['value']}")
        lines.append(f"witness: {r.get('witness_labels', r['witness'])}")
        lines.append(f"nodes: {r['nodes']}  time: {r['seconds']:.4f}s")
    elif command == "classify":
        r = report["result"]
        lines.append(f"gamma_id({inp['spec']}) = {r['gamma_id']}")
        for key in "abc":
            flag = r[key]
            text = "unknown (cap hit)" if flag is None else str(flag).lower()
            w = r[f"{key}_witness"]
            extra = f"  witness {w['code']}" + (f" z={w['z']}" if w["z"] is not None else "") if w else ""
            lines.append(f"{key}: {text}{extra}")
    elif command == "corona":
        lines.append(f"corona ({inp['h']}) . ({inp['g']}), {inp['n']} vertices")
        if "theorem" in report:
            t = report["theorem"]
            lines.append(f"theorem: {t['value']}  [{t['case']}]  witness {t['witness_labels']}")
        if "brute" in report:
            b = report["brute"]
            lines.append(f"brute:   {b['value']}  witness {b['witness_labels']}  nodes {b['nodes']}")
        if "match" in report:
            lines.append("match" if report["match"] else "MISMATCH")
    elif command == "verify":
        r = report["result"]
        if "mismatch" in r:
            lines.append(f"MISMATCH: {r['mismatch']}")
        else:
            lines.append(
                f"pairs {r['pairs']}, identifiable {r['identifiable']}, "
                f"skipped {r['skipped_unidentifiable']}, mismatches {r['mismatches']}"
            )
            for tag, count in r["histogram"].items():
                lines.append(f"  {tag:22s} {count}")
            lines.append(f"time: {r['seconds']}s")
    elif command == "table":
        lines.append(f"{'n':>3} {'formula':>8} {'theorem':>8} {'brute':>6}  ok")
        for row in report["result"]["rows"]:
            cells = ["-" if row[k] is None else str(row[k]) for k in ("formula", "theorem", "brute")]
            lines.append(f"{row['n']:>3} {cells[0]:>8} {cells[1]:>8} {cells[2]:>6}  {'yes' if row['match'] else 'NO'}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="idcode", description="Identifying codes, domination and corona products.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", help="compute one invariant exactly")
    s.add_argument("spec")
    s.add_argument("--invariant", choices=sorted(INVARIANTS), default="id")
    s.add_argument("--json", action="store_true")

    c = sub.add_parser("classify", help="decide conditions (a), (b), (c)")
    c.add_argument("spec")
    c.add_argument("--json", action="store_true")

    k = sub.add_parser("corona", help="minimum identifying code of a corona product")
    k.add_argument("h_spec")
    k.add_argument("g_spec")
    k.add_argument("--method", choices=["theorem", "brute", "both"], default="both")
    k.add_argument("--json", action="store_true")

    v = sub.add_parser("verify", help="sweep all small labeled pairs")
    v.add_argument("--max-h", type=int, required=True)
    v.add_argument("--max-g", type=int, required=True)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--json", action="store_true")

    t = sub.add_parser("table", help="closed forms vs direct search for a family")
    t.add_argument("family", choices=["paths", "cycles", "fans", "wheels"])
    t.add_argument("--from", dest="lo", type=int, required=True)
    t.add_argument("--to", dest="hi", type=int, required=True)
    t.add_argument("--json", action="store_true")
    return p


COMMANDS = {
    "solve": cmd_solve,
    "classify": cmd_classify,
    "corona": cmd_corona,
    "verify": cmd_verify,
    "table": cmd_table,
}


def run(argv: Sequence[str] | None = None) -> tuple[dict | None, int]:
    """Execute a command line; returns the report (``None`` on error) and exit status."""
    args = build_parser().parse_args(argv)
    try:
        body, status = COMMANDS[args.command](args)
    except NotIdentifiableError as exc:
        print(f"idcode: not identifiable: {exc}", file=sys.stderr)
        return None, EXIT_NOT_IDENTIFIABLE
    except (GraphFormatError, UsageError, IdcodeError, OSError) as exc:
        print(f"idcode: error: {exc}", file=sys.stderr)
        return None, EXIT_USAGE
    report = {"schema": SCHEMA, "command": args.command, **body}
    if args.json:
        print(dump_report(report))
    else:
        print(_format_text(args.command, report))
    return report, status


def main(argv: Sequence[str] | None = None) -> int:
    return run(argv)[1]


if __name__ == "__main__":
    sys.exit(main())
