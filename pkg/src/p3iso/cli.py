"""Command-line interface.

Every command prints exactly one JSON object on stdout. Exit codes:
0 ok, 1 verification found violations, 2 unparsable input,
3 precondition or parameter violation, 4 internal invariant failure.
Set ``ISO_LOG`` (e.g. ``DEBUG``) for diagnostics on stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time

from .constructions import ConstructionParams, Family
from .constructive import MODES, InternalInvariantError, PreconditionError, isolating_set_bounded
from .enumeration import MAX_BUILTIN_N, ingest_graph6_stream, verify_catalog, verify_theorem
from .exact import iota_exact
from .graph import GraphError
from .patterns import find_induced_cycle, is_p3_isolating, residual_max_degree

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_INTERNAL = 4


class CommandFailure(Exception):
    def __init__(self, code: int, reason: str):
        super().__init__(reason)
        self.code = code
        self.reason = reason


def _read_lines(args) -> list[str]:
    if args.graph6 is not None:
        return [args.graph6]
    if args.input is None or args.input == "-":
        return sys.stdin.read().splitlines()
    with open(args.input) as fh:
        return fh.read().splitlines()


def _read_graphs(args):
    try:
        graphs = list(ingest_graph6_stream(_read_lines(args)))
    except (GraphError, OSError) as exc:
        raise CommandFailure(EXIT_PARSE, str(exc)) from exc
    if not graphs:
        raise CommandFailure(EXIT_PARSE, "no graph given")
    return graphs


def _one_or_many(items: list[dict]) -> dict:
    return items[0] if len(items) == 1 else {"results": items}


def cmd_compute(args) -> tuple[int, dict]:
    out = []
    for g in _read_graphs(args):
        row = {"n": g.n, "delta_max": g.max_degree}
        if args.bound:
            if not g.is_connected():
                raise CommandFailure(EXIT_PRECONDITION, "graph is not connected")
            if find_induced_cycle(g, 6) is not None:
                raise CommandFailure(EXIT_PRECONDITION, "graph has an induced C6")
            res = isolating_set_bounded(g, args.mode)
            row.update(
                bound_size=res.size,
                size_bound_used=res.size_bound_used,
                witness=res.vertices,
                case_trace=[s.as_dict() for s in res.case_trace],
            )
        else:
            res = iota_exact(g)
            row.update(iota=res.iota, witness=res.vertices)
        out.append(row)
    return EXIT_OK, _one_or_many(out)


def _parse_set(text: str) -> list[int]:
    try:
        return sorted({int(tok) for tok in text.replace(" ", "").split(",") if tok})
    except ValueError as exc:
        raise CommandFailure(EXIT_PARSE, f"bad vertex list {text!r}") from exc


def cmd_certify(args) -> tuple[int, dict]:
    labels = _parse_set(args.set)
    out = []
    for g in _read_graphs(args):
        bad = [v for v in labels if not 0 <= v < g.n]
        if bad:
            raise CommandFailure(EXIT_PRECONDITION, f"labels {bad} out of range for n={g.n}")
        mask = 0
        for v in labels:
            mask |= 1 << v
        out.append(
            {
                "n": g.n,
                "set": labels,
                "isolating": is_p3_isolating(g, mask),
                "residual_max_degree": residual_max_degree(g, mask),
            }
        )
    return EXIT_OK, _one_or_many(out)


def cmd_construct(args) -> tuple[int, dict]:
    params = ConstructionParams(Family(args.family), k=args.k, n=args.n, h=args.h)
    try:
        g = params.build()
    except ValueError as exc:
        raise CommandFailure(EXIT_PRECONDITION, str(exc)) from exc
    return EXIT_OK, {
        "family": params.family.value,
        "n": g.n,
        "edges": g.num_edges,
        "delta_max": g.max_degree,
        "graph6": g.to_graph6(),
    }


def cmd_verify(args) -> tuple[int, dict]:
    if args.ingest:
        try:
            with open(args.ingest) as fh:
                graphs = list(ingest_graph6_stream(fh))
        except (GraphError, OSError) as exc:
            raise CommandFailure(EXIT_PARSE, str(exc)) from exc
        reports = verify_catalog(graphs, jobs=args.jobs)
    else:
        if not 1 <= args.max_n <= MAX_BUILTIN_N:
            raise CommandFailure(
                EXIT_PRECONDITION, f"--max-n must be in 1..{MAX_BUILTIN_N}; use --ingest for larger catalogs"
            )
        reports = verify_theorem(args.max_n, jobs=args.jobs)
    ok = all(not r.violations for r in reports)
    payload = {"reports": [r.to_dict(timing=not args.no_timing) for r in reports], "all_ok": ok}
    return (EXIT_OK if ok else EXIT_VIOLATIONS), payload


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="p3iso", description="P3-isolation numbers of graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p):
        p.add_argument("graph6", nargs="?", help="graph6 string (otherwise --input)")
        p.add_argument("--input", metavar="FILE", help="graph6 file, one graph per line; '-' for stdin")

    p = sub.add_parser("compute", help="exact iota or a bounded certificate")
    graph_input(p)
    what = p.add_mutually_exclusive_group()
    what.add_argument("--exact", action="store_true", help="exact isolation number (default)")
    what.add_argument("--bound", action="store_true", help="constructive set of size <= floor((n+1)/4)")
    p.add_argument("--mode", choices=MODES, default=MODES[0])
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("certify", help="check whether a vertex set is P3-isolating")
    graph_input(p)
    p.add_argument("--set", required=True, metavar="a,b,c", help="comma-separated labels (may be empty)")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("construct", help="emit an extremal construction")
    p.add_argument("family", choices=[f.value for f in Family])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--h", type=int)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="exhaustively check the bounds over small graphs")
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--ingest", metavar="FILE", help="verify a graph6 catalog instead of enumerating")
    p.add_argument("--no-timing", action="store_true", help="omit wall-clock fields")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    level = os.environ.get("ISO_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), stream=sys.stderr)
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        code, payload = args.func(args)
        status = "ok" if code == EXIT_OK else "violations"
        doc = {"command": args.command, "status": status, "payload": payload}
    except CommandFailure as exc:
        code = exc.code
        doc = {"command": args.command, "status": "error", "reason": exc.reason}
    except PreconditionError as exc:
        code = EXIT_PRECONDITION
        doc = {"command": args.command, "status": "error", "reason": str(exc)}
    except InternalInvariantError as exc:
        code = EXIT_INTERNAL
        doc = {"command": args.command, "status": "error", "reason": str(exc)}
    if not getattr(args, "no_timing", False):
        doc["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 1)
    doc["exit_code"] = code
    print(json.dumps(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
