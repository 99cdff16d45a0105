"""Command-line front end: polynomials, charges, cyclage graphs, verification sweeps."""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys

from .algebra import is_dominant
from .cyclage import CyclageGraph, charge, component
from .kostant import kostka_def
from .qpoly import QPolynomial
from .recurrences import (
    charge_kostka,
    kostka_morris,
    kostka_row,
    verify_conjecture,
)
from .tableaux import format_tableau, insert_into_tableau, parse_tableau

JOBS_ENV_VAR = "KF_VERIFY_JOBS"


def _parse_partition(text: str, n: int | None = None) -> tuple[int, ...]:
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse partition {text!r}")
    if not is_dominant(parts):
        raise ValueError(f"{text!r} is not weakly decreasing nonnegative")
    if n is not None and len(parts) != n:
        raise ValueError(f"partition {text!r} does not have {n} parts")
    return parts


def emit_dot(graph: CyclageGraph) -> str:
    """Deterministic DOT digraph: one node per tableau, one edge per cocyclage."""
    lines = ["digraph cyclage {"]
    for v in graph.vertices:
        lines.append(f'  "{format_tableau(v)}";')
    for a, b in graph.edges:
        lines.append(f'  "{format_tableau(a)}" -> "{format_tableau(b)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_json(graph: CyclageGraph) -> str:
    index = {v: i for i, v in enumerate(graph.vertices)}
    payload = {
        "vertices": [format_tableau(v) for v in graph.vertices],
        "edges": [[index[a], index[b]] for a, b in graph.edges],
    }
    return json.dumps(payload) + "\n"


def poly_json(p: QPolynomial) -> str:
    return json.dumps(
        {"poly": {str(e): c for e, c in sorted(p.coefficients().items())}}
    ) + "\n"


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="symplectic-kf")
    sub = top.add_subparsers(dest="command", required=True)

    k = sub.add_parser("kostka", help="compute a Kostka-Foulkes polynomial")
    k.add_argument("--method", choices=["def", "morris", "row", "charge"], default="def")
    k.add_argument("-n", type=int, required=True)
    k.add_argument("--lambda", dest="lam", required=True)
    k.add_argument("--mu", required=True)
    k.add_argument("--format", choices=["text", "json"], default="text")

    c = sub.add_parser("charge", help="charge statistic of a symplectic tableau")
    c.add_argument("-n", type=int, required=True)
    c.add_argument("--tableau", required=True)

    g = sub.add_parser("cyclage-graph", help="connected cyclage component")
    g.add_argument("--tableau", required=True)
    g.add_argument("--format", choices=["dot", "json"], default="dot")

    i = sub.add_parser("insert", help="insert a letter into a symplectic tableau")
    i.add_argument("--tableau", required=True)
    i.add_argument("--letter", type=int, required=True)

    v = sub.add_parser("verify", help="compare the definitional and charge routes")
    v.add_argument("-n", type=int, required=True)
    v.add_argument("--max-weight", type=int, default=None)
    v.add_argument("--lambda", dest="lam", default=None)
    v.add_argument("--mu", default=None)
    return top


def _dominant_vectors(n: int, max_weight: int):
    for v in itertools.product(range(max_weight + 1), repeat=n):
        if sum(v) <= max_weight and is_dominant(v):
            yield v


def _verify_pair(args):
    lam, mu, n = args
    return verify_conjecture(lam, mu, n).to_record()


def _run_sweep(n: int, max_weight: int, out: list[str]) -> int:
    pairs = [
        (lam, mu, n)
        for lam in _dominant_vectors(n, max_weight)
        for mu in _dominant_vectors(n, max_weight)
    ]
    jobs = int(os.environ.get(JOBS_ENV_VAR, "1"))
    if jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            records = pool.map(_verify_pair, pairs)
    else:
        records = [_verify_pair(p) for p in pairs]
    mismatches = [r for r in records if r["verdict"] == "mismatch"]
    for r in mismatches:
        out.append(
            "mismatch: lambda={} mu={} definitional={} charge={}".format(
                ",".join(map(str, r["lambda"])),
                ",".join(map(str, r["mu"])),
                json.dumps(r["definitional"]),
                json.dumps(r["charge"]),
            )
        )
    out.append(f"checked: {len(records)} pairs")
    out.append(f"mismatches: {len(mismatches)}")
    return 2 if mismatches else 0


_VALUE_FLAGS = ("--tableau", "--lambda", "--mu", "--letter")


def _glue_values(argv: list[str]) -> list[str]:
    # barred letters make tableau arguments start with '-'; fold such values
    # into --flag=value form so argparse does not read them as options
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def run(argv) -> tuple[int, str]:
    """Dispatch a command line; returns (exit code, stdout text)."""
    parser = _build_parser()
    try:
        args = parser.parse_args(_glue_values(list(argv)))
    except SystemExit as exc:
        return (0 if exc.code in (0, None) else 1), ""
    out: list[str] = []
    try:
        if args.command == "kostka":
            lam = _parse_partition(args.lam, args.n)
            mu = _parse_partition(args.mu, args.n)
            if args.method == "def":
                poly = kostka_def(lam, mu)
            elif args.method == "morris":
                poly = kostka_morris(lam, mu, args.n)
            elif args.method == "row":
                if any(lam[1:]):
                    raise ValueError("--method row needs a row partition (p,0,...,0)")
                poly = kostka_row(lam[0], mu, args.n)
            else:
                poly = charge_kostka(lam, mu, args.n)
            out.append(poly_json(poly).rstrip("\n") if args.format == "json" else str(poly))
        elif args.command == "charge":
            tab = parse_tableau(args.tableau)
            out.append(str(charge(tab, args.n)))
        elif args.command == "cyclage-graph":
            graph = component(parse_tableau(args.tableau))
            text = emit_dot(graph) if args.format == "dot" else emit_json(graph)
            out.append(text.rstrip("\n"))
        elif args.command == "insert":
            tab = parse_tableau(args.tableau) if args.tableau else ()
            result = insert_into_tableau(args.letter, tab)
            out.append(format_tableau(result))
        elif args.command == "verify":
            if args.lam is not None and args.mu is not None:
                lam = _parse_partition(args.lam, args.n)
                mu = _parse_partition(args.mu, args.n)
                report = verify_conjecture(lam, mu, args.n)
                out.append(report.to_text())
                return (2 if report.verdict == "mismatch" else 0), "\n".join(out) + "\n"
            if args.max_weight is None:
                raise ValueError("verify needs --max-weight or both --lambda and --mu")
            code = _run_sweep(args.n, args.max_weight, out)
            return code, "\n".join(out) + "\n"
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1, ""
    return 0, "\n".join(out) + "\n"


def main() -> None:
    code, text = run(sys.argv[1:])
    if text:
        sys.stdout.write(text)
    sys.exit(code)


if __name__ == "__main__":
    main()
