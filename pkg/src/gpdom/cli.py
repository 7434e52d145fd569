"""Command-line front end: gamma, survey, verify, normalize, construct, mu, bondage.

Exit codes: 0 ok, 1 mismatch or failed verification, 2 usage, 3 solver guard.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor

from .analysis import AnalysisError, DomSet, gamma_profile
from .construct import ConstructionError, construct
from .graph import (FaultSpec, GraphError, InvalidVertex, Vertex, build_graph,
                    format_vertex, parse_vertex)
from .normalize import NormalizationError, normalize
from .robustness import alteration_number, bondage_number
from .solver import (SizeLimitError, ceil_3n_5, solve_bnb, solve_dp, formula_value,
                     verify_certificate)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


# --- token handling ---------------------------------------------------------

def _parse_token(tok: str, n: int, one_based: bool) -> Vertex:
    v = parse_vertex(tok)
    if one_based:
        if v.index == 0:
            raise InvalidVertex(f"{tok} is not a valid 1-based token")
        v = Vertex(v.ring, v.index - 1)
    if not 0 <= v.index < n:
        raise InvalidVertex(f"{tok} is out of range for n={n}")
    return v


def _fault(args) -> FaultSpec:
    if not args.fault:
        return FaultSpec()
    return FaultSpec(_parse_token(args.fault, args.n, args.one_based))


def _fmt(v: Vertex, args) -> str:
    return format_vertex(v, args.one_based)


def _fmt_set(S: DomSet, args) -> list[str]:
    return [_fmt(v, args) for v in S.vertices()]


def _relabel(text: str, args) -> str:
    """Shift every vertex token in a trace line for 1-based display."""
    if not args.one_based:
        return text
    return re.sub(r"\b([uv])(\d+)\b", lambda m: f"{m.group(1)}{int(m.group(2)) + 1}", text)


def _certificate(n: int, fault: FaultSpec, S: DomSet, engine: str, args) -> dict:
    return {"n": n, "k": 2, "fault": _fmt(fault.faulted, args) if fault else None,
            "gamma": len(S), "set": _fmt_set(S, args), "engine": engine, "verified": True}


def read_set_file(path: str, n: int, one_based: bool = False) -> DomSet:
    """Token-per-line set file (``#`` comments) or a certificate JSON; ``-`` is stdin."""
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    if text.lstrip().startswith("{"):
        tokens = json.loads(text)["set"]
    else:
        tokens = []
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if line:
                tokens.append(line)
    return DomSet.from_vertices(n, (_parse_token(t, n, one_based) for t in tokens))


# --- subcommands ------------------------------------------------------------

def cmd_gamma(args) -> int:
    fault = _fault(args)
    g = build_graph(args.n, 2, fault)
    if args.engine == "bnb":
        res = solve_bnb(g, limit=args.limit, force=args.force)
    else:
        res = solve_dp(args.n, fault)
    out = _certificate(args.n, fault, res.certificate, res.engine, args)
    note = None
    if fault and not fault.is_outer:
        note = "no closed-form formula for inner faults; value computed by the solver"
    if args.json:
        if note:
            out["note"] = note
        print(json.dumps(out))
    else:
        print(f"P({args.n},2) fault={out['fault'] or 'none'} engine={res.engine}")
        print(f"gamma={res.gamma}")
        print("set: " + " ".join(out["set"]))
        if note:
            print("note: " + note)
    return EXIT_OK


def _survey_row(args_tuple) -> dict:
    n, f = args_tuple
    fault = FaultSpec.outer(f % n)
    gamma = solve_dp(n, fault).gamma
    expect = formula_value(n, faulted=True)
    return {"n": n, "ceil_3n_5": ceil_3n_5(n), "gamma_f": gamma, "residue": n % 5,
            "formula": expect, "match": gamma == expect}


def cmd_survey(args) -> int:
    lo, hi = args.from_, args.to
    if lo < 3 or hi < lo:
        raise UsageError(f"invalid range {lo}..{hi} (need 3 <= from <= to)")
    work = [(n, args.fault_index) for n in range(lo, hi + 1)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_survey_row, work))
    else:
        rows = [_survey_row(w) for w in work]
    cols = ["n", "ceil_3n_5", "gamma_f", "residue", "formula", "match"]
    if args.format == "json":
        print(json.dumps(rows))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({**r, "match": "yes" if r["match"] else "no"})
        sys.stdout.write(buf.getvalue())
    else:
        print(f"{'n':>5} {'ceil(3n/5)':>10} {'gamma_f':>8} {'n mod 5':>8} {'formula':>8}  match")
        for r in rows:
            print(f"{r['n']:>5} {r['ceil_3n_5']:>10} {r['gamma_f']:>8} {r['residue']:>8} "
                  f"{r['formula']:>8}  {'yes' if r['match'] else 'NO'}")
    return EXIT_OK if all(r["match"] for r in rows) else EXIT_FAIL


def cmd_verify(args) -> int:
    fault = _fault(args)
    g = build_graph(args.n, 2, fault)
    S = read_set_file(args.set, args.n, args.one_based)
    claimed = args.claimed if args.claimed is not None else len(S)
    rep = verify_certificate(g, S, claimed)
    if args.json:
        print(json.dumps(rep.to_dict()))
    else:
        print(f"set: {' '.join(_fmt_set(S, args))}")
        print(f"dominating={rep.dominating} size_matches={rep.size_matches} "
              f"window_ok={rep.window_ok}")
        for p in rep.problems:
            print("problem: " + _relabel(p, args))
        print("OK" if rep.ok else "FAILED")
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_normalize(args) -> int:
    fault = _fault(args)
    if not fault.is_outer:
        raise UsageError("normalize needs an outer fault (--fault u<i>)")
    g = build_graph(args.n, 2, fault)
    S = read_set_file(args.set, args.n, args.one_based)
    try:
        res = normalize(g, S, fault)
    except (AnalysisError, NormalizationError) as exc:
        print(f"normalize failed: {_relabel(str(exc), args)}", file=sys.stderr)
        return EXIT_FAIL
    for line in res.trace():
        print(_relabel(line, args))
    print(f"final: {' '.join(_fmt_set(res.set, args))}")
    print(f"type: {res.tag}")
    if args.json:
        print(gamma_profile(g, res.set, fault).to_json())
    return EXIT_OK


def cmd_construct(args) -> int:
    fault = _fault(args)
    try:
        S = construct(args.n, fault)
    except ConstructionError as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(json.dumps(_certificate(args.n, fault, S, "Constructor", args)))
    return EXIT_OK


def cmd_mu(args) -> int:
    rep = alteration_number(args.n, args.r, budget=args.budget, jobs=args.jobs)
    print(_relabel(rep.to_json(), args))
    return EXIT_OK


def cmd_bondage(args) -> int:
    rep = bondage_number(args.n, args.r, budget=args.budget, jobs=args.jobs)
    print(_relabel(rep.to_json(), args))
    return EXIT_OK


# --- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    idx = common.add_mutually_exclusive_group()
    idx.add_argument("--zero-based", dest="one_based", action="store_false",
                     help="vertex tokens count from 0 (default)")
    idx.add_argument("--one-based", dest="one_based", action="store_true",
                     help="vertex tokens count from 1 on input and output")
    common.set_defaults(one_based=False)

    p = _Parser(prog="gpdom", description="Exact domination in P(n, 2) with a faulty vertex.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("gamma", parents=[common], help="domination number and a certificate")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--fault")
    s.add_argument("--engine", choices=["auto", "bnb", "dp"], default="auto")
    s.add_argument("--limit", type=int, default=60, help="live-vertex guard for bnb")
    s.add_argument("--force", action="store_true", help="ignore the bnb guard")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_gamma)

    s = sub.add_parser("survey", parents=[common], help="tabulate gamma with an outer fault")
    s.add_argument("--from", dest="from_", type=int, required=True)
    s.add_argument("--to", type=int, required=True)
    s.add_argument("--fault-index", type=int, default=0)
    s.add_argument("--format", choices=["table", "csv", "json"], default="table")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_survey)

    s = sub.add_parser("verify", parents=[common], help="check a dominating set")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--fault")
    s.add_argument("--set", required=True, help="set file, certificate JSON, or - for stdin")
    s.add_argument("--claimed", type=int)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("normalize", parents=[common], help="rewrite a minimum set to canonical form")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--fault", required=True)
    s.add_argument("--set", required=True)
    s.add_argument("--json", action="store_true", help="also print the block profile")
    s.set_defaults(func=cmd_normalize)

    s = sub.add_parser("construct", parents=[common], help="explicit optimal set")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--fault")
    s.set_defaults(func=cmd_construct)

    for name, func, default_r in (("mu", cmd_mu, 2), ("bondage", cmd_bondage, 3)):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("--n", type=int, required=True)
        s.add_argument("--r", type=int, default=default_r, help="largest removal size tried")
        s.add_argument("--budget", type=int)
        s.add_argument("--jobs", type=int, default=1)
        s.set_defaults(func=func)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SizeLimitError as exc:
        print(f"guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (GraphError, OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
