"""Batch command-line front end.

Subcommands: construct, fvec, gvec, q-report, ray, stackedness, verify.
Data goes to stdout (or --out), diagnostics to stderr.  Exit codes:
0 success, 1 verification failure, 2 parameter errors.  Output is
deterministic: identical invocations produce byte-identical files.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import constructions as cons
from . import qvectors as qv
from . import stackedness as st
from . import vectors as vec
from .complexes import SimplicialComplex, label_str
from .verify import GRIDS, run_suite


def _emit(text: str, out_path: str | None) -> None:
    if out_path and out_path != "-":
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _json_dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# -- construct ---------------------------------------------------------------


def _build_complex(args: argparse.Namespace) -> SimplicialComplex:
    fam = args.family
    if fam == "cyclic":
        _require(args, "K", "m")
        return cons.cyclic_facets(args.K, args.m)
    if fam == "mw":
        _require(args, "K", "D", "N")
        return cons.mw_boundary(cons.MWSpec(args.K, args.D, args.N))
    if fam == "lex":
        _require(args, "a")
        if args.base == "cyclic":
            _require(args, "K", "m")
            return cons.lex_subdivision(cons.CyclicSpec(args.K, args.m), args.a)
        _require(args, "K", "D", "N")
        return cons.lex_subdivision(cons.MWSpec(args.K, args.D, args.N), args.a)
    if fam == "diamond":
        _require(args, "k", "d", "n", "a")
        return cons.diamond_boundary(cons.DiamondSpec(args.k, args.d, args.n, args.a))
    raise ValueError(f"unknown family {fam!r}")


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n, None) is None]
    if missing:
        raise ValueError(f"family {args.family!r} needs {', '.join(missing)}")


def cmd_construct(args: argparse.Namespace) -> int:
    complex_ = _build_complex(args)
    _emit(complex_.to_json(), args.out)
    return 0


# -- fvec / gvec ---------------------------------------------------------------


def cmd_fvec(args: argparse.Namespace) -> int:
    complex_ = SimplicialComplex.from_json(_read_input(args.infile))
    fv = complex_.f_vector()
    obj = {"dim": fv.dim, "counts": list(fv.counts)}
    if args.format == "table":
        lines = [f"f_{i - 1} = {c}" for i, c in enumerate(fv.counts)]
        _emit("\n".join(lines) + "\n", args.out)
    elif args.format == "csv":
        idx = ",".join(str(i - 1) for i in range(len(fv.counts)))
        val = ",".join(str(c) for c in fv.counts)
        _emit(f"i,{idx}\nf_i,{val}\n", args.out)
    else:
        _emit(_json_dumps(obj), args.out)
    return 0


def _cubical_input(text: str) -> tuple[int, vec.FVector]:
    obj = json.loads(text)
    if "facets" in obj:
        complex_ = SimplicialComplex.from_json_obj(obj)
        fv = complex_.f_vector()
        return fv.dim + 1, fv
    d = obj["d"]
    f = list(obj["f"])
    if len(f) != d:
        raise ValueError(f"cubical f-vector for d={d} needs {d} entries f_0..f_{d-1}")
    return d, vec.FVector(d - 1, (1, *f))


def cmd_gvec(args: argparse.Namespace) -> int:
    text = _read_input(args.infile)
    if args.kind == "simplicial":
        complex_ = SimplicialComplex.from_json(text)
        fv = complex_.f_vector()
        D = fv.dim + 1
        h = vec.f_to_h(fv, D)
        g = vec.h_to_g(h)
        obj = {
            "kind": "simplicial",
            "D": D,
            "f": list(fv.counts),
            "h": list(h.entries),
            "g": list(g.entries),
            "dehn_sommerville": vec.check_simplicial_DS(h),
        }
    else:
        d, fv = _cubical_input(text)
        hsc = vec.f_to_hsc(fv, d)
        hc = vec.hsc_to_hc(hsc, d)
        gsc = vec.hsc_to_gsc(hsc)
        gc = vec.hc_to_gc(hc)
        obj = {
            "kind": "cubical-from-f",
            "d": d,
            "f": list(fv.counts[1:]),
            "hsc": list(hsc.entries),
            "hc": list(hc.entries),
            "gsc": list(gsc.entries),
            "gc": list(gc.entries),
            "dehn_sommerville": vec.check_cubical_DS(hc),
        }
    if args.format == "table":
        lines = [f"{key} = {value}" for key, value in obj.items()]
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(_json_dumps(obj), args.out)
    return 0


# -- q-report -------------------------------------------------------------------


def cmd_q_report(args: argparse.Namespace) -> int:
    spec = qv.QSpec(args.k, args.d, args.n)
    gsc_a = qv.gsc_q_from_diamonds(spec)
    gsc_b = qv.gsc_q_closed(spec)
    gc_a = qv.gc_q_via_gsc(spec)
    gc_b = qv.gc_q_closed(spec)
    obj = {
        "k": spec.k,
        "d": spec.d,
        "n": spec.n,
        "gsc_route_a": list(gsc_a.entries),
        "gsc_route_b": list(gsc_b.entries),
        "gsc_routes_agree": gsc_a == gsc_b,
        "gc_route_a": list(gc_a.entries),
        "gc_route_b": list(gc_b.entries),
        "gc_routes_agree": gc_a == gc_b,
    }
    if args.format == "table":
        lines = [
            f"Q(k={spec.k}, d={spec.d}, n={spec.n})",
            f"gsc route A (diamond sum):  {gsc_a.entries}",
            f"gsc route B (closed form):  {gsc_b.entries}",
            f"gsc routes agree:           {gsc_a == gsc_b}",
            f"gc  route A (from gsc):     {gc_a.entries}",
            f"gc  route B (closed form):  {gc_b.entries}",
            f"gc  routes agree:           {gc_a == gc_b}",
        ]
        _emit("\n".join(lines) + "\n", args.out)
    elif args.format == "csv":
        header = "k,d,n,vector,route,entries"
        rows = [
            f"{spec.k},{spec.d},{spec.n},gsc,A,{' '.join(map(str, gsc_a.entries))}",
            f"{spec.k},{spec.d},{spec.n},gsc,B,{' '.join(map(str, gsc_b.entries))}",
            f"{spec.k},{spec.d},{spec.n},gc,A,{' '.join(map(str, gc_a.entries))}",
            f"{spec.k},{spec.d},{spec.n},gc,B,{' '.join(map(str, gc_b.entries))}",
        ]
        _emit("\n".join([header] + rows) + "\n", args.out)
    else:
        _emit(_json_dumps(obj), args.out)
    if not (gsc_a == gsc_b and gc_a == gc_b):
        print("q-report: routes disagree", file=sys.stderr)
        return 1
    return 0


# -- ray -------------------------------------------------------------------------


def cmd_ray(args: argparse.Namespace) -> int:
    if args.n_to < args.n_from:
        raise ValueError("--n-to must be at least --n-from")
    rows = qv.ray_convergence_report(args.k, args.d, range(args.n_from, args.n_to + 1))
    for row in rows:
        if row.normalized is None:
            print(
                f"ray: n={row.n} has zero normalizer, row emitted unnormalized",
                file=sys.stderr,
            )
    _emit("\n".join(qv.ray_csv_lines(rows)) + "\n", args.out)
    return 0


# -- stackedness -------------------------------------------------------------------


def _stack_report_for(k: int, d: int, n: int, a: int) -> dict:
    dia = cons.diamond_boundary(cons.DiamondSpec(k, d, n, a))
    predicted_missing = st.predicted_missing_faces(k, d, n, a)
    brute = st.brute_missing_faces(dia, k + 2)
    predicted_facets = st.predicted_stacked_facets(k, d, n, a)
    oracle = st.oracle_stacked_facets(dia, d, k)
    return {
        "a": a,
        "predicted_missing": [
            {"face": cf.labels(), "type": cf.tag} for cf in predicted_missing
        ],
        "brute_missing": [[label_str(v) for v in sorted(f)] for f in brute],
        "missing_agree": {cf.vertices for cf in predicted_missing} == set(brute),
        "predicted_stacked_facets": [
            {"face": cf.labels(), "type": cf.tag} for cf in predicted_facets
        ],
        "oracle_stacked_facets": [[label_str(v) for v in sorted(f)] for f in oracle],
        "facets_agree": {cf.vertices for cf in predicted_facets} == set(oracle),
    }


def cmd_stackedness(args: argparse.Namespace) -> int:
    indices = [args.a] if args.a is not None else list(range(1, args.n - args.d + 2))
    diamonds = [_stack_report_for(args.k, args.d, args.n, a) for a in indices]
    obj: dict = {"k": args.k, "d": args.d, "n": args.n, "diamonds": diamonds}
    if args.n > args.d:
        obj["witness"] = st.incompatibility_witness(args.k, args.d, args.n).to_json_obj()
    else:
        obj["witness"] = None
        print("stackedness: n == d leaves a single diamond, no witness", file=sys.stderr)
    _emit(_json_dumps(obj), args.out)
    agree = all(d["missing_agree"] and d["facets_agree"] for d in diamonds)
    return 0 if agree else 1


# -- verify ------------------------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> int:
    bounds = GRIDS[args.grid]
    results = run_suite(args.suite, bounds)
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        detail = f" ({r.detail})" if r.detail else ""
        lines.append(f"{status}  {r.name}{detail}")
    failed = sum(1 for r in results if not r.passed)
    lines.append(
        f"verify: suite={args.suite} grid={args.grid} "
        f"checks={len(results)} passed={len(results) - failed} failed={failed}"
    )
    _emit("\n".join(lines) + "\n", args.out)
    return 1 if failed else 0


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polygv",
        description="Exact combinatorics of cubical g-vectors and their polytope families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a boundary complex or subdivision")
    p.add_argument("--family", required=True, choices=["cyclic", "mw", "lex", "diamond"])
    p.add_argument("--base", choices=["cyclic", "mw"], default="mw",
                   help="base family for --family lex")
    p.add_argument("--K", type=int, help="cyclic factor dimension")
    p.add_argument("--m", type=int, help="cyclic vertex count")
    p.add_argument("--D", type=int, help="MW polytope dimension")
    p.add_argument("--N", type=int, help="MW vertex count")
    p.add_argument("--k", type=int, help="diamond parameter k")
    p.add_argument("--d", type=int, help="diamond parameter d")
    p.add_argument("--n", type=int, help="diamond parameter n")
    p.add_argument("--a", type=int, help="lexicographic index")
    p.add_argument("--out", "-o", default="-")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("fvec", help="f-vector of a complex JSON file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--format", choices=["json", "csv", "table"], default="json")
    p.add_argument("--out", "-o", default="-")
    p.set_defaults(func=cmd_fvec)

    p = sub.add_parser("gvec", help="h/g vectors from a complex or an f-vector")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--kind", choices=["simplicial", "cubical-from-f"], default="simplicial")
    p.add_argument("--format", choices=["json", "table"], default="json")
    p.add_argument("--out", "-o", default="-")
    p.set_defaults(func=cmd_gvec)

    p = sub.add_parser("q-report", help="short and long cubical g-vectors, both routes")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["json", "csv", "table"], default="table")
    p.add_argument("--out", "-o", default="-")
    p.set_defaults(func=cmd_q_report)

    p = sub.add_parser("ray", help="normalized g-vector rows along increasing n (CSV)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n-from", dest="n_from", type=int, required=True)
    p.add_argument("--n-to", dest="n_to", type=int, required=True)
    p.add_argument("--out", "-o", default="-")
    p.set_defaults(func=cmd_ray)

    p = sub.add_parser("stackedness", help="missing faces, stacked facets, and the witness")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int)
    p.add_argument("--out", "-o", default="-")
    p.set_defaults(func=cmd_stackedness)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument(
        "--suite",
        required=True,
        choices=["transforms", "constructions", "qvectors", "stackedness", "all"],
    )
    p.add_argument("--grid", choices=["small", "full"], default="small")
    p.add_argument("--out", "-o", default="-")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, FileNotFoundError, KeyError) as exc:
        print(f"polygv: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
