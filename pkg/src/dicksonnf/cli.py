"""Command-line front end.

One JSON report per invocation on stdout (CSV with --csv for the sweep),
logs on stderr.  Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import __version__
from .census import census_csv, dset_sweep
from .dickson import (
    NearfieldCtx,
    coset_index,
    list_dickson_pairs,
    make_nearfield,
    nf_inv,
    nf_mul,
)
from .distset import dset
from .errors import DicksonError
from .gf_core import format_element, parse_element, parse_poly
from .nearvec import ege, format_vector, parse_vector, r_dim, seed_construct_full
from .verify import run_all


def _add_context_flags(sub):
    sub.add_argument("--q", type=int, required=True, help="prime power q = p^l")
    sub.add_argument("--n", type=int, required=True, help="coupling degree n")
    sub.add_argument("--modulus", help="monic modulus polynomial, e.g. x^4+2")
    sub.add_argument("--generator", help="generator of the multiplicative group")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="dicksonnf",
        description="Exact computations in finite Dickson nearfields: "
                    "generalized distributive sets and R-subgroups of R^m.")
    p.add_argument("--version", action="version", version=__version__)
    subs = p.add_subparsers(dest="command", required=True)

    s = subs.add_parser("pairs", help="list Dickson pairs in a range")
    s.add_argument("--max-p", type=int, required=True)
    s.add_argument("--max-l", type=int, default=1)
    s.add_argument("--max-n", type=int, required=True)

    s = subs.add_parser("field-info", help="describe the field and nearfield")
    _add_context_flags(s)

    for name, nargs in (("nf-mul", 2), ("nf-inv", 1), ("coset", 1)):
        s = subs.add_parser(name, help=f"nearfield {name.split('-')[-1]}")
        _add_context_flags(s)
        if nargs == 2:
            s.add_argument("--a", required=True)
            s.add_argument("--b", required=True)
        else:
            s.add_argument("--a", required=True)

    for name in ("dset", "classify"):
        s = subs.add_parser(
            name, help="generalized distributive set D(alpha, beta)")
        _add_context_flags(s)
        s.add_argument("--alpha", required=True)
        s.add_argument("--beta", required=True)

    s = subs.add_parser("dset-sweep", help="census over ordered pairs")
    _add_context_flags(s)
    s.add_argument("--sample", type=int, help="sample size (default exhaustive)")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--force", action="store_true",
                   help="allow exhaustive sweeps past the size guard")
    s.add_argument("--csv", action="store_true", help="emit CSV instead of JSON")

    s = subs.add_parser("gen", help="R-basis of gen(v_1, ..., v_k) via eGe")
    _add_context_flags(s)
    s.add_argument("--vectors", required=True,
                   help='vectors "a;b;c|d;e;f" (| separates vectors)')

    s = subs.add_parser("rdim", help="R-dimension of gen(v_1, ..., v_k)")
    _add_context_flags(s)
    s.add_argument("--vectors", required=True)

    s = subs.add_parser("seed-construct",
                        help="two-vector seed (v, w) with gen(v, w) = R^m")
    _add_context_flags(s)
    s.add_argument("--m", type=int, required=True)

    subs.add_parser("verify-paper",
                    help="run the built-in suite of published worked examples")
    return p


def _make_ctx(args) -> NearfieldCtx:
    # parse_poly needs the prime, so resolve the Dickson pair first
    from .dickson import dickson_pair

    pair = dickson_pair(args.q, args.n)
    modulus = None
    if args.modulus:
        modulus = tuple(parse_poly(pair.p, args.modulus))
    generator = None
    if args.generator:
        generator = tuple(parse_poly(pair.p, args.generator))
    return make_nearfield(args.q, args.n, modulus=modulus, generator=generator)


def _context_echo(ctx: NearfieldCtx) -> dict:
    return ctx.describe()


def _parse_vectors(ctx, text):
    return [parse_vector(ctx, part) for part in text.split("|")]


def _payload(args):
    """(payload dict, context echo or None, raw text override or None)."""
    if args.command == "pairs":
        pairs = list_dickson_pairs(args.max_p, args.max_l, args.max_n)
        return {"pairs": [{"q": dp.q, "n": dp.n, "p": dp.p, "l": dp.l}
                          for dp in pairs]}, None, None

    if args.command == "verify-paper":
        results = run_all(stream=sys.stderr)
        payload = {
            "checks": [{"number": r.number, "name": r.name,
                        "passed": r.passed, "detail": r.detail,
                        "seconds": round(r.seconds, 3)} for r in results],
            "passed": sum(r.passed for r in results),
            "total": len(results),
        }
        return payload, None, None

    ctx = _make_ctx(args)
    echo = _context_echo(ctx)
    field = ctx.field

    if args.command == "field-info":
        return {"info": ctx.describe()}, echo, None
    if args.command == "nf-mul":
        a = parse_element(field, args.a)
        b = parse_element(field, args.b)
        return {"result": format_element(field, nf_mul(ctx, a, b))}, echo, None
    if args.command == "nf-inv":
        a = parse_element(field, args.a)
        return {"result": format_element(field, nf_inv(ctx, a))}, echo, None
    if args.command == "coset":
        a = parse_element(field, args.a)
        k = coset_index(ctx, a)
        return {"k": k, "residue": ctx.residues[k - 1],
                "coset": "H" if ctx.residues[k - 1] == 0
                else f"g^{ctx.residues[k - 1]}H"}, echo, None
    if args.command in ("dset", "classify"):
        alpha = parse_element(field, args.alpha)
        beta = parse_element(field, args.beta)
        res = dset(ctx, alpha, beta)
        payload = {
            "classification": res.classification,
            "label": res.label(ctx.pair.p),
            "dim_p": res.dim_p,
            "size": res.size(ctx.pair.p),
            "cosets": {"r": res.cosets[0], "s": res.cosets[1], "t": res.cosets[2]},
        }
        if args.command == "dset":
            payload["basis"] = [format_element(field, b) for b in res.basis]
        return payload, echo, None
    if args.command == "dset-sweep":
        rows = dset_sweep(ctx, sample=args.sample, seed=args.seed,
                          force=args.force)
        if args.csv:
            return None, None, census_csv(rows)
        return {"rows": [{"r": r.r, "s": r.s, "t": r.t, "dim_p": r.dim_p,
                          "classification": r.classification, "count": r.count}
                         for r in rows]}, echo, None
    if args.command == "gen":
        basis = ege(_parse_vectors(ctx, args.vectors))
        return {"dim": basis.dim,
                "rows": [format_vector(v) for v in basis.rows]}, echo, None
    if args.command == "rdim":
        return {"dim": r_dim(_parse_vectors(ctx, args.vectors))}, echo, None
    if args.command == "seed-construct":
        v, w = seed_construct_full(ctx, args.m)
        return {"v": format_vector(v), "w": format_vector(w),
                "m": args.m}, echo, None
    raise AssertionError(f"unhandled command {args.command}")  # unreachable


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits 2 on usage errors
    try:
        payload, echo, raw = _payload(args)
    except DicksonError as exc:
        report = {"command": args.command, "context": None,
                  "status": {"ok": False, "code": exc.code, "message": str(exc)}}
        print(json.dumps(report, indent=2))
        return 1
    if raw is not None:
        sys.stdout.write(raw)
        return 0
    report = {"command": args.command, "context": echo, "payload": payload,
              "status": {"ok": True}}
    if args.command == "verify-paper" and payload["passed"] != payload["total"]:
        report["status"] = {"ok": False, "code": "ChecksFailed",
                            "message": f"{payload['total'] - payload['passed']} "
                                       "checks failed"}
        print(json.dumps(report, indent=2))
        return 1
    print(json.dumps(report, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
