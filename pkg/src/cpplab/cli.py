"""Command-line front end.

Exit codes: 0 success / all checks pass, 1 a verification check failed,
2 usage error or violated hypothesis.
"""

import argparse
import csv
import io
import json
import sys
from typing import List, Optional

from cpplab import __version__, dickson, families, ff, modring, report, verify
from cpplab.errors import CppLabError
from cpplab.families import FamilySpec

MODULI = [m.value for m in ff.TopModulus]


def _spec_from(args) -> FamilySpec:
    if args.cls is None:
        raise CppLabError("--class is required")
    return families.validate(FamilySpec(args.cls.upper(), args.p, args.m, args.s, args.modulus))


def _config(args) -> dict:
    cfg = {k: v for k, v in vars(args).items() if k != "func"}
    return {k: cfg[k] for k in sorted(cfg)}


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_enumerate(args) -> int:
    spec = _spec_from(args)
    ctx = families.family_ctx(spec, args.max_q)
    e, path, _ = families.inverse_exponent(spec)
    rows = []
    for v in families.admissible_v(ctx, spec):
        rows.append({
            "index": ff.index(ctx, v),
            "v": ff.encode(v),
            "d": str(spec.d),
            "forward_coeff": ff.encode(ff.inv(ctx, v)),
            "inverse_e": str(e),
            "inverse_coeff": ff.encode(ff.power(ctx, v, e)),
        })
    if args.format == "json":
        out = json.dumps({"version": __version__, "family": spec.to_json(),
                          "field": report.field_json(ctx), "inverse_path": path,
                          "count": len(rows), "rows": rows}, indent=2, sort_keys=True) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "v", "d", "forward_coeff", "inverse_e", "inverse_coeff"])
        for r in rows:
            w.writerow([r["index"], json.dumps(r["v"]), r["d"], json.dumps(r["forward_coeff"]),
                        r["inverse_e"], json.dumps(r["inverse_coeff"])])
        out = buf.getvalue()
    else:
        out = "".join(
            f"{r['index']}\tv={r['v']}\td={r['d']}\tcoeff={r['forward_coeff']}"
            f"\te={r['inverse_e']}\tinverse_coeff={r['inverse_coeff']}\n" for r in rows)
    _emit(args, out)
    return 0


def cmd_verify(args) -> int:
    spec = _spec_from(args)
    ctx = families.family_ctx(spec, args.max_q)
    rep = verify.verify_family(spec, ctx, workers=args.workers, scan=not args.no_scan,
                               max_q=args.max_q)
    timing = not args.no_timing
    if args.format == "json":
        out = report.to_json(rep, _config(args), timing)
    elif args.format == "csv":
        out = report.to_csv(rep)
    else:
        out = report.to_text(rep, timing)
    _emit(args, out)
    return 0 if rep.all_pass else 1


def cmd_inverse(args) -> int:
    if args.d is not None:
        if args.q is None:
            raise CppLabError("--d needs --q")
        n = args.q - 1
        e = modring.mod_inverse(args.d, n)
        result = {"d": str(args.d), "q": str(args.q), "e": str(e), "path": "generic",
                  "formula": None}
    else:
        spec = _spec_from(args)
        e, path, cf = families.inverse_exponent(spec)
        result = {"d": str(spec.d), "q": str(spec.q), "e": str(e), "path": path,
                  "formula": cf.formula if cf else None, "raw": str(cf.raw) if cf else None,
                  "family": spec.to_json()}
    if args.format == "json":
        out = json.dumps(result, indent=2, sort_keys=True) + "\n"
    else:
        extra = f" ({result['path']}: {result['formula']})" if result["formula"] else \
            f" ({result['path']})"
        out = f"{result['e']}{extra}\n"
    _emit(args, out)
    return 0


def cmd_scan(args) -> int:
    ctx = ff.make_ctx(args.p, args.m, args.modulus or ff.TopModulus.AUTO, max_q=args.max_q)
    found = verify.cpp_scan(ctx, args.d, strategy=args.strategy, max_q=args.max_q)
    vs = sorted(found, key=lambda v: ff.index(ctx, v))
    if args.format == "json":
        out = json.dumps({"field": report.field_json(ctx), "d": str(args.d), "count": len(vs),
                          "v": [ff.encode(v) for v in vs]}, indent=2, sort_keys=True) + "\n"
    else:
        out = "".join(f"{ff.index(ctx, v)}\t{ff.encode(v)}\n" for v in vs)
    _emit(args, out)
    return 0


def cmd_dickson(args) -> int:
    coeffs = dickson.dickson_coeffs(args.p, args.n)
    agrees = dickson.coeffs_as_monomials(args.p, args.n) == dickson.recurrence_coeffs(args.p, args.n)
    terms = [{"i": i, "x_degree": args.n - 2 * i, "coeff_of_neg_a_pow_i": c}
             for i, c in sorted(coeffs.items())]
    note = ("weights n/(n-i)*C(n-i,i); the inverted weight (n-i)/n*C(n-i,i) "
            "disagrees with the recurrence (n=2 gives 1/2, not 2)")
    if args.format == "json":
        out = json.dumps({"p": args.p, "n": args.n, "terms": terms,
                          "matches_recurrence": agrees, "note": note},
                         indent=2, sort_keys=True) + "\n"
    else:
        body = " + ".join(f"{t['coeff_of_neg_a_pow_i']}*(-a)^{t['i']}*x^{t['x_degree']}"
                          for t in terms) or "0"
        out = f"D_{args.n}(x, a) mod {args.p} = {body}\nmatches recurrence: {agrees}\nnote: {note}\n"
    _emit(args, out)
    return 0 if agrees else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cpplab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"cpplab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def family_args(sp, require_class=True):
        sp.add_argument("--class", dest="cls", type=str.lower, choices=["c1", "c2", "c3"],
                        required=require_class)
        sp.add_argument("--p", type=int, default=3)
        sp.add_argument("--m", type=int, default=1)
        sp.add_argument("--s", type=int)
        sp.add_argument("--modulus", choices=MODULI)

    def common(sp, default_format="json"):
        sp.add_argument("--format", choices=["json", "csv", "text"], default=default_format)
        sp.add_argument("--max-q", type=int, default=None)
        sp.add_argument("--out")

    sp = sub.add_parser("enumerate", help="list admissible coefficients of a family")
    family_args(sp)
    common(sp)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("verify", help="exhaustively verify a family")
    family_args(sp)
    common(sp)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--no-scan", action="store_true", help="skip the coefficient scan")
    sp.add_argument("--no-timing", action="store_true", help="omit wall-clock timing")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("inverse", help="inverse exponent of a family or of d mod q-1")
    family_args(sp, require_class=False)
    common(sp)
    sp.add_argument("--d", type=int)
    sp.add_argument("--q", type=int)
    sp.set_defaults(func=cmd_inverse)

    sp = sub.add_parser("scan", help="all v with v^-1 x^d a complete permutation")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--modulus", choices=MODULI)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--strategy", choices=["auto", "exhaustive", "cosets"], default="auto")
    common(sp)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("dickson", help="coefficients of D_n(x, a) mod p")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_dickson)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CppLabError as exc:
        print(f"cpplab: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
