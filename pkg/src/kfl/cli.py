"""Command-line entry point: ``kfl <subcommand> [flags]``.

Reports go to stdout as JSON (rationals and large integers as strings). Domain
errors exit with status 2 and print ``{"error_code", "message"}``; a broken
internal invariant exits with status 1.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from typing import List, Optional

from . import circulant, identities, polyfam, singular, zsigmondy
from .errors import BadArgument, InternalInconsistency, KflError
from .exact import parse_rat
from .sampling import grid_sample, parse_grid
from .sequences import KflParams, gen_prefix, parse_kind

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_DOMAIN = 2

# Let values such as "-1/2" or "-3:3:10" pass as arguments instead of options.
_NEGATIVE_VALUE = re.compile(r"^-\d[\d/:]*$")


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = _NEGATIVE_VALUE

    def error(self, message):
        raise BadArgument(f"{self.prog}: {message}")


def rational(text: str):
    return parse_rat(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def _params(args) -> KflParams:
    return KflParams(args.k, args.a, args.b)


def _require(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise BadArgument("missing required flag(s): " + ", ".join("--" + n for n in missing))


def cmd_seq(args) -> str:
    prefix = gen_prefix(_params(args), parse_kind(args.kind), args.n)
    return _dump([str(t) for t in prefix.terms])


def cmd_identity(args) -> str:
    ident = identities.IdentityId(args.id)
    p = _params(args)
    I = identities.IdentityId
    if ident is I.CATALAN:
        _require(args, "n", "r")
        rep = identities.check_catalan(p, args.n, args.r)
    elif ident is I.CASSINI:
        _require(args, "n")
        rep = identities.check_cassini(p, args.n)
    elif ident is I.DOCAGNE:
        _require(args, "m", "n")
        rep = identities.check_docagne(p, args.m, args.n)
    elif ident.value.startswith("sum-"):
        _require(args, "n")
        rep = identities.check_sum(ident.value[4:], p, args.n)
    elif ident is I.BINOMIAL:
        _require(args, "n")
        rep = identities.check_binomial(p, args.n)
    elif ident is I.LIVIO:
        _require(args, "p", "n")
        rep = identities.check_livio(p, args.p, args.n)
    else:
        rep = identities.geometric_report(p)
    return _dump(rep.to_dict())


def cmd_poly(args) -> str:
    poly = polyfam.family(args.family, args.n)
    return _dump(
        {
            "family": args.family,
            "n": args.n,
            "coefficients": [str(c) for c in poly.coeffs],
            "display": str(poly),
        }
    )


def cmd_exset(args) -> str:
    rs = polyfam.exceptional_set(args.kind, args.n, args.precision)
    out = {"kind": args.kind, "n": args.n}
    out.update(rs.to_dict())
    return _dump(out)


def _matrix_csv(m: circulant.KflMatrix) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for row in m.rows():
        w.writerow([str(x) for x in row])
    return buf.getvalue().rstrip("\n")


def cmd_matrix(args) -> str:
    m = circulant.build(args.kind, _params(args), args.n)
    if args.dump:
        return _matrix_csv(m)
    out = {"kind": m.kind.value, "n": m.n, **_params(args).to_dict()}
    what = args.what
    det = None
    if what in ("all", "det", "verdict"):
        det = circulant.det_exact(m)
    if what in ("all", "det"):
        out["det"] = str(det)
    if what in ("all", "rank"):
        out["rank"] = circulant.rank_exact(m)
    if what in ("all", "verdict"):
        v = circulant.theorem_verdict(m)
        out["verdict"] = v.verdict.value
        out["reason"] = v.reason
        _check_verdict(v.verdict, det, m)
    if what == "spectral":
        values = circulant.spectral_values(m)
        out["spectral_invertible"] = circulant.spectral_check(m)
        out["min_eigenvalue_modulus"] = repr(min(abs(z) for z in values))
    return _dump(out)


def _check_verdict(verdict, det, m):
    V = circulant.Verdict
    if (verdict is V.INVERTIBLE and det == 0) or (verdict is V.SINGULAR and det != 0):
        raise InternalInconsistency(
            f"criterion says {verdict.value} but det = {det} for {m.kind.value}, n={m.n}"
        )


def cmd_pair(args) -> str:
    pair = singular.singular_pair(args.type, args.n, args.k)
    return _dump(pair.to_dict())


def _histogram_csv(scan: singular.VarietyScan) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["rank", "count"])
    for r, c in sorted(scan.histogram.items()):
        w.writerow([r, c])
    return buf.getvalue().rstrip("\n")


def cmd_variety(args) -> str:
    if (args.k is None) == (args.grid is None):
        raise BadArgument("give exactly one of --k or --grid")
    if args.k is not None:
        ks = [args.k]
    else:
        lo, hi, count = parse_grid(args.grid)
        ks = grid_sample(lo, hi, count, args.seed)
    scan = singular.variety_scan(args.kind, args.n, ks)
    if args.format == "csv":
        return _histogram_csv(scan)
    out = scan.to_dict()
    if args.k is not None:
        out["points"] = [p.to_dict() for p in singular.variety_classify(args.kind, args.n, args.k)]
    else:
        out["grid"] = args.grid
        out["seed"] = args.seed
    return _dump(out)


def _load_sequence(spec: str, length: int) -> zsigmondy.IntSeqPrefix:
    if spec == "fib":
        return zsigmondy.fibonacci_prefix(length)
    name, _, arg = spec.partition(":")
    if name in ("kfib", "klucas"):
        try:
            k = int(arg)
        except ValueError:
            raise BadArgument(f"{name} needs an integer k, got {arg!r}") from None
        builder = zsigmondy.kfib_prefix if name == "kfib" else zsigmondy.klucas_prefix
        return builder(k, length)
    if name == "file" and arg:
        return zsigmondy.read_prefix_file(arg)
    raise BadArgument(f"unknown sequence {spec!r}; use fib, kfib:K, klucas:K or file:PATH")


def cmd_zsig(args) -> str:
    seq = _load_sequence(args.seq, args.bound)
    return _dump(zsigmondy.zsigmondy_set(seq, args.bound, args.convention).to_dict())


def cmd_construct(args) -> str:
    c = zsigmondy.construct_high_z(args.k, args.N, args.r)
    return _dump(zsigmondy.verify_high_z(c, args.bound).to_dict())


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kfl", description="Exact computations with k-Fibonacci/k-Lucas sequences.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def abk(p):
        p.add_argument("--k", type=rational, required=True, help="rational p/q or integer")
        p.add_argument("--a", type=rational, default=parse_rat("0"))
        p.add_argument("--b", type=rational, default=parse_rat("0"))

    p = sub.add_parser("seq", help="terms S[0..n]")
    abk(p)
    p.add_argument("--kind", choices=["kfib", "klucas", "kfl"], default="kfl")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("identity", help="check one closed-form identity")
    p.add_argument("--id", required=True, choices=[i.value for i in identities.IdentityId])
    abk(p)
    for name in ("n", "r", "m"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--p", type=rational)
    p.set_defaults(func=cmd_identity)

    p = sub.add_parser("poly", help="coefficients of f, g, F, G, P or Q at level n")
    p.add_argument("--family", required=True, choices=list(polyfam.FAMILIES))
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("exset", help="exceptional set A_n, B_n or C_n")
    p.add_argument("--kind", required=True, choices=["A", "B", "C"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--precision", type=rational, default=polyfam.DEFAULT_PRECISION)
    p.set_defaults(func=cmd_exset)

    p = sub.add_parser("matrix", help="determinant, rank and invertibility verdict")
    p.add_argument("--kind", required=True, choices=["skew", "circ"])
    abk(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--what", choices=["all", "det", "rank", "verdict", "spectral"], default="all")
    p.add_argument("--dump", action="store_true", help="print the matrix as CSV instead")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("pair", help="singular k-FL pair of type 1, 2 or 3")
    p.add_argument("--type", type=int, required=True, choices=[1, 2, 3])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=rational, required=True)
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("variety", help="rank of matrices built from singular pairs")
    p.add_argument("--kind", required=True, choices=["skew", "circ"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=rational)
    p.add_argument("--grid", help="lo:hi:count, sampled with the seeded LCG")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_variety)

    p = sub.add_parser("zsig", help="Zsigmondy set of an integer sequence prefix")
    p.add_argument("--seq", required=True, help="fib, kfib:K, klucas:K or file:PATH")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--convention", choices=["plain", "carmichael"], default="plain")
    p.set_defaults(func=cmd_zsig)

    p = sub.add_parser("construct", help="k-FL sequence with at least N Zsigmondy indices")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--r", type=int, help="override the minimal r")
    p.add_argument("--bound", type=int, help="verification bound (default 2r)")
    p.set_defaults(func=cmd_construct)
    return parser


def run(argv: Optional[List[str]] = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        text = args.func(args)
    except KflError as exc:
        stdout.write(_dump(exc.to_dict()) + "\n")
        return EXIT_INTERNAL if exc.internal else EXIT_DOMAIN
    stdout.write(text + "\n")
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
