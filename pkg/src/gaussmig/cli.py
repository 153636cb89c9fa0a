"""Command line front end.

Exit codes: 0 success, 2 unauthorized reconstruction, 3 validation failure,
4 I/O or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import __version__
from .access import AccessStructure, enumerate_structure, gen_threshold_params, realize
from .counting import AuditReport, audit, secret_space_size
from .errors import GaussMigError, InvalidSecret
from .formats import FormatError, ParamsFile, ShareFile, params_digest
from .gint import GaussianInt
from .scheme import (
    deal,
    naive_reconstruct,
    reconstruct,
    sample_secret,
    secret_space_contains,
    validate_params,
)

EXIT_OK = 0
EXIT_UNAUTHORIZED = 2
EXIT_INVALID = 3
EXIT_IO = 4


class UsageError(Exception):
    """Flag combination is syntactically fine but semantically invalid."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_IO, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _load_params(path: str) -> ParamsFile:
    return ParamsFile.loads(_read(path))


# -- commands -----------------------------------------------------------------

def cmd_gen(args) -> int:
    if not 1 <= args.t <= args.n:
        raise UsageError(f"need 1 <= t <= n, got --t {args.t} --n {args.n}")
    lo, hi = args.band
    if lo < 2 or hi < lo:
        raise UsageError(f"bad norm band {lo} {hi}")
    params = gen_threshold_params(args.t, args.n, (lo, hi), seed=args.seed)
    pf = ParamsFile.for_params(params, seed=args.seed,
                               generator=f"threshold t={args.t} n={args.n} band={lo}..{hi}")
    _write(args.output, pf.dumps(args.json))
    return EXIT_OK


def cmd_deal(args) -> int:
    pf = _load_params(args.params)
    p = pf.params
    if args.random:
        secret = sample_secret(p, args.seed)
    else:
        secret = GaussianInt.parse(args.secret)
        if not secret_space_contains(p, secret):
            raise InvalidSecret(
                f"secret {secret} has norm {secret.norm()}; valid secrets satisfy "
                f"{p.m_minus} <= N(s) < m_plus/4 = {p.m_plus}/4")
    shares = deal(p, secret)
    digest = params_digest(p)
    os.makedirs(args.out_dir, exist_ok=True)
    ext = "json" if args.json else "txt"
    for sh in shares:
        path = os.path.join(args.out_dir, f"share_{sh.index}.{ext}")
        _write(path, ShareFile(sh, digest).dumps(args.json))
        print(path)
    if args.random:
        print(f"secret: {secret}", file=sys.stderr)
    return EXIT_OK


def cmd_combine(args) -> int:
    pf = _load_params(args.params)
    p = pf.params
    digest = params_digest(p)
    shares = []
    for path in args.shares:
        sf = ShareFile.loads(_read(path))
        if sf.params_digest != digest:
            raise GaussMigError(
                f"{path}: share digest {sf.params_digest} does not match params {digest}")
        shares.append(sf.share)
    result = (naive_reconstruct if args.naive else reconstruct)(p, shares)
    print(result.value)
    print(f"authorized: {str(result.authorized).lower()}")
    return EXIT_OK if result.authorized else EXIT_UNAUTHORIZED


def cmd_realize(args) -> int:
    text = _read(args.structure)
    try:
        structure = AccessStructure.parse(text, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    params = realize(structure, args.min_norm, args.seed)
    if enumerate_structure(params) != structure:
        raise GaussMigError("internal error: realized structure differs from input")
    pf = ParamsFile.for_params(params, seed=args.seed,
                               generator=f"realize min_norm={args.min_norm}")
    _write(args.output, pf.dumps(args.json))
    summary = (f"m_minus: {params.m_minus}\nm_plus: {params.m_plus}\n"
               f"secret_space_size: {secret_space_size(params.m_minus, params.m_plus)}\n")
    # keep stdout clean when it carries the params file
    stream = sys.stderr if args.output in (None, "-") else sys.stdout
    stream.write(summary)
    return EXIT_OK


def _yn(ok: bool) -> str:
    return "pass" if ok else "FAIL"


def _cell(v) -> str:
    return "-" if v is None else str(v)


def coalition_table(report: AuditReport) -> str:
    lines = ["members\tnorm\tauthorized\tresidual_min\tresidual_max\tclasses_hit"]
    for r in report.rows:
        lines.append("\t".join([
            ",".join(map(str, r.members)), str(r.norm), str(r.authorized).lower(),
            _cell(r.residual_min), _cell(r.residual_max), _cell(r.classes_hit)]))
    return "\n".join(lines) + "\n"


def render_report(report: AuditReport) -> str:
    p = report.params
    v = report.validation
    rate = report.information_rate
    out = [
        f"moduli: {', '.join(str(m) for m in p.moduli)}",
        f"m_minus: {p.m_minus}",
        f"m_plus: {p.m_plus}",
        f"check bounds (4*m_minus < m_plus): {_yn(v.bounds_ok)}",
        f"check interval (no coalition norm in (m_minus, m_plus)): {_yn(v.interval_ok)}",
        f"check leakage (pi*(m_plus - 4*m_minus) > 4*m_minus): {_yn(v.leakage_ok)}",
        f"valid: {str(v.valid).lower()}",
    ]
    out += [f"violation: {msg}" for msg in v.violations]
    out.append(f"secret_space_size: {_cell(report.secret_space_size)}")
    if rate is not None:
        out.append(f"information_rate: {rate.decimal} "
                   f"(min share space {rate.min_share_space}, |S| {rate.secret_space})")
    else:
        out.append("information_rate: undefined")
    out.append(f"leakage_bound: {report.leakage_bound_decimal}")
    out.append(f"residual_counts: {'exact' if report.residuals_computed else 'skipped'}")
    out.append("")
    return "\n".join(out) + "\n" + coalition_table(report)


def cmd_audit(args) -> int:
    pf = _load_params(args.params)
    report = audit(pf.params, leakage_cap=args.full_leakage)
    if args.json:
        sys.stdout.write(json.dumps(report.to_dict(), indent=2) + "\n")
    else:
        sys.stdout.write(render_report(report))
    if args.figures:
        from .plotting import write_figures

        os.makedirs(args.figures, exist_ok=True)
        _write(os.path.join(args.figures, "coalitions.tsv"), coalition_table(report))
        for path in write_figures(report, args.figures):
            print(f"figure: {path}", file=sys.stderr)
    return EXIT_OK if report.validation.valid else EXIT_INVALID


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gaussmig",
                     description="Mignotte secret sharing over the Gaussian integers.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="generate threshold parameters")
    g.add_argument("--t", type=int, required=True, help="threshold")
    g.add_argument("--n", type=int, required=True, help="number of participants")
    g.add_argument("--band", type=int, nargs=2, metavar=("LO", "HI"), default=(1000, 2000),
                   help="norm band for the moduli (default: 1000 2000)")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output", help="params file to write (default: stdout)")
    g.add_argument("--json", action="store_true", help="write JSON instead of text")
    g.set_defaults(func=cmd_gen)

    d = sub.add_parser("deal", help="split a secret into share files")
    d.add_argument("--params", required=True)
    src = d.add_mutually_exclusive_group(required=True)
    src.add_argument("--secret", help="secret as a+bi text")
    src.add_argument("--random", action="store_true", help="draw a random valid secret")
    d.add_argument("--seed", type=int, default=0, help="seed for --random")
    d.add_argument("--out-dir", default=".", help="directory for share files")
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_deal)

    c = sub.add_parser("combine", help="reconstruct from share files")
    c.add_argument("shares", nargs="+")
    c.add_argument("--params", required=True)
    c.add_argument("--naive", action="store_true",
                   help="return the minimal-norm solution instead of the principal value")
    c.set_defaults(func=cmd_combine)

    r = sub.add_parser("realize", help="parameters realizing an access structure")
    r.add_argument("structure", help="one minimal authorized coalition per line, e.g. 1,3")
    r.add_argument("--n", type=int, help="participant count (default: largest index)")
    r.add_argument("--min-norm", type=int, default=9)
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("-o", "--output")
    r.add_argument("--json", action="store_true")
    r.set_defaults(func=cmd_realize)

    a = sub.add_parser("audit", help="validity, secret space and leakage report")
    a.add_argument("params")
    a.add_argument("--full-leakage", type=int, default=2_000_000, metavar="CAP",
                   help="max secrets x lcms scanned for exact residual counts")
    a.add_argument("--json", action="store_true")
    a.add_argument("--figures", metavar="DIR",
                   help="also write coalitions.tsv and PNG figures to DIR")
    a.set_defaults(func=cmd_audit)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, OSError) as exc:
        print(f"gaussmig: {exc}", file=sys.stderr)
        return EXIT_IO
    except (UsageError, GaussMigError) as exc:
        print(f"gaussmig: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        # malformed Gaussian integer text and similar parse failures
        print(f"gaussmig: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
