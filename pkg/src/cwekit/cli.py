"""Command-line surface.

Subcommands: sets, factor, cwe, hamming, auth, verify.  Output goes to
stdout, human-readable by default and as one JSON envelope with --json;
identical invocations produce byte-identical output.  Exit codes:
0 success, 1 mathematical verification failure, 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import authcodes, codes, cwe, factorizer
from .errors import CwekitError
from .galois import FieldContext, FieldSpec, FqElem, build_field

FORMAT_VERSION = 1

# Presets for the four small showcase fields, keyed by q.
BUILTIN_FIELDS = {
    8: (2, 3, (1, 1, 0, 1)),       # alpha^3 + alpha + 1 = 0
    9: (3, 2, (2, 1, 1)),          # alpha^2 + alpha + 2 = 0
    11: (11, 1, (9, 1)),           # alpha = 2
    16: (2, 4, (1, 1, 0, 0, 1)),   # alpha^4 + alpha + 1 = 0
}


def _parse_poly(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad coefficient list {text!r}") from exc


def _poly_str(coeffs) -> str | None:
    return None if coeffs is None else ",".join(str(c) for c in coeffs)


def render_json(envelope: dict) -> str:
    return json.dumps(envelope, indent=2, sort_keys=True) + "\n"


def _render_fq(a: FqElem) -> str:
    return "0" if a.is_zero else f"a^{a.exp}"


def factor_text(f: factorizer.NormFactor) -> str:
    if f.kind == factorizer.LINEAR:
        return f"(x + a^{f.args[0]})"
    if f.kind == factorizer.PURE_QUADRATIC:
        return f"(x^2 + a^{f.args[0]})"
    return f"(x^2 + a^{f.args[0]}*x + a^{f.args[1]})"


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _field_info(ctx: FieldContext) -> dict:
    return {
        "p": ctx.p,
        "m": ctx.m,
        "q": ctx.q,
        "fq_min_poly": _poly_str(ctx.fq_min_poly),
        "gamma_min_poly": _poly_str(ctx.gamma_min_poly),
        "seed": ctx.spec.seed,
    }


def _envelope(command: str, field: dict | None, payload: dict) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "command": command,
        "field": field,
        "payload": payload,
    }


def _field_header(ctx: FieldContext) -> str:
    poly = _poly_str(ctx.fq_min_poly)
    extra = f" fq_min_poly={poly}" if poly else ""
    return f"field: q={ctx.q} p={ctx.p} m={ctx.m} seed={ctx.spec.seed}{extra}"


class UsageError(Exception):
    """Usage error discovered after argparse; mapped to exit code 2."""


def _build_ctx(args) -> FieldContext:
    if args.builtin_field is not None:
        if args.p is not None or args.m is not None or args.fq_poly is not None:
            raise UsageError("--builtin-field conflicts with --p/--m/--fq-poly")
        p, m, poly = BUILTIN_FIELDS[args.builtin_field]
        return build_field(FieldSpec(p=p, m=m, fq_min_poly=poly, seed=args.seed))
    if args.p is None or args.m is None:
        raise UsageError("either --builtin-field or both --p and --m are required")
    return build_field(
        FieldSpec(p=args.p, m=args.m, fq_min_poly=args.fq_poly, seed=args.seed)
    )


def _cwe_terms_payload(enum_: cwe.CWEnum, with_zero: bool) -> list[dict]:
    out = []
    for w, freq in enum_.terms:
        item = {"counts": list(w.counts), "freq": freq}
        if with_zero:
            item["zero_count"] = codes.zero_symbol_count(w, enum_.spec.n)
        out.append(item)
    return out


def _cwe_terms_text(enum_: cwe.CWEnum, with_zero: bool) -> list[str]:
    lines = []
    for w, freq in enum_.terms:
        vec = "(" + ",".join(str(c) for c in w.counts) + ")"
        if with_zero:
            vec += f" zeros={codes.zero_symbol_count(w, enum_.spec.n)}"
        lines.append(f"  {vec} freq={freq}")
    return lines


def cmd_sets(args) -> int:
    ctx = _build_ctx(args)
    s = factorizer.irreducibility_sets(ctx)
    if s.parity == "even":
        payload = {
            "parity": "even",
            "reducible": sorted(s.reducible),
            "irreducible": sorted(s.irreducible),
        }
        text = [
            _field_header(ctx),
            "quadratic irreducibility index sets (q even)",
            f"  reducible:   {sorted(s.reducible)}",
            f"  irreducible: {sorted(s.irreducible)}",
        ]
    else:
        payload = {
            "parity": "odd",
            "reducible0": sorted(s.reducible0),
            "irreducible0": sorted(s.irreducible0),
            "reducible1": sorted(s.reducible1),
            "irreducible1": sorted(s.irreducible1),
            "two_exponent": s.two_exponent,
            "minus_one_nonsquare": s.minus_one_nonsquare,
        }
        text = [
            _field_header(ctx),
            "quadratic irreducibility index sets (q odd, indices mod (q-1)/2)",
            f"  reducible0:   {sorted(s.reducible0)}",
            f"  irreducible0: {sorted(s.irreducible0)}",
            f"  reducible1:   {sorted(s.reducible1)}",
            f"  irreducible1: {sorted(s.irreducible1)}",
            f"  two_exponent: {s.two_exponent}",
            f"  minus_one_nonsquare: {s.minus_one_nonsquare}",
        ]
    _emit(args, _envelope("sets", _field_info(ctx), payload), text)
    return 0


def _factor_payload(ctx: FieldContext, e: int) -> tuple[dict, str]:
    f = factorizer.factor_norm_poly(ctx, ctx.fq(e))
    entry = {
        "c_exp": e,
        "c": _render_fq(ctx.fq(e)),
        "factors": [{"kind": fac.kind, "args": list(fac.args)} for fac in f.factors],
    }
    text = f"x^{ctx.q + 1} - a^{e} = " + "".join(factor_text(fac) for fac in f.factors)
    return entry, text


def cmd_factor(args) -> int:
    ctx = _build_ctx(args)
    if args.all:
        exps = range(ctx.q - 1)
    elif args.c_exp is not None:
        exps = [args.c_exp % (ctx.q - 1)]
    else:
        raise SystemExit2("factor requires --c-exp or --all")
    entries, lines = [], [_field_header(ctx)]
    for e in exps:
        entry, text = _factor_payload(ctx, e)
        entries.append(entry)
        lines.append(text)
    _emit(args, _envelope("factor", _field_info(ctx), {"factorizations": entries}), lines)
    return 0


def cmd_cwe(args) -> int:
    ctx = _build_ctx(args)
    N = args.N
    spec = codes.code_spec(ctx, N)
    payload: dict = {"N": N, "n": spec.n, "dim": spec.dim, "u": spec.u,
                     "method": args.method}
    text = [_field_header(ctx), f"code: N={N} n={spec.n} dim={spec.dim} u={spec.u}"]
    status = 0
    closed = brute = None
    if args.method in ("closed", "both"):
        closed = cwe.cwe_closed_form(ctx, N)
        payload["closed"] = {"terms": _cwe_terms_payload(closed, args.zero_counts)}
        text.append(f"closed form: {len(closed.terms)} terms")
        text.extend(_cwe_terms_text(closed, args.zero_counts))
    if args.method in ("brute", "both"):
        brute = cwe.cwe_brute_force(ctx, N)
        payload["brute"] = {"terms": _cwe_terms_payload(brute, args.zero_counts)}
        text.append(f"brute force: {len(brute.terms)} terms")
        text.extend(_cwe_terms_text(brute, args.zero_counts))
    if args.method == "both":
        equal = closed == brute
        payload["equal"] = equal
        text.append(f"verdict: {'EQUAL' if equal else 'MISMATCH'}")
        status = 0 if equal else 1
    _emit(args, _envelope("cwe", _field_info(ctx), payload), text)
    return status


def cmd_hamming(args) -> int:
    ctx = _build_ctx(args)
    spec = codes.code_spec(ctx, args.N)
    dist = codes.hamming_distribution(ctx, args.N)
    payload = {
        "N": args.N,
        "n": spec.n,
        "dim": spec.dim,
        "u": spec.u,
        "terms": [{"weight": w, "freq": f} for w, f in dist.terms],
    }
    text = [_field_header(ctx),
            f"hamming distribution: N={args.N} n={spec.n} dim={spec.dim} u={spec.u}"]
    text.extend(f"  weight {w}: freq {f}" for w, f in dist.terms)
    _emit(args, _envelope("hamming", _field_info(ctx), payload), text)
    return 0


def cmd_auth(args) -> int:
    ctx = _build_ctx(args)
    report = authcodes.classify(ctx, args.N)
    payload = {
        "N": args.N,
        "n": report.spec.n,
        "d": report.min_dist,
        "p_impersonation": _frac_str(report.p_impersonation),
        "p_substitution": _frac_str(report.p_substitution),
        "lower_bound": _frac_str(report.lower_bound),
        "classification": report.classification.value,
    }
    text = [
        _field_header(ctx),
        f"authentication report: N={args.N} n={report.spec.n} d={report.min_dist}",
        f"  P_I = {_frac_str(report.p_impersonation)}",
        f"  P_S = {_frac_str(report.p_substitution)}",
        f"  1 - d/n = {_frac_str(report.lower_bound)}",
        f"  classification: {report.classification.value}",
    ]
    _emit(args, _envelope("auth", _field_info(ctx), payload), text)
    return 0


def cmd_verify(args) -> int:
    from .verify import run_verification

    report = run_verification(args.qmax, threads=args.threads)
    lines = [f"verify sweep: qmax={args.qmax}"]
    for entry in report["results"]:
        codes_part = " ".join(
            f"N={c['N']}:{'ok' if c['cwe'] == c['hamming'] == c['p_s'] == 'ok' else 'FAIL'}"
            for c in entry["codes"]
        )
        lines.append(
            f"q={entry['q']} factorization={'ok' if entry['factorization'] == 'ok' else 'FAIL'} "
            + codes_part
        )
    lines.append(f"status: {report['status']}")
    _emit(args, _envelope("verify", None, report), lines)
    return 0 if report["status"] == "ok" else 1


def _emit(args, envelope: dict, text_lines: list[str]) -> None:
    if args.json:
        sys.stdout.write(render_json(envelope))
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


def _add_field_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--p", type=int, help="characteristic (prime)")
    sub.add_argument("--m", type=int, help="extension degree, q = p^m")
    sub.add_argument(
        "--fq-poly",
        type=_parse_poly,
        metavar="C0,C1,...",
        help="minimal polynomial of alpha over GF(p), low degree first",
    )
    sub.add_argument("--seed", type=int, default=0,
                     help="selects among compatible gamma (default 0)")
    sub.add_argument(
        "--builtin-field",
        type=int,
        choices=sorted(BUILTIN_FIELDS),
        help="preset field: q in {8, 9, 11, 16}",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cwekit",
        description=(
            "Exact factorization of x^(q+1)-c over GF(q), complete weight "
            "enumerators of the dimension-two trace codes, and the "
            "authentication codes they induce."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(name: str, help_: str, field: bool = True) -> argparse.ArgumentParser:
        s = sub.add_parser(name, help=help_)
        if field:
            _add_field_args(s)
        s.add_argument("--json", action="store_true", help="structured output")
        return s

    common("sets", "quadratic irreducibility index sets").set_defaults(fn=cmd_sets)

    s = common("factor", "factor x^(q+1) - c")
    s.add_argument("--c-exp", type=int, help="alpha-exponent of c")
    s.add_argument("--all", action="store_true", help="factor for every c in GF(q)*")
    s.set_defaults(fn=cmd_factor)

    s = common("cwe", "complete weight enumerator of the order-N code")
    s.add_argument("--N", type=int, required=True)
    s.add_argument("--method", choices=("closed", "brute", "both"), default="closed")
    s.add_argument("--zero-counts", action="store_true",
                   help="also report the derived zero-symbol count per term")
    s.set_defaults(fn=cmd_cwe)

    s = common("hamming", "Hamming weight distribution of the order-N code")
    s.add_argument("--N", type=int, required=True)
    s.set_defaults(fn=cmd_hamming)

    s = common("auth", "authentication-code report for the order-N code")
    s.add_argument("--N", type=int, required=True)
    s.set_defaults(fn=cmd_auth)

    s = common("verify", "cross-check sweep over prime powers q <= qmax", field=False)
    s.add_argument("--qmax", type=int, default=16)
    s.add_argument("--threads", type=int, default=1,
                   help="cap on worker processes for the sweep")
    s.set_defaults(fn=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (UsageError, CwekitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
