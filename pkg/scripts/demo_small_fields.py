#!/usr/bin/env python3
"""Print the full report for the four built-in small fields.

For q in {8, 9, 11, 16}: the quadratic irreducibility index sets, the
complete factorization table of x^(q+1) - c, the weight templates, the
complete weight enumerator of a representative code, and the
authentication report.
"""

from __future__ import annotations

from cwekit.authcodes import classify
from cwekit.cli import BUILTIN_FIELDS, factor_text
from cwekit.cwe import build_weight_vectors, cwe_closed_form
from cwekit.factorizer import factor_norm_poly, irreducibility_sets
from cwekit.galois import FieldSpec, build_field

SHOWN_N = {8: 7, 9: 4, 11: 5, 16: 5}


def main() -> None:
    for q, (p, m, poly) in sorted(BUILTIN_FIELDS.items()):
        ctx = build_field(FieldSpec(p=p, m=m, fq_min_poly=poly))
        print(f"=== q = {q} (p = {p}, m = {m}, alpha poly {poly}) ===")
        sets = irreducibility_sets(ctx)
        if sets.parity == "even":
            print(f"irreducible indices: {sorted(sets.irreducible)}")
        else:
            print(
                f"irreducible0: {sorted(sets.irreducible0)}  "
                f"irreducible1: {sorted(sets.irreducible1)}  "
                f"two_exponent: {sets.two_exponent}"
            )
        print(f"factorizations of x^{q + 1} - c:")
        for e in range(q - 1):
            f = factor_norm_poly(ctx, ctx.fq(e))
            print(f"  x^{q + 1} - a^{e} = " + "".join(factor_text(x) for x in f.factors))
        wv = build_weight_vectors(ctx)
        if wv.parity == "even":
            print(f"weight template: {wv.template}")
        else:
            print(f"weight templates: {wv.template0} | {wv.template1}")
        N = SHOWN_N[q]
        enum = cwe_closed_form(ctx, N)
        print(f"CWE of the order-{N} code ({len(enum.terms)} terms):")
        for cw, freq in enum.terms:
            print(f"  {cw.counts} freq={freq}")
        rep = classify(ctx, N)
        print(
            f"auth report (N={N}): P_I={rep.p_impersonation} "
            f"P_S={rep.p_substitution} class={rep.classification.value}"
        )
        print()


if __name__ == "__main__":
    main()
