"""Acceptance suite: one test per criterion, one PASS/FAIL line each.

Everything is exact arithmetic, so every tolerance is equality.  Run
with `pytest tests/test_acceptance.py -v -s` to see the lines and
per-criterion timings.
"""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from golden import FACTOR_TABLES, GOLDEN_CWE, INDEX_SETS, TEMPLATES, factor_multiset

from cwekit.authcodes import OptimalityClass, classify
from cwekit.cli import main as cli_main
from cwekit.codes import (
    codeword,
    complete_weight,
    hamming_distribution,
    zero_symbol_count,
)
from cwekit.cwe import (
    build_weight_vectors,
    check_fold_shift_identity,
    codeword_complete_weight,
    cwe_brute_force,
    cwe_closed_form,
    hamming_from_cwe,
)
from cwekit.factorizer import (
    brute_force_factor,
    expand,
    factor_norm_poly,
    irreducibility_sets,
    norm_binomial,
)
from cwekit.galois import FieldSpec, build_field, prime_powers

SHOWCASE_SPECS = {
    8: FieldSpec(2, 3, (1, 1, 0, 1)),
    9: FieldSpec(3, 2, (2, 1, 1)),
    11: FieldSpec(11, 1, (9, 1)),
    16: FieldSpec(2, 4, (1, 1, 0, 0, 1)),
}


@contextmanager
def criterion(label: str):
    start = time.time()
    try:
        yield
    except Exception:
        print(f"acceptance {label}: FAIL")
        raise
    print(f"acceptance {label}: PASS ({time.time() - start:.1f}s)")


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@pytest.fixture(scope="module")
def sweep_fields():
    return {q: build_field(FieldSpec(p, m)) for p, m, q in prime_powers(64)}


def test_criterion_1_showcase_goldens(showcase_fields):
    with criterion("1 (showcase-field golden values)"):
        for q, expected in INDEX_SETS.items():
            sets = irreducibility_sets(showcase_fields[q])
            for attr, value in expected.items():
                got = getattr(sets, attr)
                got = set(got) if isinstance(got, frozenset) else got
                assert got == value, (q, attr)

        for q, table in FACTOR_TABLES.items():
            ctx = showcase_fields[q]
            assert set(table) == set(range(q - 1))
            for e, entry in table.items():
                got = sorted(
                    factor_norm_poly(ctx, ctx.fq(e)).factors,
                    key=lambda f: (f.kind, f.args),
                )
                assert got == factor_multiset(entry), (q, e)

        for q, expected in TEMPLATES.items():
            wv = build_weight_vectors(showcase_fields[q])
            for attr, value in expected.items():
                assert getattr(wv, attr) == value, (q, attr)

        for q, by_n in GOLDEN_CWE.items():
            ctx = showcase_fields[q]
            for N, terms in by_n.items():
                enum = cwe_closed_form(ctx, N)
                got = {(cw.counts, f) for cw, f in enum.terms}
                assert got == {(tuple(v), f) for v, f in terms}, (q, N)

        # headline term counts and frequencies
        assert [f for _, f in cwe_closed_form(showcase_fields[8], 7).terms] == [9] * 7
        assert [f for _, f in cwe_closed_form(showcase_fields[9], 8).terms] == [10] * 8
        assert [f for _, f in cwe_closed_form(showcase_fields[16], 5).terms] == [51] * 5
        merged = dict(
            (cw.counts, f) for cw, f in cwe_closed_form(showcase_fields[9], 4).terms
        )
        assert merged[(2,) * 8] == 40


def test_criterion_2_factorization_oracle_sweep(sweep_fields):
    with criterion("2 (factorization oracle sweep, q <= 64)"):
        for q, ctx in sweep_fields.items():
            for e in range(q - 1):
                c = ctx.fq(e)
                closed = factor_norm_poly(ctx, c)
                assert expand(ctx, closed) == norm_binomial(ctx, c), (q, e)
                assert closed.factors == brute_force_factor(ctx, c).factors, (q, e)


def test_criterion_3_cwe_oracle_sweep(sweep_fields):
    with criterion("3 (CWE oracle sweep, q <= 64)"):
        for q, ctx in sweep_fields.items():
            for N in divisors(q - 1):
                closed = cwe_closed_form(ctx, N)
                brute = cwe_brute_force(ctx, N)
                assert closed == brute, (q, N)
                assert hamming_from_cwe(brute) == hamming_distribution(ctx, N), (q, N)


def test_criterion_4_gamma_independence():
    with criterion("4 (gamma independence across seeds)"):
        for q, spec in SHOWCASE_SPECS.items():
            contexts = [
                build_field(FieldSpec(spec.p, spec.m, spec.fq_min_poly, seed=s))
                for s in range(3)
            ]
            assert len(contexts[0].compatible_gamma_exponents()) >= 3
            gammas = {c.element_coords(c.gamma) for c in contexts}
            alphas = {c.element_coords(c.embed(c.alpha)) for c in contexts}
            assert len(gammas) == 3, q
            assert len(alphas) == 1, q
            for N in divisors(q - 1):
                enums = {ctx: cwe_brute_force(ctx, N) for ctx in contexts}
                first = enums[contexts[0]]
                assert all(e == first for e in enums.values()), (q, N)


def test_criterion_5_authentication_theorems(sweep_fields, field9):
    with criterion("5 (authentication code probabilities)"):
        for q, ctx in sweep_fields.items():
            report = classify(ctx, q - 1)
            assert report.p_substitution == Fraction(2, q + 1), q
            expected = (
                OptimalityClass.OPTIMAL if q % 2 else OptimalityClass.ALMOST_OPTIMAL
            )
            assert report.classification is expected, q
            assert report.p_impersonation == Fraction(1, q), q

        r94 = classify(field9, 4)
        assert r94.p_substitution == Fraction(1, 5)
        assert r94.classification is OptimalityClass.OPTIMAL
        assert r94.p_impersonation == Fraction(1, 9)


def test_criterion_6_identity_suite(sweep_fields):
    with criterion("6 (identity and occurrence-bound suite)"):
        # fold/shift identity at every admissible (N, j), q <= 32
        for p_, m_, q in prime_powers(32):
            ctx = sweep_fields[q]
            for N in divisors(q - 1):
                if q % 2 == 0:
                    assert all(check_fold_shift_identity(ctx, N, j) for j in range(N))
                elif N % 2 == 0:
                    assert all(
                        check_fold_shift_identity(ctx, N, j) for j in range(N // 2)
                    )
                else:
                    assert all(
                        check_fold_shift_identity(ctx, N, j, e=e)
                        for j in range(N)
                        for e in (1, 2, (N - 1) // 2 or 1)
                    )

        # closed-form codeword weights match direct evaluation, q <= 32
        for p_, m_, q in prime_powers(32):
            ctx = sweep_fields[q]
            for e in range(ctx.order):
                b = ctx.fq2(e)
                direct = complete_weight(ctx, codeword(ctx, b, q - 1))
                assert codeword_complete_weight(ctx, b) == direct, (q, e)

        # occurrence bound for the length-(q+1) codes, q <= 64
        for q, ctx in sweep_fields.items():
            n = q + 1
            for cw, _freq in cwe_brute_force(ctx, q - 1).terms:
                zero = zero_symbol_count(cw, n)
                assert all(c <= 2 for c in cw.counts) and zero <= 2, q
                assert max(max(cw.counts), zero) == 2, q


def test_criterion_7_verify_determinism(capsys):
    with criterion("7 (verify sweep determinism, qmax 64)"):
        outputs = []
        for _ in range(2):
            code = cli_main(["verify", "--qmax", "64", "--json"])
            assert code == 0
            outputs.append(capsys.readouterr().out)
        assert outputs[0] == outputs[1]
        assert json.loads(outputs[0])["payload"]["status"] == "ok"
