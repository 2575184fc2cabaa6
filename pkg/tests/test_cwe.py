from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cwekit.codes import codeword, complete_weight, hamming_distribution
from cwekit.cwe import (
    build_weight_vectors,
    check_fold_shift_identity,
    codeword_complete_weight,
    cwe_brute_force,
    cwe_closed_form,
    fold_sum,
    hamming_from_cwe,
    repeat_to_full,
    repeat_to_k,
    shift,
)
from cwekit.errors import BadBlockLength, BadModulus, BadRange, ZeroElement
from cwekit.galois import FQ2_ZERO, FieldSpec, build_field, prime_powers

from golden import GOLDEN_CWE, TEMPLATES


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def terms_as_set(enum):
    return {(cw.counts, f) for cw, f in enum.terms}


# -- vector operators ---------------------------------------------------------


def test_shift_examples():
    assert shift((3, 2, 2), 1) == (2, 3, 2)
    assert shift((3, 2, 2), 0) == (3, 2, 2)
    assert shift((2, 3, 0, 2, 4), 3) == (0, 2, 4, 2, 3)
    with pytest.raises(BadRange):
        shift((1, 2), -1)


def test_fold_sum_examples():
    v = (2, 2, 0, 1, 0, 2)
    assert fold_sum(v, 2) == (2, 5)
    assert fold_sum(v, 6) == v
    with pytest.raises(BadBlockLength):
        fold_sum(v, 4)


def test_repeat_examples(field9):
    assert repeat_to_full(field9, (4, 1)) == (4, 1, 4, 1, 4, 1, 4, 1)
    assert repeat_to_full(field9, (1,) * 8) == (1,) * 8
    ctx13 = build_field(FieldSpec(13, 1))
    assert repeat_to_k(ctx13, (2, 5), 6) == (2, 5, 2, 5, 2, 5)
    with pytest.raises(BadBlockLength):
        repeat_to_k(ctx13, (2, 5), 5)
    with pytest.raises(BadBlockLength):
        repeat_to_full(field9, (1, 2, 3))


@given(st.lists(st.integers(-50, 50), min_size=12, max_size=12),
       st.sampled_from([1, 2, 3, 4, 6, 12]), st.integers(0, 30))
def test_fold_absorbs_block_shifts(v, block, mshift):
    # shifting by a multiple of the block length leaves the fold unchanged
    assert fold_sum(shift(v, block * mshift), block) == fold_sum(tuple(v), block)


@given(st.lists(st.integers(0, 9), min_size=1, max_size=30),
       st.integers(0, 60), st.integers(0, 60))
def test_shift_composes(v, i, j):
    assert shift(shift(v, i), j) == shift(tuple(v), i + j)


@given(st.lists(st.integers(0, 9), min_size=2, max_size=8), st.integers(1, 5))
def test_fold_of_repeat_scales(v, reps):
    block = len(v)
    repeated = tuple(v) * reps
    assert fold_sum(repeated, block) == tuple(reps * x for x in v)


# -- weight templates ----------------------------------------------------------


def test_templates_showcase(showcase_fields):
    for q, expected in TEMPLATES.items():
        wv = build_weight_vectors(showcase_fields[q])
        for attr, value in expected.items():
            assert getattr(wv, attr) == value, (q, attr)


def test_template_sums():
    for p_, m_, q in prime_powers(32):
        ctx = build_field(FieldSpec(p_, m_))
        wv = build_weight_vectors(ctx)
        if q % 2 == 0:
            assert sum(wv.template) == q
        else:
            sums = {2 * sum(wv.template0), 2 * sum(wv.template1)}
            assert sums == {q - 1, q + 1}


def test_codeword_complete_weight_closed_form(field9):
    # class 0 gives the doubled template directly
    assert codeword_complete_weight(field9, field9.fq2(0)).counts == (
        1, 2, 0, 2, 1, 2, 0, 2)
    with pytest.raises(ZeroElement):
        codeword_complete_weight(field9, FQ2_ZERO)


def test_codeword_complete_weight_exhaustive_q_le_16():
    for p_, m_, q in prime_powers(16):
        ctx = build_field(FieldSpec(p_, m_))
        for e in range(ctx.order):
            b = ctx.fq2(e)
            direct = complete_weight(ctx, codeword(ctx, b, q - 1))
            assert codeword_complete_weight(ctx, b) == direct


# -- enumerators ---------------------------------------------------------------


def test_golden_enumerators(showcase_fields):
    for q, by_n in GOLDEN_CWE.items():
        ctx = showcase_fields[q]
        for N, expected in by_n.items():
            enum = cwe_closed_form(ctx, N)
            assert terms_as_set(enum) == set(
                ((tuple(v), f) for v, f in expected)
            ), (q, N)
            assert cwe_brute_force(ctx, N) == enum


def test_merged_term_q9_n4(field9):
    enum = cwe_closed_form(field9, 4)
    merged = dict(terms_as_set(enum))
    assert merged[(2,) * 8] == 40
    assert len(enum.terms) == 3


def test_terms_are_lex_sorted_and_frequencies_sum(field16):
    for N in divisors(15):
        enum = cwe_closed_form(field16, N)
        vecs = [cw.counts for cw, _ in enum.terms]
        assert vecs == sorted(vecs)
        assert sum(f for _, f in enum.terms) == field16.order
        assert enum == cwe_brute_force(field16, N)


def test_closed_requires_n_dividing_qm1(field9):
    with pytest.raises(BadModulus):
        cwe_closed_form(field9, 16)  # 16 | q^2-1 but not q-1
    with pytest.raises(BadModulus):
        cwe_brute_force(field9, 7)


def test_brute_force_accepts_any_order_divisor(field9):
    enum = cwe_brute_force(field9, 16)
    assert sum(f for _, f in enum.terms) == field9.order
    assert hamming_from_cwe(enum).terms  # collapses fine


def test_closed_vs_brute_small_sweep():
    for p_, m_, q in prime_powers(16):
        ctx = build_field(FieldSpec(p_, m_))
        for N in divisors(q - 1):
            closed = cwe_closed_form(ctx, N)
            assert closed == cwe_brute_force(ctx, N)
            assert hamming_from_cwe(closed) == hamming_distribution(ctx, N)


def test_full_order_code_term_structure(field8, field9):
    # N = q-1: q even gives q-1 shifted templates at frequency q+1
    enum8 = cwe_closed_form(field8, 7)
    assert len(enum8.terms) == 7
    assert all(f == 9 for _, f in enum8.terms)
    enum9 = cwe_closed_form(field9, 8)
    assert len(enum9.terms) == 8
    assert all(f == 10 for _, f in enum9.terms)


def test_gamma_choice_does_not_change_enumerators():
    base = None
    for seed in range(3):
        ctx = build_field(FieldSpec(3, 2, (2, 1, 1), seed=seed))
        enums = tuple(cwe_brute_force(ctx, N) for N in (1, 2, 4, 8))
        if base is None:
            base = enums
        else:
            assert enums == base


# -- fold/shift identity ---------------------------------------------------------


def test_identity_examples(field16, field9, field11):
    assert check_fold_shift_identity(field16, 5, 2)
    assert check_fold_shift_identity(field9, 4, 1)
    assert check_fold_shift_identity(field11, 5, 3, e=2)


def test_identity_range_checks(field9, field11):
    with pytest.raises(BadRange):
        check_fold_shift_identity(field9, 4, 2)  # j must be < N/2
    with pytest.raises(BadRange):
        check_fold_shift_identity(field11, 5, 5)
    with pytest.raises(BadRange):
        check_fold_shift_identity(field11, 5, 0)  # missing e
    with pytest.raises(BadModulus):
        check_fold_shift_identity(field9, 3, 0)


def test_identity_all_admissible_small():
    for p_, m_, q in prime_powers(16):
        ctx = build_field(FieldSpec(p_, m_))
        for N in divisors(q - 1):
            if q % 2 == 0 or N % 2 == 1:
                for j in range(N):
                    if q % 2 == 0:
                        assert check_fold_shift_identity(ctx, N, j)
                    else:
                        for e in range(1, 4):
                            assert check_fold_shift_identity(ctx, N, j, e=e)
            else:
                for j in range(N // 2):
                    assert check_fold_shift_identity(ctx, N, j)
