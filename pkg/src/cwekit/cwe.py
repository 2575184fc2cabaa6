"""Complete weight enumerators of the order-N codes with N | (q-1).

Everything reduces to fixed weight templates read off the quadratic
irreducibility index sets: for q even one vector of length q-1 with
entries {0,2}, for q odd two half-length vectors (one carrying a single
1 at the exponent of +-2).  Cyclic shifts of the templates give the
complete weight of every codeword of the length-(q+1) code, and for a
general N | (q-1) each codeword weight is a repeat of a shifted block
fold of a template.

cwe_brute_force is the independent oracle: it evaluates every trace
vector directly from the field tables and counts symbols, accepting any
N | (q^2-1).  Both routes return canonically ordered CWEnum values so
equality is plain ==.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .codes import CodeSpec, CompleteWeight, HammingDistribution, code_spec
from .errors import BadBlockLength, BadModulus, BadRange, ZeroElement
from .factorizer import irreducibility_sets
from .galois import FieldContext, Fq2Elem

Vec = tuple[int, ...]


def shift(v: Sequence[int], i: int) -> Vec:
    """Circular right shift applied i times; the last entry moves first."""
    if i < 0:
        raise BadRange("shift count must be nonnegative")
    v = tuple(v)
    if not v:
        return v
    i %= len(v)
    return v[-i:] + v[:-i] if i else v


def fold_sum(v: Sequence[int], block: int) -> Vec:
    """Entrywise sum of the len(v)/block consecutive blocks of length block."""
    v = tuple(v)
    if block <= 0 or len(v) % block != 0:
        raise BadBlockLength(f"block length {block} does not divide {len(v)}")
    out = [0] * block
    for start in range(0, len(v), block):
        for j in range(block):
            out[j] += v[start + j]
    return tuple(out)


def repeat_to_k(ctx: FieldContext, v: Sequence[int], k: int) -> Vec:
    """v concatenated k/len(v) times; k must divide q-1."""
    v = tuple(v)
    if k <= 0 or (ctx.q - 1) % k != 0:
        raise BadBlockLength(f"k = {k} does not divide q-1 = {ctx.q - 1}")
    if not v or k % len(v) != 0:
        raise BadBlockLength(f"vector length {len(v)} does not divide k = {k}")
    return v * (k // len(v))


def repeat_to_full(ctx: FieldContext, v: Sequence[int]) -> Vec:
    """v concatenated (q-1)/len(v) times."""
    return repeat_to_k(ctx, v, ctx.q - 1)


def _vadd(a: Sequence[int], b: Sequence[int]) -> Vec:
    return tuple(x + y for x, y in zip(a, b, strict=True))


@dataclass(frozen=True)
class WeightVectors:
    """Complete-weight templates of the length-(q+1) code.

    q even: `template` (length q-1) holds 2 at each irreducible index.
    q odd: `template0`/`template1` (length (q-1)/2) hold 2 at the
    irreducible indices for even/odd constant exponents; template0 also
    holds a single 1 at `one_position`, the exponent of +-2.  A codeword
    weight is the template (q even) or a doubled template (q odd), up to
    cyclic shift.
    """

    parity: str
    template: Vec | None = None
    template0: Vec | None = None
    template1: Vec | None = None
    one_position: int | None = None


@dataclass(frozen=True)
class CWEnum:
    """Complete weight enumerator: (weight vector, frequency) terms.

    Terms are sorted lexicographically by count vector; frequencies over
    all q^2 - 1 nonzero trace parameters sum to q^2 - 1.
    """

    spec: CodeSpec
    terms: tuple[tuple[CompleteWeight, int], ...]


def build_weight_vectors(ctx: FieldContext) -> WeightVectors:
    q = ctx.q
    sets = irreducibility_sets(ctx)
    if q % 2 == 0:
        template = tuple(2 if i in sets.irreducible else 0 for i in range(q - 1))
        assert sum(template) == q
        return WeightVectors(parity="even", template=template)
    half = (q - 1) // 2
    t0 = [2 if i in sets.irreducible0 else 0 for i in range(half)]
    t0[sets.two_exponent] = 1
    t1 = tuple(2 if i in sets.irreducible1 else 0 for i in range(half))
    t0 = tuple(t0)
    assert {2 * sum(t0), 2 * sum(t1)} == {q - 1, q + 1}
    return WeightVectors(
        parity="odd", template0=t0, template1=t1, one_position=sets.two_exponent
    )


def codeword_complete_weight(ctx: FieldContext, b: Fq2Elem) -> CompleteWeight:
    """Closed-form complete weight of the length-(q+1) codeword of b.

    With i the order-(q-1) class index of b: for q even the weight is
    the template shifted by j where i = 2j+1 (mod q-1); for q odd it is
    the doubled shift-by-(i div 2) of template0 or template1 according
    to the parity of i.
    """
    if b.is_zero:
        raise ZeroElement("the zero codeword has no class index")
    q = ctx.q
    qm1 = q - 1
    wv = build_weight_vectors(ctx)
    i = b.exp % qm1
    if q % 2 == 0:
        j = ((i - 1) * pow(2, -1, qm1)) % qm1
        return CompleteWeight(shift(wv.template, j))
    tpl = wv.template0 if i % 2 == 0 else wv.template1
    blk = shift(tpl, i // 2)
    return CompleteWeight(blk + blk)


def _canonical_terms(counter: Counter[Vec]) -> tuple[tuple[CompleteWeight, int], ...]:
    return tuple((CompleteWeight(vec), f) for vec, f in sorted(counter.items()))


def cwe_closed_form(ctx: FieldContext, N: int) -> CWEnum:
    """Closed-form CWE of the order-N code, for N | (q-1).

    Blocks are fold sums of the weight templates; shifting and repeating
    them to length q-1 yields every term.  Coinciding weight vectors are
    merged by summing frequencies.
    """
    q = ctx.q
    if N <= 0 or (q - 1) % N != 0:
        raise BadModulus(f"N = {N} does not divide q-1 = {q - 1}")
    spec = code_spec(ctx, N)
    wv = build_weight_vectors(ctx)
    counter: Counter[Vec] = Counter()
    if q % 2 == 0:
        folded = fold_sum(wv.template, N)
        for j in range(N):
            counter[repeat_to_full(ctx, shift(folded, j))] += spec.n
    elif N % 2 == 0:
        for tpl in (wv.template0, wv.template1):
            folded = fold_sum(tpl, N // 2)
            for j in range(N // 2):
                counter[repeat_to_full(ctx, shift(folded, j))] += spec.n
    else:
        e = (N - 1) // 2
        folded = fold_sum(_vadd(wv.template0, shift(wv.template1, e)), N)
        for j in range(N):
            counter[repeat_to_full(ctx, shift(folded, j))] += spec.n
    assert sum(counter.values()) == ctx.order
    return CWEnum(spec=spec, terms=_canonical_terms(counter))


def _brute_count_rows(ctx: FieldContext, N: int) -> np.ndarray:
    """Symbol counts of every nonzero codeword, row e = trace parameter gamma^e."""
    order = ctx.order
    q = ctx.q
    n = order // N
    # int32 everywhere: exponents < q^2-1 <= 2^20 and the flat bincount
    # index is bounded by the 4e6 chunk guard, far below 2^31
    tsym = np.asarray(ctx.trace_symbol_codes, dtype=np.int32)
    offsets = ((np.arange(n, dtype=np.int64) * N) % order).astype(np.int32)
    counts = np.empty((order, q - 1), dtype=np.int32)
    # bounds both the gather matrix (rows * n) and the bincount range (rows * q)
    chunk = max(1, 4_000_000 // max(n, q))
    for start in range(0, order, chunk):
        stop = min(start + chunk, order)
        rows = np.arange(start, stop, dtype=np.int32)
        syms = tsym[(rows[:, None] + offsets[None, :]) % order]
        flat = (np.arange(stop - start, dtype=np.int32)[:, None] * q + syms).ravel()
        block = np.bincount(flat, minlength=(stop - start) * q).reshape(stop - start, q)
        counts[start:stop] = block[:, : q - 1]
    return counts


def cwe_brute_force(ctx: FieldContext, N: int) -> CWEnum:
    """Oracle CWE: count symbols of every trace vector directly.

    Accepts any N | (q^2-1); identical weight vectors are aggregated
    with their frequencies (which therefore sum to q^2-1).
    """
    spec = code_spec(ctx, N)
    counts = _brute_count_rows(ctx, N)
    vecs, freqs = np.unique(counts, axis=0, return_counts=True)
    terms = tuple(
        (CompleteWeight(tuple(int(x) for x in row)), int(f))
        for row, f in zip(vecs, freqs)
    )
    return CWEnum(spec=spec, terms=terms)


def hamming_from_cwe(enum: CWEnum) -> HammingDistribution:
    """Collapse CWE terms to (Hamming weight, frequency) pairs."""
    acc: Counter[int] = Counter()
    for cw, freq in enum.terms:
        acc[cw.hamming_weight] += freq
    return HammingDistribution(tuple(sorted(acc.items())))


def check_fold_shift_identity(
    ctx: FieldContext, N: int, j: int, e: int | None = None
) -> bool:
    """Verify the shift-sum identity behind the closed-form CWE.

    Summing shifted copies of a weight template at stride N equals the
    repeat of the shifted block fold.  The applicable variant depends on
    the parities of q and N; `e` (the extra shift applied to the second
    template) participates only when both q and N are odd.
    """
    q = ctx.q
    if N <= 0 or (q - 1) % N != 0:
        raise BadModulus(f"N = {N} does not divide q-1 = {q - 1}")
    t = (q - 1) // N
    wv = build_weight_vectors(ctx)

    if q % 2 == 0:
        if not 0 <= j < N:
            raise BadRange(f"j = {j} outside [0, {N})")
        lhs = (0,) * (q - 1)
        for m in range(t):
            lhs = _vadd(lhs, shift(wv.template, j + N * m))
        rhs = repeat_to_full(ctx, shift(fold_sum(wv.template, N), j))
        return lhs == rhs

    if N % 2 == 0:
        if not 0 <= j < N // 2:
            raise BadRange(f"j = {j} outside [0, {N // 2})")
        for tpl in (wv.template0, wv.template1):
            doubled = tpl + tpl
            lhs = (0,) * (q - 1)
            for m in range(t):
                lhs = _vadd(lhs, shift(doubled, j + (N // 2) * m))
            rhs = repeat_to_full(ctx, shift(fold_sum(tpl, N // 2), j))
            if lhs != rhs:
                return False
        return True

    if not 0 <= j < N:
        raise BadRange(f"j = {j} outside [0, {N})")
    if e is None or e < 1:
        raise BadRange("a positive extra shift e is required when q and N are odd")
    d0 = wv.template0 + wv.template0
    d1 = wv.template1 + wv.template1
    lhs = (0,) * (q - 1)
    for m in range(t // 2):
        lhs = _vadd(lhs, shift(d0, j + N * m))
        lhs = _vadd(lhs, shift(d1, j + e + N * m))
    rhs = repeat_to_full(
        ctx, shift(fold_sum(_vadd(wv.template0, shift(wv.template1, e)), N), j)
    )
    return lhs == rhs
