"""Trace-defined cyclic codes of dimension at most two and their weights.

For N dividing q^2 - 1 the code of order N collects the vectors
(Tr(a * gamma^(N k)))_k over all a in GF(q^2).  Its length is
n = (q^2-1)/N and its dimension is the multiplicative order of q
modulo n, which here is always 1 or 2.  The Hamming weight profile is a
trichotomy in u = gcd(q+1, N): one weight nq/(q+1) (u = 1), the pair
{n(q+1-u)/(q+1), n} (1 < u < q+1), or the repetition-code weight n
(u = q+1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BadModulus, EmptyDistribution
from .galois import FieldContext, Fq2Elem, FqElem


@dataclass(frozen=True)
class CodeSpec:
    """Shape parameters of the order-N code over GF(q)."""

    q: int
    N: int
    n: int
    dim: int
    u: int
    t: int | None  # (q-1)/N when N divides q-1, else None


@dataclass(frozen=True)
class Codeword:
    symbols: tuple[FqElem, ...]


@dataclass(frozen=True)
class CompleteWeight:
    """Occurrence counts (f_0, ..., f_(q-2)) of alpha^0 .. alpha^(q-2).

    The count of the zero symbol is derived: n - sum(counts).
    """

    counts: tuple[int, ...]

    @property
    def hamming_weight(self) -> int:
        return sum(self.counts)


@dataclass(frozen=True)
class HammingDistribution:
    """(weight, frequency) pairs over nonzero codewords, sorted by weight."""

    terms: tuple[tuple[int, int], ...]


def code_spec(ctx: FieldContext, N: int) -> CodeSpec:
    if N <= 0 or ctx.order % N != 0:
        raise BadModulus(f"N = {N} does not divide q^2-1 = {ctx.order}")
    q = ctx.q
    n = ctx.order // N
    u = math.gcd(q + 1, N)
    dim = 1 if u == q + 1 else 2
    t = (q - 1) // N if (q - 1) % N == 0 else None
    return CodeSpec(q=q, N=N, n=n, dim=dim, u=u, t=t)


def codeword(ctx: FieldContext, a: Fq2Elem, N: int) -> Codeword:
    """The trace vector (Tr(a * gamma^(N k)))_k of length (q^2-1)/N."""
    spec = code_spec(ctx, N)
    return Codeword(
        tuple(ctx.trace(ctx.mul(a, ctx.fq2(N * k))) for k in range(spec.n))
    )


def complete_weight(ctx: FieldContext, v: Codeword) -> CompleteWeight:
    counts = [0] * (ctx.q - 1)
    for sym in v.symbols:
        if not sym.is_zero:
            counts[sym.exp] += 1
    return CompleteWeight(tuple(counts))


def zero_symbol_count(cw: CompleteWeight, n: int) -> int:
    """Derived count of the zero symbol in a length-n codeword."""
    return n - sum(cw.counts)


def hamming_distribution(ctx: FieldContext, N: int) -> HammingDistribution:
    """Weight profile over the q^dim - 1 nonzero codewords."""
    spec = code_spec(ctx, N)
    q, n, u = spec.q, spec.n, spec.u
    total = ctx.order
    if u == q + 1:
        return HammingDistribution(((n, q - 1),))
    if u == 1:
        assert (n * q) % (q + 1) == 0
        return HammingDistribution(((n * q // (q + 1), total),))
    assert (n * (q + 1 - u)) % (q + 1) == 0 and total % u == 0
    low = n * (q + 1 - u) // (q + 1)
    return HammingDistribution(((low, total // u), (n, total * (u - 1) // u)))


def min_distance(dist: HammingDistribution) -> int:
    if not dist.terms:
        raise EmptyDistribution("no nonzero weights")
    return min(w for w, _ in dist.terms)
