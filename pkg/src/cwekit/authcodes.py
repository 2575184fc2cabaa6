"""Systematic authentication codes built on the trace-defined codes.

A key is a pair (k1, k2) of a coordinate shift and a symbol offset; the
tag of source state s is the k1-th symbol of the s-th codeword plus k2.
The impersonation success probability is always 1/q, and the
substitution success probability is the largest symbol multiplicity in
any nonzero codeword divided by the length, read off the complete
weight data exactly.  Probabilities stay rational throughout so the
optimality classification is an exact comparison against 1 - d/n.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .codes import CodeSpec, code_spec, hamming_distribution, min_distance
from .cwe import CWEnum, cwe_brute_force, cwe_closed_form
from .errors import BadRange, EmptyDistribution
from .galois import FQ2_ZERO, FieldContext, FqElem


class OptimalityClass(enum.Enum):
    OPTIMAL = "optimal"
    ALMOST_OPTIMAL = "almost_optimal"
    NEITHER = "neither"


@dataclass(frozen=True)
class AuthReport:
    """Deception probabilities and classification for one code."""

    spec: CodeSpec
    min_dist: int
    p_impersonation: Fraction
    p_substitution: Fraction
    lower_bound: Fraction  # 1 - d/n
    classification: OptimalityClass


def encode(ctx: FieldContext, N: int, s: int, k1: int, k2: FqElem) -> FqElem:
    """Tag of source state s under key (k1, k2).

    Codewords are indexed by the trace parameter in the fixed order
    0, gamma^0, gamma^1, ...; a message (s, t) authenticates iff
    t == encode(s, k1, k2).
    """
    spec = code_spec(ctx, N)
    if not 0 <= s < ctx.q**spec.dim:
        raise BadRange(f"source state {s} outside [0, q^dim)")
    if not 0 <= k1 < spec.n:
        raise BadRange(f"shift key {k1} outside [0, n)")
    a = FQ2_ZERO if s == 0 else ctx.fq2(s - 1)
    symbol = ctx.trace(ctx.mul(a, ctx.fq2(N * k1)))
    return ctx.fq_add(symbol, k2)


def substitution_probability(enum_: CWEnum) -> Fraction:
    """Max symbol multiplicity over nonzero codewords, divided by n.

    The zero symbol participates through the derived count n - sum(f);
    all-zero weight vectors (the zero codeword, reachable when the map
    from trace parameters to codewords is not injective) are skipped.
    """
    n = enum_.spec.n
    best = -1
    for cw, _freq in enum_.terms:
        s = sum(cw.counts)
        if s == 0:
            continue
        best = max(best, max(cw.counts), n - s)
    if best < 0:
        raise EmptyDistribution("no nonzero codewords")
    return Fraction(best, n)


def p_substitution(ctx: FieldContext, N: int, method: str = "auto") -> Fraction:
    """Exact substitution success probability for the order-N code."""
    if method == "auto":
        method = "closed" if (ctx.q - 1) % N == 0 else "brute"
    if method == "closed":
        return substitution_probability(cwe_closed_form(ctx, N))
    if method == "brute":
        return substitution_probability(cwe_brute_force(ctx, N))
    raise ValueError(f"unknown method {method!r}")


def classify(ctx: FieldContext, N: int) -> AuthReport:
    """Assemble deception probabilities and the optimality verdict."""
    spec = code_spec(ctx, N)
    d = min_distance(hamming_distribution(ctx, N))
    ps = p_substitution(ctx, N)
    bound = 1 - Fraction(d, spec.n)
    assert ps >= bound
    if ps == bound:
        cls = OptimalityClass.OPTIMAL
    elif ps == 1 - Fraction(d - 1, spec.n):
        cls = OptimalityClass.ALMOST_OPTIMAL
    else:
        cls = OptimalityClass.NEITHER
    return AuthReport(
        spec=spec,
        min_dist=d,
        p_impersonation=Fraction(1, ctx.q),
        p_substitution=ps,
        lower_bound=bound,
        classification=cls,
    )
