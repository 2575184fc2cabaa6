"""Cyclotomic classes of GF(q^2)*.

For N dividing q^2 - 1, the class with index i is the coset
gamma^i <gamma^N>, so membership is a congruence on gamma-exponents:
gamma^e lies in class i exactly when e = i (mod N).  Classes are
produced lazily since their sizes range from q+1 up to q^2 - 1.
"""

from __future__ import annotations

from typing import Iterator

from .errors import BadModulus, ZeroElement
from .galois import FieldContext, Fq2Elem, FqElem


def _check_modulus(ctx: FieldContext, N: int) -> None:
    if N <= 0 or ctx.order % N != 0:
        raise BadModulus(f"N = {N} does not divide q^2-1 = {ctx.order}")


def class_of(ctx: FieldContext, x: Fq2Elem, N: int) -> int:
    """Index of the order-N cyclotomic class containing x."""
    _check_modulus(ctx, N)
    if x.is_zero:
        raise ZeroElement("zero belongs to no cyclotomic class")
    return x.exp % N


def enumerate_class(ctx: FieldContext, N: int, i: int) -> Iterator[Fq2Elem]:
    """Members gamma^(i + N*k) for k = 0 .. (q^2-1)/N - 1, in that order.

    Indices are reduced modulo N, matching the convention that class
    subscripts are read modulo N.
    """
    _check_modulus(ctx, N)
    i %= N
    return (ctx.fq2(i + N * k) for k in range(ctx.order // N))


def class_field_intersection(ctx: FieldContext, i: int) -> tuple[FqElem, ...]:
    """Members of the order-(q-1) class i lying in the GF(q) embedding.

    Cardinality is 1 for q even, and 2 or 0 for q odd according to the
    parity of i.  Results are sorted by alpha-exponent.
    """
    q = ctx.q
    i %= q - 1
    found = []
    for k in range(q + 1):
        e = (i + (q - 1) * k) % ctx.order
        if e % (q + 1) == 0:
            found.append(e // (q + 1))
    return tuple(FqElem(e) for e in sorted(found))
