"""Explicit factorization of x^(q+1) - c over GF(q), with a brute-force oracle.

The roots of x^(q+1) - c are exactly the order-(q-1) cyclotomic class of
GF(q^2)* with index dlog_alpha(c), so every irreducible factor is linear
(a root inside GF(q)) or quadratic (a conjugate pair outside it).  Which
quadratics x^2 + alpha^i x + alpha^v are irreducible is decided by index
sets built from the sums alpha^(k+1) + alpha^(q-1-k) (and, for q odd,
alpha^k + alpha^(q-1-k)): those sums enumerate precisely the linear
coefficients of the *reducible* monic quadratics with constant term
alpha^v, and a scaling argument transports the answer to every constant
term alpha^(2j+v).

Two independent routes produce the factor list:

* factor_norm_poly - the closed form driven by the index sets;
* brute_force_factor - root enumeration over the cyclotomic class,
  pairing conjugates.

expand() multiplies a factor list back out so both routes can be checked
exactly against x^(q+1) - c.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParadoxicalField, ZeroElement
from .galois import FQ_ONE, FieldContext, Fq2Elem, FqElem

LINEAR = "linear"
PURE_QUADRATIC = "pure_quadratic"
QUADRATIC = "quadratic"

_KIND_ORDER = {LINEAR: 0, PURE_QUADRATIC: 1, QUADRATIC: 2}


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial over GF(q), low degree first, trailing zeros trimmed."""

    coeffs: tuple[FqElem, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(self.coeffs)
        while coeffs and coeffs[-1].is_zero:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs


@dataclass(frozen=True)
class IrreducibilitySets:
    """Index sets deciding irreducibility of x^2 + alpha^i x + alpha^v.

    q even: x^2 + alpha^i x + alpha is irreducible iff i is in
    `irreducible` (v is forced to 1; the constant alpha stands for every
    alpha^(2j+1) by scaling).

    q odd: indices live modulo (q-1)/2; `irreducible0` handles even
    constant exponents (v = 0) and `irreducible1` odd ones (v = 1).
    `two_exponent` is the unique s in [0, (q-1)/2) with alpha^s equal to
    2 or -2, and `minus_one_nonsquare` records whether -1 is a nonsquare
    (q = 3 mod 4), which decides when x^2 + alpha^(2j+v) is irreducible.
    """

    parity: str
    reducible: frozenset[int] | None = None
    irreducible: frozenset[int] | None = None
    reducible0: frozenset[int] | None = None
    irreducible0: frozenset[int] | None = None
    reducible1: frozenset[int] | None = None
    irreducible1: frozenset[int] | None = None
    two_exponent: int | None = None
    minus_one_nonsquare: bool | None = None


@dataclass(frozen=True)
class NormFactor:
    """One irreducible factor of x^(q+1) - c, in alpha-exponent form.

    kind/args:
      linear          (e,)    x + alpha^e
      pure_quadratic  (l,)    x^2 + alpha^l
      quadratic       (b, c)  x^2 + alpha^b x + alpha^c
    """

    kind: str
    args: tuple[int, ...]

    @property
    def degree(self) -> int:
        return 1 if self.kind == LINEAR else 2


def _factor_key(f: NormFactor) -> tuple[int, tuple[int, ...]]:
    return (_KIND_ORDER[f.kind], f.args)


@dataclass(frozen=True)
class Factorization:
    c: FqElem
    factors: tuple[NormFactor, ...]


def _index_sum(ctx: FieldContext, e1: int, e2: int) -> int:
    v = ctx.fq_add(ctx.fq(e1), ctx.fq(e2))
    if v.is_zero:
        raise ParadoxicalField(
            f"alpha^{e1} + alpha^{e2} = 0 inside an index-set defining range"
        )
    return v.exp


def irreducibility_sets(ctx: FieldContext) -> IrreducibilitySets:
    """Build the index sets for quadratic irreducibility over GF(q)."""
    q = ctx.q
    qm1 = q - 1
    if q % 2 == 0:
        red = {_index_sum(ctx, k + 1, (qm1 - k) % qm1) for k in range(q // 2 - 1)}
        assert len(red) == q // 2 - 1, "reducible linear coefficients must be distinct"
        irr = frozenset(range(qm1)) - red
        return IrreducibilitySets(
            parity="even", reducible=frozenset(red), irreducible=frozenset(irr)
        )

    half = qm1 // 2
    delta = q % 4 == 3
    red0 = {
        _index_sum(ctx, k, (qm1 - k) % qm1) % half for k in range((qm1 + 3) // 4)
    }
    red1 = {
        _index_sum(ctx, k + 1, (qm1 - k) % qm1) % half for k in range(qm1 // 4)
    }
    assert len(red0) == (qm1 + 3) // 4 and len(red1) == qm1 // 4
    irr0 = frozenset(range(half)) - red0
    irr1 = frozenset(range(half)) - red1
    assert 4 * len(irr0) == q - 1 - 2 * delta
    assert 4 * len(irr1) == q - 1 + 2 * delta

    two = ctx.fq_from_int(2)
    s = two.exp if two.exp < half else (two.exp + half) % qm1
    assert s < half and s not in irr0

    return IrreducibilitySets(
        parity="odd",
        reducible0=frozenset(red0),
        irreducible0=frozenset(irr0),
        reducible1=frozenset(red1),
        irreducible1=frozenset(irr1),
        two_exponent=s,
        minus_one_nonsquare=delta,
    )


def is_irreducible_quadratic(ctx: FieldContext, b: FqElem, c: FqElem) -> bool:
    """Decide irreducibility of x^2 + b*x + c via the index sets."""
    if c.is_zero:
        return False  # x * (x + b)
    q = ctx.q
    qm1 = q - 1
    ce = c.exp % qm1  # exponents reduce mod q-1 before case-splitting
    sets = irreducibility_sets(ctx)
    if q % 2 == 0:
        if b.is_zero:
            return False  # unique square roots in characteristic 2
        j = ((ce - 1) * pow(2, -1, qm1)) % qm1
        return (b.exp - j) % qm1 in sets.irreducible
    v = ce % 2
    if b.is_zero:
        return bool(sets.minus_one_nonsquare) ^ bool(v)
    j = ce // 2
    half = qm1 // 2
    target = sets.irreducible0 if v == 0 else sets.irreducible1
    return ((b.exp - j) % qm1) % half in target


def quadratic_from_root(ctx: FieldContext, r: Fq2Elem) -> Polynomial:
    """Minimal polynomial of r over GF(q): (x - r)(x - r^q), or x - r inside GF(q)."""
    if r.is_zero:
        raise ZeroElement("the zero root is excluded")
    if ctx.in_subfield(r):
        return Polynomial((ctx.fq_neg(ctx.project(r)), FQ_ONE))
    return Polynomial((ctx.norm(r), ctx.fq_neg(ctx.trace(r)), FQ_ONE))


def factor_norm_poly(ctx: FieldContext, c: FqElem) -> Factorization:
    """Closed-form factor list of x^(q+1) - c, canonically sorted.

    Canonical order: linear factors by constant exponent, then the pure
    quadratic, then full quadratics by linear-coefficient exponent.
    """
    if c.is_zero:
        raise ZeroElement("c must be a nonzero element of GF(q)")
    q = ctx.q
    qm1 = q - 1
    c = ctx.fq(c.exp)
    sets = irreducibility_sets(ctx)
    factors: list[NormFactor] = []
    e = c.exp
    if q % 2 == 0:
        j = ((e - 1) * pow(2, -1, qm1)) % qm1
        factors.append(NormFactor(LINEAR, ((e * (q // 2)) % qm1,)))  # x + c^(1/2)
        for i in sets.irreducible:
            factors.append(NormFactor(QUADRATIC, ((i + j) % qm1, e)))
    else:
        half = qm1 // 2
        v = e % 2
        j = e // 2
        if v == 0:
            factors.append(NormFactor(LINEAR, (j,)))
            factors.append(NormFactor(LINEAR, ((j + half) % qm1,)))
        if int(sets.minus_one_nonsquare) ^ v:
            factors.append(NormFactor(PURE_QUADRATIC, (e,)))
        target = sets.irreducible0 if v == 0 else sets.irreducible1
        for i in target:
            b = (i + j) % qm1
            factors.append(NormFactor(QUADRATIC, (b, e)))
            factors.append(NormFactor(QUADRATIC, ((b + half) % qm1, e)))
    factors.sort(key=_factor_key)
    assert sum(f.degree for f in factors) == q + 1
    return Factorization(c=c, factors=tuple(factors))


def brute_force_factor(ctx: FieldContext, c: FqElem) -> Factorization:
    """Oracle factor list: enumerate the norm-c cyclotomic class, pair conjugates."""
    if c.is_zero:
        raise ZeroElement("c must be a nonzero element of GF(q)")
    q = ctx.q
    order = ctx.order
    c = ctx.fq(c.exp)
    i = c.exp
    factors: list[NormFactor] = []
    seen: set[int] = set()
    for k in range(q + 1):
        d = (i + (q - 1) * k) % order
        if d in seen:
            continue
        seen.add(d)
        if d % (q + 1) == 0:
            # subfield root alpha^(d/(q+1)); factor x - root
            root = FqElem(d // (q + 1))
            factors.append(NormFactor(LINEAR, (ctx.fq_neg(root).exp,)))
            continue
        seen.add((d * q) % order)
        tr = ctx.trace(ctx.fq2(d))
        nrm = ctx.norm(ctx.fq2(d))
        if tr.is_zero:
            factors.append(NormFactor(PURE_QUADRATIC, (nrm.exp,)))
        else:
            factors.append(NormFactor(QUADRATIC, (ctx.fq_neg(tr).exp, nrm.exp)))
    factors.sort(key=_factor_key)
    return Factorization(c=c, factors=tuple(factors))


# Hot polynomial products run on integer exponent codes: -1 is the zero
# coefficient, any other value the alpha-exponent.


def _mul_codes(a: list[int], b: list[int], fq_zech: list[int], qm1: int) -> list[int]:
    out = [-1] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x < 0:
            continue
        for j, y in enumerate(b):
            if y < 0:
                continue
            prod = (x + y) % qm1
            cur = out[i + j]
            if cur < 0:
                out[i + j] = prod
            else:
                z = fq_zech[(prod - cur) % qm1]
                out[i + j] = -1 if z < 0 else (cur + z) % qm1
    return out


def _factor_codes(f: NormFactor) -> list[int]:
    if f.kind == LINEAR:
        return [f.args[0], 0]
    if f.kind == PURE_QUADRATIC:
        return [f.args[0], -1, 0]
    return [f.args[1], f.args[0], 0]


def _poly_from_codes(codes: list[int]) -> Polynomial:
    return Polynomial(tuple(FqElem(None if c < 0 else c) for c in codes))


def expand(ctx: FieldContext, f: Factorization) -> Polynomial:
    """Exact product of all factors; the empty product is 1."""
    qm1 = ctx.q - 1
    fq_zech = ctx.fq_zech
    codes = [0]
    for factor in f.factors:
        codes = _mul_codes(codes, _factor_codes(factor), fq_zech, qm1)
    return _poly_from_codes(codes)


def norm_binomial(ctx: FieldContext, c: FqElem) -> Polynomial:
    """The polynomial x^(q+1) - c."""
    if c.is_zero:
        raise ZeroElement("c must be a nonzero element of GF(q)")
    codes = [ctx.fq_neg(ctx.fq(c.exp)).exp] + [-1] * ctx.q + [0]
    return _poly_from_codes(codes)
