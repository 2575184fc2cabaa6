"""Exact arithmetic in the field tower GF(p) < GF(q) < GF(q^2).

The quadratic extension GF(q^2) is realized as GF(p)[x]/(h) for a
deterministically chosen primitive polynomial h of degree 2m, and all
elements live in exponent form relative to a primitive element gamma:
a nonzero element is gamma^e, zero is a separate sentinel.  Products
are exponent additions, sums go through a Zech logarithm table, and
the subfield GF(q) is {0} union <gamma^(q+1)>, generated by
alpha = gamma^(q+1).

Exponent form matches how everything downstream is phrased: cyclotomic
classes, the quadratic irreducibility index sets, and complete weight
coordinates are all statements about exponents of gamma and alpha.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product as _cartesian
from typing import Iterator, Sequence

from .errors import (
    DivisionByZero,
    NoSuchPrimitive,
    NotIrreducible,
    SizeLimit,
    ZeroElement,
)

# Dense GF(p) coefficient vectors, low degree first.
Coeffs = tuple[int, ...]

DEFAULT_Q_LIMIT = 1 << 10


@dataclass(frozen=True)
class FieldSpec:
    """Parameters selecting one concrete realization of the tower.

    fq_min_poly, when given, is the monic degree-m minimal polynomial of
    alpha over GF(p) (low degree first); it must be primitive.  seed
    deterministically selects among the primitive gamma compatible with
    that alpha.
    """

    p: int
    m: int
    fq_min_poly: Coeffs | None = None
    seed: int = 0


@dataclass(frozen=True)
class FqElem:
    """Element of GF(q): zero, or alpha^exp with 0 <= exp < q-1."""

    exp: int | None

    @property
    def is_zero(self) -> bool:
        return self.exp is None


@dataclass(frozen=True)
class Fq2Elem:
    """Element of GF(q^2): zero, or gamma^exp with 0 <= exp < q^2-1."""

    exp: int | None

    @property
    def is_zero(self) -> bool:
        return self.exp is None


FQ_ZERO = FqElem(None)
FQ_ONE = FqElem(0)
FQ2_ZERO = Fq2Elem(None)
FQ2_ONE = Fq2Elem(0)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_rem(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a modulo monic-leading b, coefficients mod p."""
    a = a[:]
    db = len(b) - 1
    inv_lead = pow(b[-1], -1, p)
    while len(a) - 1 >= db and a:
        if a[-1] == 0:
            a.pop()
            continue
        coef = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - db
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bc) % p
        _poly_trim(a)
    return a


def _poly_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_rem(out, mod, p)


def _poly_powmod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    acc = _poly_rem(base[:], mod, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, acc, mod, p)
        acc = _poly_mulmod(acc, acc, mod, p)
        e >>= 1
    return result


def _is_primitive_poly(p: int, coeffs: list[int]) -> bool:
    """True when the class of x generates the full unit group mod coeffs.

    That forces coeffs irreducible as well: a reducible modulus has a
    unit group strictly smaller than p^deg - 1.
    """
    if coeffs[0] == 0:
        return False
    deg = len(coeffs) - 1
    n = p**deg - 1
    x = [0, 1]
    if _poly_powmod(x, n, coeffs, p) != [1]:
        return False
    return all(_poly_powmod(x, n // r, coeffs, p) != [1] for r in _prime_factors(n))


def _least_primitive_poly(p: int, deg: int) -> Coeffs:
    """Lexicographically least monic primitive polynomial of given degree.

    Coefficient tuples are compared low-degree-first.
    """
    for tail in _cartesian(range(p), repeat=deg):
        if tail[0] == 0:
            continue
        f = list(tail) + [1]
        if _is_primitive_poly(p, f):
            return tuple(f)
    raise NoSuchPrimitive(f"no primitive polynomial of degree {deg} over GF({p})")


def _is_irreducible(p: int, coeffs: list[int]) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    deg = len(coeffs) - 1
    if deg == 1:
        return True
    if coeffs[0] == 0:
        return False
    for d in range(1, deg // 2 + 1):
        for tail in _cartesian(range(p), repeat=d):
            g = list(tail) + [1]
            if not _poly_rem(coeffs[:], g, p):
                return False
    return True


def prime_powers(limit: int) -> list[tuple[int, int, int]]:
    """All (p, m, q=p^m) with q <= limit, sorted by q."""
    out = []
    for p in range(2, limit + 1):
        if not _is_prime(p):
            continue
        q = p
        m = 1
        while q <= limit:
            out.append((p, m, q))
            q *= p
            m += 1
    return sorted(out, key=lambda t: t[2])


class FieldContext:
    """Immutable tables for one realization of GF(p) < GF(q) < GF(q^2).

    All operations are pure functions of (context, arguments); the
    context is safe to share across threads once built.
    """

    def __init__(self, spec: FieldSpec, q_limit: int = DEFAULT_Q_LIMIT):
        p, m = spec.p, spec.m
        if not _is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if m < 1:
            raise ValueError(f"extension degree m = {m} must be >= 1")
        if spec.seed < 0:
            raise ValueError("seed must be nonnegative")
        q = p**m
        if q > q_limit:
            raise SizeLimit(f"q = {q} exceeds the table cap {q_limit}")

        self.spec = spec
        self.p = p
        self.m = m
        self.q = q
        self.q2 = q * q
        self.order = q * q - 1  # |GF(q^2)*|
        self.modulus: Coeffs = _least_primitive_poly(p, 2 * m)

        self._gpow, self._dlog_g = self._build_power_table()
        k_star, fq_poly = self._resolve_alpha(spec.fq_min_poly)
        self.fq_min_poly = fq_poly
        self._k_star = k_star
        self._compat: list[int] | None = None
        if spec.fq_min_poly is None and spec.seed == 0:
            self.gamma_exp_internal = 1
        else:
            compat = self.compatible_gamma_exponents()
            self.gamma_exp_internal = compat[spec.seed % len(compat)]

        self._build_gamma_tables()
        self._scalar_fq = self._build_scalar_table()
        self.gamma_min_poly = self.min_poly_over_prime(self.gamma)

    # -- construction helpers ------------------------------------------------

    def _build_power_table(self) -> tuple[list[int], dict[int, int]]:
        p = self.p
        deg2 = 2 * self.m
        h = self.modulus
        gpow = [0] * self.order
        cur = [0] * deg2
        cur[0] = 1
        for t in range(self.order):
            packed = 0
            for c in reversed(cur):
                packed = packed * p + c
            gpow[t] = packed
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for i in range(deg2):
                    cur[i] = (cur[i] - top * h[i]) % p
        assert cur[0] == 1 and not any(cur[1:]), "modulus is not primitive"
        return gpow, {v: t for t, v in enumerate(gpow)}

    def _unpack(self, packed: int) -> tuple[int, ...]:
        out = []
        for _ in range(2 * self.m):
            packed, c = divmod(packed, self.p)
            out.append(c)
        return tuple(out)

    def _padd(self, a: int, b: int) -> int:
        """Packed coordinatewise sum in GF(p)^(2m)."""
        if self.p == 2:
            return a ^ b
        out = 0
        mult = 1
        for _ in range(2 * self.m):
            a, ca = divmod(a, self.p)
            b, cb = divmod(b, self.p)
            out += ((ca + cb) % self.p) * mult
            mult *= self.p
        return out

    def _eval_at_subfield(self, coeffs: Sequence[int], k: int) -> int:
        """Packed value of sum_i coeffs[i] * (g^((q+1)k))^i."""
        qp1 = self.q + 1
        acc = 0
        for i, c in enumerate(coeffs):
            if c == 0:
                continue
            term = self._unpack(self._gpow[(qp1 * k * i) % self.order])
            packed = 0
            mult = 1
            for digit in term:
                packed += ((digit * c) % self.p) * mult
                mult *= self.p
            acc = self._padd(acc, packed)
        return acc

    def _resolve_alpha(self, poly: Coeffs | None) -> tuple[int, Coeffs | None]:
        """Pick the subfield exponent k with alpha = g^((q+1)k)."""
        if poly is None:
            return 1, None
        p, m, q = self.p, self.m, self.q
        f = _poly_trim([c % p for c in poly])
        if len(f) != m + 1 or f[-1] != 1:
            raise ValueError(f"fq_min_poly must be monic of degree {m} over GF({p})")
        if f[0] == 0:
            if m == 1:
                raise NoSuchPrimitive("the root of x is zero, which generates nothing")
            raise NotIrreducible("x divides fq_min_poly")
        if not _is_irreducible(p, f):
            raise NotIrreducible(f"fq_min_poly {tuple(f)} is reducible over GF({p})")
        roots = [k for k in range(q - 1) if self._eval_at_subfield(f, k) == 0]
        assert roots, "an irreducible degree-m polynomial splits in GF(q)"
        if math.gcd(roots[0], q - 1) != 1:
            raise NoSuchPrimitive(
                f"fq_min_poly {tuple(f)} is irreducible but its roots have order "
                f"{(q - 1) // math.gcd(roots[0], q - 1)} < {q - 1}"
            )
        return roots[0], tuple(f)

    def compatible_gamma_exponents(self) -> list[int]:
        """Internal exponents e of all primitive gamma = g^e with gamma^(q+1) = alpha.

        Ascending; FieldSpec.seed indexes this list modulo its length.
        """
        if self._compat is None:
            qm1 = self.q - 1
            k = self._k_star % qm1
            self._compat = [
                e
                for e in range(1, self.order)
                if math.gcd(e, self.order) == 1 and e % qm1 == k
            ]
            assert self._compat, "a primitive alpha always lifts to a primitive gamma"
        return self._compat

    def _build_gamma_tables(self) -> None:
        order = self.order
        e_star = self.gamma_exp_internal
        self._inv_e = pow(e_star, -1, order)
        gpow, dlog_g = self._gpow, self._dlog_g
        q, qp1, qm1 = self.q, self.q + 1, self.q - 1

        zech = [-1] * order
        for t in range(order):
            w = self._padd(gpow[(e_star * t) % order], 1)
            if w:
                zech[t] = (dlog_g[w] * self._inv_e) % order
        self.zech = zech

        # Symbol code of Tr(gamma^t): alpha-exponent in [0, q-2], or q-1 for zero.
        trace_sym = [qm1] * order
        for t in range(order):
            z = zech[(t * qm1) % order]
            if z >= 0:
                s_exp = (t + z) % order
                assert s_exp % qp1 == 0, "trace landed outside the subfield"
                trace_sym[t] = s_exp // qp1
        self.trace_symbol_codes = trace_sym

        # Zech table restricted to the subfield: dlog_alpha(1 + alpha^i), -1 if zero.
        fq_zech = [-1] * qm1
        for i in range(qm1):
            z = zech[(qp1 * i) % order]
            if z >= 0:
                assert z % qp1 == 0
                fq_zech[i] = z // qp1
        self.fq_zech = fq_zech

    def _build_scalar_table(self) -> list[FqElem]:
        out = [FQ_ZERO]
        for c in range(1, self.p):
            e = (self._dlog_g[c] * self._inv_e) % self.order
            assert e % (self.q + 1) == 0
            out.append(FqElem(e // (self.q + 1)))
        return out

    # -- element constructors ------------------------------------------------

    @property
    def gamma(self) -> Fq2Elem:
        return Fq2Elem(1 % self.order)

    @property
    def alpha(self) -> FqElem:
        return FqElem(1 % (self.q - 1))

    def fq2(self, exp: int) -> Fq2Elem:
        return Fq2Elem(exp % self.order)

    def fq(self, exp: int) -> FqElem:
        return FqElem(exp % (self.q - 1))

    def fq_from_int(self, c: int) -> FqElem:
        """The prime-field scalar c as an element of GF(q)."""
        return self._scalar_fq[c % self.p]

    def fq2_nonzero(self) -> Iterator[Fq2Elem]:
        return (Fq2Elem(e) for e in range(self.order))

    def fq_elements(self) -> Iterator[FqElem]:
        yield FQ_ZERO
        for e in range(self.q - 1):
            yield FqElem(e)

    # -- GF(q^2) arithmetic ----------------------------------------------------

    def mul(self, a: Fq2Elem, b: Fq2Elem) -> Fq2Elem:
        if a.is_zero or b.is_zero:
            return FQ2_ZERO
        return Fq2Elem((a.exp + b.exp) % self.order)

    def add(self, a: Fq2Elem, b: Fq2Elem) -> Fq2Elem:
        if a.is_zero:
            return b
        if b.is_zero:
            return a
        z = self.zech[(b.exp - a.exp) % self.order]
        if z < 0:
            return FQ2_ZERO
        return Fq2Elem((a.exp + z) % self.order)

    def neg(self, a: Fq2Elem) -> Fq2Elem:
        if a.is_zero or self.p == 2:
            return a
        return Fq2Elem((a.exp + self.order // 2) % self.order)

    def sub(self, a: Fq2Elem, b: Fq2Elem) -> Fq2Elem:
        return self.add(a, self.neg(b))

    def pow(self, a: Fq2Elem, k: int) -> Fq2Elem:
        if a.is_zero:
            if k > 0:
                return FQ2_ZERO
            if k == 0:
                return FQ2_ONE
            raise DivisionByZero("negative power of zero")
        return Fq2Elem((a.exp * k) % self.order)

    def inv(self, a: Fq2Elem) -> Fq2Elem:
        if a.is_zero:
            raise DivisionByZero("zero has no multiplicative inverse")
        return Fq2Elem(-a.exp % self.order)

    def trace(self, x: Fq2Elem) -> FqElem:
        """Tr(x) = x + x^q, landing in GF(q)."""
        if x.is_zero:
            return FQ_ZERO
        code = self.trace_symbol_codes[x.exp % self.order]
        return FQ_ZERO if code == self.q - 1 else FqElem(code)

    def norm(self, x: Fq2Elem) -> FqElem:
        """N(x) = x^(q+1); norm(gamma^i) = alpha^(i mod (q-1))."""
        if x.is_zero:
            return FQ_ZERO
        return FqElem(x.exp % (self.q - 1))

    def embed(self, a: FqElem) -> Fq2Elem:
        if a.is_zero:
            return FQ2_ZERO
        return Fq2Elem((a.exp * (self.q + 1)) % self.order)

    def in_subfield(self, x: Fq2Elem) -> bool:
        return x.is_zero or x.exp % (self.q + 1) == 0

    def project(self, x: Fq2Elem) -> FqElem:
        """Inverse of embed; only valid on subfield elements."""
        if x.is_zero:
            return FQ_ZERO
        if x.exp % (self.q + 1) != 0:
            raise ValueError(f"gamma^{x.exp} lies outside GF({self.q})")
        return FqElem(x.exp // (self.q + 1))

    # -- GF(q) arithmetic --------------------------------------------------

    def fq_mul(self, a: FqElem, b: FqElem) -> FqElem:
        if a.is_zero or b.is_zero:
            return FQ_ZERO
        return FqElem((a.exp + b.exp) % (self.q - 1))

    def fq_add(self, a: FqElem, b: FqElem) -> FqElem:
        if a.is_zero:
            return b
        if b.is_zero:
            return a
        z = self.fq_zech[(b.exp - a.exp) % (self.q - 1)]
        if z < 0:
            return FQ_ZERO
        return FqElem((a.exp + z) % (self.q - 1))

    def fq_neg(self, a: FqElem) -> FqElem:
        if a.is_zero or self.p == 2:
            return a
        return FqElem((a.exp + (self.q - 1) // 2) % (self.q - 1))

    def fq_sub(self, a: FqElem, b: FqElem) -> FqElem:
        return self.fq_add(a, self.fq_neg(b))

    def fq_pow(self, a: FqElem, k: int) -> FqElem:
        if a.is_zero:
            if k > 0:
                return FQ_ZERO
            if k == 0:
                return FQ_ONE
            raise DivisionByZero("negative power of zero")
        return FqElem((a.exp * k) % (self.q - 1))

    def fq_inv(self, a: FqElem) -> FqElem:
        if a.is_zero:
            raise DivisionByZero("zero has no multiplicative inverse")
        return FqElem(-a.exp % (self.q - 1))

    # -- representations -----------------------------------------------------

    def element_coords(self, x: Fq2Elem) -> tuple[int, ...]:
        """Coordinates of x in the polynomial basis of the internal modulus.

        These are comparable across contexts with the same (p, m) but
        different seeds, which all share the same modulus.
        """
        if x.is_zero:
            return (0,) * (2 * self.m)
        return self._unpack(self._gpow[(self.gamma_exp_internal * x.exp) % self.order])

    def antilog(self, e: int) -> tuple[int, ...]:
        return self.element_coords(self.fq2(e))

    def dlog(self, coords: Sequence[int]) -> int:
        packed = 0
        for c in reversed(tuple(coords)):
            packed = packed * self.p + (c % self.p)
        if packed == 0:
            raise ZeroElement("zero has no discrete logarithm")
        return (self._dlog_g[packed] * self._inv_e) % self.order

    def min_poly_over_prime(self, x: Fq2Elem) -> Coeffs:
        """Minimal polynomial of x over GF(p), low degree first, monic."""
        if x.is_zero:
            return (0, 1)
        conjugates = []
        cur = x.exp
        while cur not in conjugates:
            conjugates.append(cur)
            cur = (cur * self.p) % self.order
        poly = [FQ2_ONE]
        for c in conjugates:
            root = Fq2Elem(c)
            nxt = [FQ2_ZERO] * (len(poly) + 1)
            for i, coef in enumerate(poly):
                nxt[i + 1] = self.add(nxt[i + 1], coef)
                nxt[i] = self.add(nxt[i], self.mul(self.neg(root), coef))
            poly = nxt
        out = []
        for coef in poly:
            coords = self.element_coords(coef)
            assert not any(coords[1:]), "minimal polynomial left GF(p)"
            out.append(coords[0])
        return tuple(out)

    def __repr__(self) -> str:
        return (
            f"FieldContext(q={self.q}, p={self.p}, m={self.m}, "
            f"seed={self.spec.seed}, gamma=g^{self.gamma_exp_internal})"
        )


def build_field(spec: FieldSpec, *, q_limit: int = DEFAULT_Q_LIMIT) -> FieldContext:
    """Construct the tower for spec; see FieldContext for the contract."""
    return FieldContext(spec, q_limit=q_limit)
