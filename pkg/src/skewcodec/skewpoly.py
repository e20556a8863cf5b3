"""Skew polynomial rings A[x; sigma] over F_q or R.

Multiplication is twisted: (a x^i)(b x^j) = a sigma^i(b) x^(i+j), where sigma is
the Frobenius power a -> a^(p^i) acting on the coefficient ring.  Nothing here
assumes commutativity; right and left division, gcds and the least common left
multiple each come in the side the algebra needs.

Coefficient lists are always ascending: ``[c0, c1, ...]`` is c0 + c1 x + ....
"""

from __future__ import annotations

import itertools
import math
import re
from typing import Iterable, Iterator, Sequence

from .errors import (
    BothZero,
    BudgetExceeded,
    ContextMismatch,
    DivByZero,
    NonUnitLead,
    ParseError,
    ZeroInput,
)
from .gf import GF
from .ring_r import RingR

NEG_INF = -math.inf  # degree of the zero polynomial

DEFAULT_DIVISOR_BUDGET = 1 << 20


class SkewRing:
    """The ring base[x; sigma] with sigma = (a -> a^(p^i))."""

    def __init__(self, base: GF | RingR, i: int = 1):
        field = base if isinstance(base, GF) else base.field
        if not 1 <= i <= field.m:
            raise ValueError(f"automorphism power must lie in 1..{field.m}")
        self.base = base
        self.field = field
        self.i = i

    @property
    def order(self) -> int:
        """ord(sigma)."""
        return self.field.m // math.gcd(self.i, self.field.m)

    @property
    def over_ring(self) -> bool:
        return isinstance(self.base, RingR)

    def sigma(self, a, k: int = 1):
        return self.base.frob(a, self.i * k)

    def __call__(self, coeffs) -> "SkewPoly":
        return SkewPoly(self, coeffs)

    def parse(self, text) -> "SkewPoly":
        return parse_poly(self, text)

    @property
    def zero(self) -> "SkewPoly":
        return SkewPoly(self, ())

    @property
    def one(self) -> "SkewPoly":
        return SkewPoly(self, (self.base.one,))

    @property
    def x(self) -> "SkewPoly":
        return SkewPoly(self, (self.base.zero, self.base.one))

    def monomial(self, k: int, c=None) -> "SkewPoly":
        c = self.base.one if c is None else c
        return SkewPoly(self, (self.base.zero,) * k + (c,))

    def x_n_minus_1(self, n: int) -> "SkewPoly":
        b = self.base
        return SkewPoly(self, (b.neg(b.one),) + (b.zero,) * (n - 1) + (b.one,))

    def is_central_modulus(self, n: int) -> bool:
        return sp_is_central_modulus(n, self.order)

    def __eq__(self, other) -> bool:
        return isinstance(other, SkewRing) and self.base == other.base and self.i == other.i

    def __hash__(self) -> int:
        return hash((self.base, self.i))

    def __repr__(self) -> str:
        name = "R" if self.over_ring else f"F_{self.field.q}"
        return f"{name}[x; a->a^({self.field.p}^{self.i})]"


class SkewPoly:
    """An immutable skew polynomial.  Trailing zero coefficients are stripped."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: SkewRing, coeffs: Iterable):
        zero = ring.base.zero
        cs = list(coeffs)
        while cs and cs[-1] == zero:
            cs.pop()
        self.ring = ring
        self.coeffs = tuple(cs)

    # -- basic properties -----------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self):
        if not self.coeffs:
            raise ZeroInput("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.ring.base.zero

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ring.base.one

    def _check(self, other: "SkewPoly") -> None:
        if not isinstance(other, SkewPoly):
            raise TypeError(f"expected SkewPoly, got {type(other).__name__}")
        if other.ring != self.ring:
            raise ContextMismatch(f"{self.ring!r} vs {other.ring!r}")

    def __eq__(self, other) -> bool:
        return isinstance(other, SkewPoly) and self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ring, self.coeffs))

    # -- ring operations ---------------------------------------------------------

    def __add__(self, other: "SkewPoly") -> "SkewPoly":
        self._check(other)
        b = self.ring.base
        a, c = self.coeffs, other.coeffs
        if len(a) < len(c):
            a, c = c, a
        out = list(a)
        for k, v in enumerate(c):
            out[k] = b.add(out[k], v)
        return SkewPoly(self.ring, out)

    def __neg__(self) -> "SkewPoly":
        b = self.ring.base
        return SkewPoly(self.ring, [b.neg(c) for c in self.coeffs])

    def __sub__(self, other: "SkewPoly") -> "SkewPoly":
        return self + (-other)

    def __mul__(self, other: "SkewPoly") -> "SkewPoly":
        self._check(other)
        ring = self.ring
        b = ring.base
        if not self.coeffs or not other.coeffs:
            return ring.zero
        out = [b.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == b.zero:
                continue
            for j, c in enumerate(other.coeffs):
                if c == b.zero:
                    continue
                out[i + j] = b.add(out[i + j], b.mul(a, ring.sigma(c, i)))
        return SkewPoly(ring, out)

    def scale_left(self, c) -> "SkewPoly":
        """The product c * self for a constant c."""
        b = self.ring.base
        return SkewPoly(self.ring, [b.mul(c, a) for a in self.coeffs])

    def scale_right(self, c) -> "SkewPoly":
        """The product self * c for a constant c (twists c by sigma^k at x^k)."""
        ring = self.ring
        b = ring.base
        return SkewPoly(ring, [b.mul(a, ring.sigma(c, k)) for k, a in enumerate(self.coeffs)])

    def shift(self, k: int) -> "SkewPoly":
        """self * x^k (no twist on coefficients when multiplying by x on the right)."""
        b = self.ring.base
        return SkewPoly(self.ring, (b.zero,) * k + self.coeffs) if self.coeffs else self

    def __pow__(self, e: int) -> "SkewPoly":
        out = self.ring.one
        for _ in range(e):
            out = out * self
        return out

    # -- division ------------------------------------------------------------------

    def _lead_inverse(self):
        if not self.coeffs:
            raise DivByZero("division by the zero polynomial")
        b = self.ring.base
        lead = self.coeffs[-1]
        if not b.is_unit(lead):
            raise NonUnitLead(f"leading coefficient {b.fmt(lead)} is not a unit")
        return b.inv(lead)

    def divmod_right(self, a: "SkewPoly") -> tuple["SkewPoly", "SkewPoly"]:
        """(quot, rem) with self = quot * a + rem, deg rem < deg a."""
        self._check(a)
        return sp_divmod_right(self, a)

    def divmod_left(self, a: "SkewPoly") -> tuple["SkewPoly", "SkewPoly"]:
        """(quot, rem) with self = a * quot + rem, deg rem < deg a."""
        self._check(a)
        return sp_divmod_left(self, a)

    def rem_right(self, a: "SkewPoly") -> "SkewPoly":
        return self.divmod_right(a)[1]

    def rem_left(self, a: "SkewPoly") -> "SkewPoly":
        return self.divmod_left(a)[1]

    def reduce_cyclic(self, n: int) -> "SkewPoly":
        """Right remainder modulo x^n - 1: exponents fold mod n with no twist."""
        b = self.ring.base
        out = [b.zero] * n
        for k, c in enumerate(self.coeffs):
            out[k % n] = b.add(out[k % n], c)
        return SkewPoly(self.ring, out)

    # -- transforms ------------------------------------------------------------------

    def monic(self) -> "SkewPoly":
        """Left-normalise: lead^-1 * self.  Generates the same left ideal."""
        return self.scale_left(self._lead_inverse())

    def monic_right(self) -> "SkewPoly":
        """Right-normalise: self * c with lead 1.  Generates the same right ideal."""
        ring = self.ring
        inv = self._lead_inverse()
        return self.scale_right(ring.sigma(inv, -self.degree))

    def psi(self, k: int) -> "SkewPoly":
        """Apply sigma^k to every coefficient."""
        ring = self.ring
        return SkewPoly(ring, [ring.sigma(c, k) for c in self.coeffs])

    def reciprocal(self) -> "SkewPoly":
        return sp_reciprocal(self)

    def kappa_component(self, j: int) -> "SkewPoly":
        """For a polynomial over R, its k_{j+1} component as a polynomial over F_q."""
        if not self.ring.over_ring:
            raise ContextMismatch("kappa components only exist over R")
        fr = SkewRing(self.ring.field, self.ring.i)
        return SkewPoly(fr, [c[j] for c in self.coeffs])

    def eta(self) -> "SkewPoly":
        """Coefficientwise projection R[x] -> F_q[x] (the k1 component)."""
        return self.kappa_component(0)

    # -- presentation ------------------------------------------------------------------

    def __repr__(self) -> str:
        return f"SkewPoly({format_poly(self)!r} over {self.ring!r})"

    def __str__(self) -> str:
        return format_poly(self)


# ----------------------------------------------------------------------------
# free functions named after the operations they implement


def sp_mul(a: SkewPoly, b: SkewPoly) -> SkewPoly:
    return a * b


def sp_divmod_right(c: SkewPoly, a: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    ring = c.ring
    b = ring.base
    inv = a._lead_inverse()
    d = len(a.coeffs) - 1
    rem = list(c.coeffs)
    quot = [b.zero] * max(len(rem) - d, 0)
    acoef = a.coeffs
    for n in range(len(rem) - 1, d - 1, -1):
        cn = rem[n]
        if cn == b.zero:
            continue
        k = n - d
        # t x^k * a has leading coefficient t * sigma^k(a_d)
        t = b.mul(cn, ring.sigma(inv, k))
        quot[k] = t
        for j, aj in enumerate(acoef):
            if aj != b.zero:
                rem[k + j] = b.sub(rem[k + j], b.mul(t, ring.sigma(aj, k)))
    return SkewPoly(ring, quot), SkewPoly(ring, rem[:d] if d >= 0 else rem)


def sp_divmod_left(c: SkewPoly, a: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    ring = c.ring
    b = ring.base
    inv = a._lead_inverse()
    d = len(a.coeffs) - 1
    rem = list(c.coeffs)
    quot = [b.zero] * max(len(rem) - d, 0)
    acoef = a.coeffs
    for n in range(len(rem) - 1, d - 1, -1):
        cn = rem[n]
        if cn == b.zero:
            continue
        k = n - d
        # a * t x^k has leading coefficient a_d * sigma^d(t)
        t = ring.sigma(b.mul(inv, cn), -d)
        quot[k] = t
        for j, aj in enumerate(acoef):
            if aj != b.zero:
                rem[k + j] = b.sub(rem[k + j], b.mul(aj, ring.sigma(t, j)))
    return SkewPoly(ring, quot), SkewPoly(ring, rem[:d])


def right_divides(a: SkewPoly, c: SkewPoly) -> bool:
    """a |_r c, i.e. c = q * a."""
    return c.rem_right(a).is_zero()


def left_divides(a: SkewPoly, c: SkewPoly) -> bool:
    """a |_l c, i.e. c = a * q."""
    return c.rem_left(a).is_zero()


def exact_right_quotient(c: SkewPoly, a: SkewPoly) -> SkewPoly:
    """The left cofactor q with c = q * a; raises if a does not right-divide c."""
    from .errors import NotADivisor

    quot, rem = c.divmod_right(a)
    if rem:
        raise NotADivisor(f"{a} does not right-divide {c} (remainder {rem})")
    return quot


def exact_left_quotient(c: SkewPoly, a: SkewPoly) -> SkewPoly:
    """The right cofactor q with c = a * q."""
    from .errors import NotADivisor

    quot, rem = c.divmod_left(a)
    if rem:
        raise NotADivisor(f"{a} does not left-divide {c} (remainder {rem})")
    return quot


def sp_gcd_right(a: SkewPoly, b: SkewPoly) -> SkewPoly:
    """Monic greatest common right divisor."""
    a._check(b)
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd of two zero polynomials")
    while b:
        a, b = b, a.rem_right(b)
    return a.monic()


def sp_gcd_left(a: SkewPoly, b: SkewPoly) -> SkewPoly:
    """Monic greatest common left divisor."""
    a._check(b)
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd of two zero polynomials")
    while b:
        a, b = b, a.rem_left(b)
    return a.monic_right()


def sp_xgcd_right(a: SkewPoly, b: SkewPoly):
    """Extended right Euclid.

    Returns ``(g, u, v, u1, v1)`` with g = u*a + v*b the (unnormalised) right
    gcd and u1*a + v1*b = 0, where u1*a is a least common left multiple.
    """
    a._check(b)
    ring = a.ring
    r0, r1 = a, b
    u0, v0, u1, v1 = ring.one, ring.zero, ring.zero, ring.one
    while r1:
        qt, r2 = r0.divmod_right(r1)
        r0, r1 = r1, r2
        u0, u1 = u1, u0 - qt * u1
        v0, v1 = v1, v0 - qt * v1
    return r0, u0, v0, u1, v1


def sp_lcm_left(a: SkewPoly, b: SkewPoly) -> SkewPoly:
    """Monic least common left multiple: the generator of R a  intersect  R b.

    Both inputs right-divide the result and its degree obeys
    deg = deg a + deg b - deg gcd_r(a, b).
    """
    a._check(b)
    if a.is_zero() or b.is_zero():
        raise ZeroInput("lcm with the zero polynomial")
    _, _, _, u1, _ = sp_xgcd_right(a, b)
    return (u1 * a).monic()


def sp_reciprocal(g: SkewPoly) -> SkewPoly:
    """g^dagger(x) = sum_i sigma^i(g_{t-i}) x^i with t = deg g."""
    if g.is_zero():
        raise ZeroInput("reciprocal of the zero polynomial")
    ring = g.ring
    t = len(g.coeffs) - 1
    return SkewPoly(ring, [ring.sigma(g.coeffs[t - i], i) for i in range(t + 1)])


def sp_psi(g: SkewPoly, k: int) -> SkewPoly:
    return g.psi(k)


def sp_is_central_modulus(n: int, sigma_order: int) -> bool:
    """x^n - 1 is central (two-sided ideal) iff ord(sigma) divides n."""
    if n < 1:
        raise ValueError("length must be >= 1")
    return n % sigma_order == 0


def iter_monic(ring: SkewRing, d: int) -> Iterator[SkewPoly]:
    """All monic degree-d polynomials over a field, lexicographic in (c0, ..., c_{d-1})."""
    q = ring.field.q
    for tail in itertools.product(range(q), repeat=d):
        yield SkewPoly(ring, tail + (1,))


def sp_right_divisors(ring: SkewRing, n: int, d: int, budget: int = DEFAULT_DIVISOR_BUDGET) -> list[SkewPoly]:
    """Every monic degree-d right divisor of x^n - 1 in F_q[x; sigma]."""
    if ring.over_ring:
        raise ContextMismatch("divisor enumeration is only supported over F_q")
    if d < 0 or d > n:
        return []
    if ring.field.q**d > budget:
        raise BudgetExceeded(f"q^d = {ring.field.q}^{d} candidates exceed budget {budget}")
    target = ring.x_n_minus_1(n)
    return [g for g in iter_monic(ring, d) if right_divides(g, target)]


# ----------------------------------------------------------------------------
# printing and parsing


def _fmt_coeff(ring: SkewRing, c) -> str:
    return ring.base.fmt(c)


def format_poly(g: SkewPoly) -> str:
    """Descending-degree text, e.g. ``x^2 + w^3*x + 2``; re-parses via parse_poly."""
    ring = g.ring
    if g.is_zero():
        return "0"
    if ring.over_ring:
        parts = []
        for j in range(4):
            comp = g.kappa_component(j)
            if comp:
                parts.append(f"k{j + 1}*({format_poly(comp)})")
        return " + ".join(parts)
    b = ring.base
    terms = []
    for k in range(len(g.coeffs) - 1, -1, -1):
        c = g.coeffs[k]
        if c == b.zero:
            continue
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        cs = _fmt_coeff(ring, c)
        if not mono:
            terms.append(cs)
        elif c == b.one:
            terms.append(mono)
        else:
            terms.append(f"{cs}*{mono}")
    return " + ".join(terms)


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coef>(?:w|ω)(?:\^-?\d+)?|\d+)\s*\*?\s*)?
        (?P<x>x(?:\^(?P<exp>\d+))?)?\s*""",
    re.VERBOSE,
)


def parse_poly(ring: SkewRing, text) -> SkewPoly:
    """Parse ascending coefficient lists or ``a*x^k + ...`` text over F_q.

    Over R, accepts ``{"kappa": [p1, p2, p3, p4]}`` with each component any form
    accepted over F_q.
    """
    if isinstance(text, SkewPoly):
        return text
    if ring.over_ring:
        fr = SkewRing(ring.field, ring.i)
        if isinstance(text, dict) and "kappa" in text:
            comps = [parse_poly(fr, t) for t in text["kappa"]]
            if len(comps) != 4:
                raise ParseError("kappa form needs four component polynomials")
            return assemble_kappa(ring, comps)
        return embed_field_poly(ring, parse_poly(fr, text))
    F = ring.base
    if isinstance(text, (list, tuple)):
        return SkewPoly(ring, [F.parse(c) for c in text])
    s = str(text).strip()
    if not s:
        raise ParseError("empty polynomial", 0)
    coeffs: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        mo = _TERM.match(s, pos)
        if not mo or mo.end() == pos or (not mo.group("coef") and not mo.group("x")):
            raise ParseError(f"cannot parse polynomial {s!r}", pos)
        if not first and not mo.group("sign"):
            raise ParseError(f"expected '+' or '-' in {s!r}", pos)
        first = False
        c = F.parse(mo.group("coef")) if mo.group("coef") else F.one
        if mo.group("sign") == "-":
            c = F.neg(c)
        k = 0
        if mo.group("x"):
            k = int(mo.group("exp")) if mo.group("exp") else 1
        coeffs[k] = F.add(coeffs.get(k, 0), c)
        pos = mo.end()
    top = max(coeffs) if coeffs else -1
    return SkewPoly(ring, [coeffs.get(k, 0) for k in range(top + 1)])


def embed_field_poly(ring: SkewRing, g: SkewPoly) -> SkewPoly:
    """F_q[x; theta] -> R[x; Theta] via the scalar embedding a -> a*1."""
    R = ring.base
    return SkewPoly(ring, [R.from_field(c) for c in g.coeffs])


def assemble_kappa(ring: SkewRing, comps: Sequence[SkewPoly]) -> SkewPoly:
    """k1 p1 + k2 p2 + k3 p3 + k4 p4 as a polynomial over R."""
    n = max((len(c.coeffs) for c in comps), default=0)
    return SkewPoly(ring, [tuple(c.coeff(k) for c in comps) for k in range(n)])
