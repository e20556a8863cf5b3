"""Finite fields GF(p^m) with a user-chosen primitive modulus.

Elements are plain ints: the coordinate vector (c_0, ..., c_{m-1}) of
c_0 + c_1 w + ... + c_{m-1} w^{m-1} read as a base-p number.  With this
encoding the prime subfield elements 0..p-1 are their own codes, and the
primitive root w is the int ``p`` (or ``w^1`` whatever its code is when m = 1).

Multiplication, inversion and addition go through exp/log/Zech tables that
are built once per field, so every scalar operation is a few list lookups.
The same tables are exported as numpy arrays for vectorised row operations.
"""

from __future__ import annotations

import math
import re
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import DivByZero, FieldError, NotIrreducible, NotPrime, NotPrimitive, ParseError

MAX_ORDER = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _polymod_p(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a by monic b over F_p (ascending coefficient lists)."""
    a = list(a)
    db = len(b) - 1
    while len(a) - 1 >= db and any(a):
        while a and a[-1] % p == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        c = a[-1] % p
        shift = len(a) - 1 - db
        for j, bj in enumerate(b):
            a[shift + j] = (a[shift + j] - c * bj) % p
        a.pop()
    while a and a[-1] % p == 0:
        a.pop()
    return a


def _is_irreducible_p(modulus: Sequence[int], p: int) -> bool:
    m = len(modulus) - 1
    # trial division by every monic polynomial of degree 1..m//2
    for d in range(1, m // 2 + 1):
        for tail in range(p**d):
            cand = [(tail // p**j) % p for j in range(d)] + [1]
            if not _polymod_p(list(modulus), cand, p):
                return False
    return True


def _prime_factors(n: int) -> list[int]:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def _polymulmod_p(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    return _polymod_p(prod, mod, p)


def _is_primitive_p(modulus: Sequence[int], p: int) -> bool:
    """w has order p^m - 1 modulo an irreducible ``modulus``."""
    mod = list(modulus)
    n = p ** (len(mod) - 1) - 1
    for r in _prime_factors(n):
        e, acc, base = n // r, [1], [0, 1]
        while e:
            if e & 1:
                acc = _polymulmod_p(acc, base, mod, p)
            base = _polymulmod_p(base, base, mod, p)
            e >>= 1
        if acc == [1]:
            return False
    return True


def primitive_moduli(p: int, m: int) -> list[list[int]]:
    """All monic primitive polynomials of degree m over F_p, ascending coeffs.

    Enumerated in lexicographic order of the tail (c_0 + c_1 p + ...).  Used to
    recover moduli for fields whose defining polynomial is not printed.
    """
    out = []
    for tail in range(p**m):
        coeffs = [(tail // p**j) % p for j in range(m)] + [1]
        if coeffs[0] == 0:
            continue
        if m > 1 and not _is_irreducible_p(coeffs, p):
            continue
        if _is_primitive_p(coeffs, p):
            out.append(coeffs)
    return out


class GF:
    """The field F_q, q = p^m, presented as F_p[w]/(modulus(w)).

    ``modulus`` lists ascending coefficients c_0..c_m with c_m = 1 and must be
    primitive, i.e. w generates the multiplicative group.  All instances are
    immutable once built and may be shared freely.
    """

    _LITERAL = re.compile(r"^\s*(?:(?P<int>-?\d+)|(?:w|ω)(?:\s*\^\s*(?P<exp>-?\d+))?)\s*$")

    def __init__(self, p: int, m: int, modulus: Sequence[int]):
        if not is_prime(p) or p == 2:
            raise NotPrime(f"p={p} must be an odd prime")
        if m < 1:
            raise FieldError("extension degree must be >= 1")
        modulus = [int(c) % p for c in modulus]
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {m}: {modulus}")
        q = p**m
        if q > MAX_ORDER:
            raise FieldError(f"q={q} exceeds the supported maximum {MAX_ORDER}")
        if m > 1 and not _is_irreducible_p(modulus, p):
            raise NotIrreducible(f"{modulus} is reducible over F_{p}")
        if m == 1 and modulus[0] == 0 and p > 2:
            # w = 0 cannot be primitive
            raise NotPrimitive(f"{modulus}: root 0 is not primitive")
        self.p, self.m, self.q = p, m, q
        self.modulus = tuple(modulus)
        self._build_tables()

    # -- construction -----------------------------------------------------

    def _build_tables(self) -> None:
        p, m, q = self.p, self.m, self.q
        n = q - 1
        exp = [0] * (2 * n)
        log = [-1] * q
        vec = [1] + [0] * (m - 1)
        red = [(-c) % p for c in self.modulus[:-1]]  # w^m = -(c_0 + ... )
        for k in range(n):
            code = sum(c * p**j for j, c in enumerate(vec))
            if log[code] != -1:
                raise NotPrimitive(f"modulus {list(self.modulus)}: w has order {k} < {n}")
            exp[k] = code
            log[code] = k
            # multiply by w
            top = vec[-1]
            vec = [0] + vec[:-1]
            if top:
                vec = [(v + top * r) % p for v, r in zip(vec, red)]
        for k in range(n):
            exp[n + k] = exp[k]
        self._exp = exp
        self._log = log
        # Zech logarithm: w^zech[d] = 1 + w^d, -1 when that sum is zero
        plus1 = [c - c % p + (c % p + 1) % p for c in range(q)]
        self._zech = [log[plus1[exp[d]]] if plus1[exp[d]] else -1 for d in range(n)]
        self._neg = [
            sum(((-((c // p**j) % p)) % p) * p**j for j in range(m)) for c in range(q)
        ]
        # Frobenius a -> a^(p^j), j = 0..m-1
        self._frob = [
            [0] + [exp[(log[a] * p**j) % n] for a in range(1, q)] for j in range(m)
        ]

    # -- scalar arithmetic --------------------------------------------------

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    @property
    def order(self) -> int:
        return self.q

    def w(self, k: int = 1) -> int:
        """The element w^k."""
        return self._exp[k % (self.q - 1)]

    def log(self, a: int) -> int:
        if a == 0:
            raise DivByZero("log of zero")
        return self._log[a]

    def add(self, a: int, b: int) -> int:
        if a == 0:
            return b
        if b == 0:
            return a
        la = self._log[a]
        z = self._zech[(self._log[b] - la) % (self.q - 1)]
        return 0 if z < 0 else self._exp[la + z]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivByZero("inverse of zero")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivByZero("negative power of zero")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def frob(self, a: int, j: int) -> int:
        """a^(p^j); j is taken mod m."""
        return self._frob[j % self.m][a]

    def is_unit(self, a: int) -> bool:
        return a != 0

    def from_int(self, n: int) -> int:
        return int(n) % self.p

    def sum(self, items: Iterable[int]) -> int:
        acc = 0
        for a in items:
            acc = self.add(acc, a)
        return acc

    def elements(self) -> range:
        return range(self.q)

    # -- coordinate vectors -------------------------------------------------

    def to_vector(self, a: int) -> tuple[int, ...]:
        return tuple((a // self.p**j) % self.p for j in range(self.m))

    def from_vector(self, v: Sequence[int]) -> int:
        if len(v) != self.m:
            raise FieldError(f"expected {self.m} coordinates, got {len(v)}")
        return sum((int(c) % self.p) * self.p**j for j, c in enumerate(v))

    # -- literals -------------------------------------------------------------

    def parse(self, text: str | int) -> int:
        """Parse ``"0"``, an integer string, ``"w"`` or ``"w^k"``."""
        if isinstance(text, (int, np.integer)):
            return self.from_int(int(text))
        mo = self._LITERAL.match(str(text))
        if not mo:
            raise ParseError(f"bad field literal {text!r}")
        if mo.group("int") is not None:
            return self.from_int(int(mo.group("int")))
        return self.w(int(mo.group("exp") or 1))

    # when set, every element other than 0 and 1 prints as a power of w
    powers = False

    def fmt(self, a: int) -> str:
        """Prime-field elements print as digits, everything else as w^k."""
        if a < 2 or (a < self.p and not self.powers):
            return str(a)
        k = self._log[a]
        return "w" if k == 1 else f"w^{k}"

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.m}, modulus={list(self.modulus)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, GF) and (self.p, self.m, self.modulus) == (
            other.p,
            other.m,
            other.modulus,
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __reduce__(self):
        return (GF, (self.p, self.m, list(self.modulus)))

    # -- numpy views ----------------------------------------------------------

    @cached_property
    def exp_np(self) -> np.ndarray:
        return np.asarray(self._exp, dtype=np.int64)

    @cached_property
    def log_np(self) -> np.ndarray:
        lg = np.asarray(self._log, dtype=np.int64)
        lg[0] = 0  # masked out by callers
        return lg

    @cached_property
    def zech_np(self) -> np.ndarray:
        return np.asarray(self._zech, dtype=np.int64)

    @cached_property
    def neg_np(self) -> np.ndarray:
        return np.asarray(self._neg, dtype=np.int64)

    def vmul(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = self.exp_np[self.log_np[a] + self.log_np[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def vadd(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        la, lb = self.log_np[a], self.log_np[b]
        z = self.zech_np[(lb - la) % (self.q - 1)]
        out = np.where(z < 0, 0, self.exp_np[la + np.maximum(z, 0)])
        out = np.where(a == 0, b, out)
        return np.where(b == 0, a, out)

    def vneg(self, a) -> np.ndarray:
        return self.neg_np[np.asarray(a, dtype=np.int64)]

    def vsub(self, a, b) -> np.ndarray:
        return self.vadd(a, self.vneg(b))

    def vinv(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivByZero("inverse of zero")
        return self.exp_np[(-self.log_np[a]) % (self.q - 1)]

    def vfrob(self, a, j: int) -> np.ndarray:
        return np.asarray(self._frob[j % self.m], dtype=np.int64)[np.asarray(a, dtype=np.int64)]


class Frobenius:
    """The automorphism a -> a^(p^i) of a field, 1 <= i <= m."""

    def __init__(self, field: GF, i: int):
        if not 1 <= i <= field.m:
            raise FieldError(f"Frobenius power must lie in 1..{field.m}, got {i}")
        self.field = field
        self.i = i

    @property
    def order(self) -> int:
        return self.field.m // math.gcd(self.i, self.field.m)

    def __call__(self, a: int, k: int = 1) -> int:
        """Apply the automorphism k times."""
        return self.field.frob(a, self.i * k)

    def __repr__(self) -> str:
        return f"Frobenius(p^{self.i} on {self.field!r})"


def frobenius_apply(field: GF, i: int, a: int) -> int:
    return Frobenius(field, i)(a)


def field_new(p: int, m: int, modulus: Sequence[int]) -> GF:
    return GF(p, m, modulus)


def field_from_spec(spec: dict) -> tuple[GF, int]:
    """Build ``(field, frobenius_power)`` from ``{"p", "m", "modulus", "frobenius_power"}``."""
    field = GF(int(spec["p"]), int(spec["m"]), [int(c) for c in spec["modulus"]])
    return field, int(spec.get("frobenius_power", 1))
