"""The ring R = F_q + uF_q + vF_q + uvF_q with u^2 = u, v^2 = v, uv = vu.

Elements are stored in the idempotent basis: the tuple (n1, n2, n3, n4)
means k1*n1 + k2*n2 + k3*n3 + k4*n4 with

    k1 = 1 - u - v + uv,  k2 = u - uv,  k3 = v - uv,  k4 = uv.

The k_i are orthogonal idempotents summing to 1, so ring multiplication and
the automorphism Theta are both componentwise on these tuples.  The standard
coordinates (a0, a1, a2, a3) on the basis (1, u, v, uv) are an I/O view.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DivByZero, ParseError
from .gf import GF

RElement = tuple  # (n1, n2, n3, n4) of field codes


class RingR:
    """Arithmetic context for R over a given field."""

    def __init__(self, field: GF):
        self.field = field
        F = field
        self.zero = (0, 0, 0, 0)
        self.one = (1, 1, 1, 1)
        self.kappa = tuple(tuple(1 if j == i else 0 for j in range(4)) for i in range(4))
        self.u = self.from_uv(0, 1, 0, 0)
        self.v = self.from_uv(0, 0, 1, 0)
        self._F = F

    # -- coordinates ------------------------------------------------------------

    def from_uv(self, a0: int, a1: int, a2: int, a3: int) -> RElement:
        F = self.field
        n2 = F.add(a0, a1)
        n3 = F.add(a0, a2)
        n4 = F.add(F.add(n2, a2), a3)
        return (a0, n2, n3, n4)

    def to_uv(self, b: RElement) -> tuple[int, int, int, int]:
        F = self.field
        n1, n2, n3, n4 = b
        a1 = F.sub(n2, n1)
        a2 = F.sub(n3, n1)
        a3 = F.sub(F.sub(F.sub(n4, n1), a1), a2)
        return (n1, a1, a2, a3)

    def from_field(self, a: int) -> RElement:
        """Embed F_q as the scalars a*1."""
        return (a, a, a, a)

    def kappa_part(self, b: RElement, i: int) -> RElement:
        """k_i * b, i in 0..3."""
        return tuple(b[j] if j == i else 0 for j in range(4))

    # -- arithmetic -------------------------------------------------------------

    def add(self, a: RElement, b: RElement) -> RElement:
        F = self.field
        return (F.add(a[0], b[0]), F.add(a[1], b[1]), F.add(a[2], b[2]), F.add(a[3], b[3]))

    def sub(self, a: RElement, b: RElement) -> RElement:
        F = self.field
        return (F.sub(a[0], b[0]), F.sub(a[1], b[1]), F.sub(a[2], b[2]), F.sub(a[3], b[3]))

    def neg(self, a: RElement) -> RElement:
        F = self.field
        return (F.neg(a[0]), F.neg(a[1]), F.neg(a[2]), F.neg(a[3]))

    def mul(self, a: RElement, b: RElement) -> RElement:
        F = self.field
        return (F.mul(a[0], b[0]), F.mul(a[1], b[1]), F.mul(a[2], b[2]), F.mul(a[3], b[3]))

    def scale(self, c: int, b: RElement) -> RElement:
        """Scalar multiple c*b for c in F_q."""
        F = self.field
        return (F.mul(c, b[0]), F.mul(c, b[1]), F.mul(c, b[2]), F.mul(c, b[3]))

    def is_unit(self, a: RElement) -> bool:
        return all(a)

    def inv(self, a: RElement) -> RElement:
        if not self.is_unit(a):
            raise DivByZero(f"{self.fmt(a)} is not a unit of R")
        F = self.field
        return tuple(F.inv(x) for x in a)

    def frob(self, a: RElement, j: int) -> RElement:
        """Componentwise a -> a^(p^j); this is Theta^k when j = i*k."""
        F = self.field
        return (F.frob(a[0], j), F.frob(a[1], j), F.frob(a[2], j), F.frob(a[3], j))

    def eta(self, b: RElement) -> int:
        """The projection a0 + u a1 + v a2 + uv a3 -> a0, i.e. the k1 component."""
        return b[0]

    def from_int(self, n: int) -> RElement:
        return self.from_field(self.field.from_int(n))

    def sum(self, items: Iterable[RElement]) -> RElement:
        acc = self.zero
        for a in items:
            acc = self.add(acc, a)
        return acc

    # -- literals ---------------------------------------------------------------

    def parse(self, obj) -> RElement:
        """Accept {"kappa": [..4]}, {"uv": [..4]}, a 4-sequence (kappa) or a field literal."""
        F = self.field
        if isinstance(obj, dict):
            if "kappa" in obj:
                vals = [F.parse(x) for x in obj["kappa"]]
                if len(vals) != 4:
                    raise ParseError("kappa form needs four components")
                return tuple(vals)
            if "uv" in obj:
                vals = [F.parse(x) for x in obj["uv"]]
                if len(vals) != 4:
                    raise ParseError("uv form needs four components")
                return self.from_uv(*vals)
            raise ParseError(f"unrecognised ring element {obj!r}")
        if isinstance(obj, (list, tuple)):
            if len(obj) != 4:
                raise ParseError("ring element tuple needs four kappa components")
            return tuple(F.parse(x) for x in obj)
        return self.from_field(F.parse(obj))

    def fmt(self, b: RElement) -> str:
        F = self.field
        if b[0] == b[1] == b[2] == b[3]:
            return F.fmt(b[0])
        terms = [f"k{i + 1}*{F.fmt(c)}" if c != 1 else f"k{i + 1}" for i, c in enumerate(b) if c]
        return "(" + " + ".join(terms) + ")" if terms else "0"

    def to_json(self, b: RElement) -> dict:
        return {"kappa": [self.field.fmt(c) for c in b]}

    def __eq__(self, other) -> bool:
        return isinstance(other, RingR) and self.field == other.field

    def __hash__(self) -> int:
        return hash(("R", self.field))

    def __repr__(self) -> str:
        return f"RingR({self.field!r})"


def r_from_uv(ring: RingR, a0: int, a1: int, a2: int, a3: int) -> RElement:
    return ring.from_uv(a0, a1, a2, a3)


def uv_multiply(field: GF, a: Sequence[int], b: Sequence[int]) -> tuple[int, int, int, int]:
    """Product in (1, u, v, uv) coordinates using u^2 = u, v^2 = v, uv = vu.

    Independent of the idempotent decomposition; used to cross-check it.
    """
    F = field
    out = [0, 0, 0, 0]
    # basis index bitmask: bit0 = u, bit1 = v
    for i in range(4):
        for j in range(4):
            if a[i] and b[j]:
                k = i | j
                out[k] = F.add(out[k], F.mul(a[i], b[j]))
    return tuple(out)
