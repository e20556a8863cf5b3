"""(theta, Theta)-cyclic codes of block length (r, s) over F_q x R.

A code is the left R[x; Theta]-submodule of
F_q[x; theta]/(x^r - 1) x R[x; Theta]/(x^s - 1) generated by (ell, 0) and
(s_poly, t) where t = k1 t1 + k2 t2 + k3 t3 + k4 t4.  Ring elements act on
pairs through r * (g, b) = (eta(r) g, r b).

Words are held in the "kappa model": a length r + 4s vector over F_q made of
the r field coordinates followed by the four kappa coordinates of each ring
coordinate.  Every code is an F_q-subspace of that model, which is what the
linear algebra in :mod:`skewcodec.linalg` works on.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Iterator, Sequence

import numpy as np

from . import linalg
from .errors import BudgetExceeded, ContextMismatch, NotADivisor, ShapeMismatch
from .gf import GF, field_from_spec
from .ring_r import RingR
from .skewpoly import (
    SkewPoly,
    SkewRing,
    assemble_kappa,
    exact_right_quotient,
    parse_poly,
    right_divides,
    sp_gcd_right,
)

DEFAULT_ENUM_BUDGET = 1 << 20


class CodeContext:
    """A field, the ring R over it, and the two skew polynomial rings for one automorphism power."""

    def __init__(self, field: GF, i: int = 1):
        self.field = field
        self.i = i
        self.ring = RingR(field)
        self.Fx = SkewRing(field, i)
        self.Rx = SkewRing(self.ring, i)

    @classmethod
    def from_spec(cls, spec: dict) -> "CodeContext":
        field, i = field_from_spec(spec)
        return cls(field, i)

    @property
    def order(self) -> int:
        return self.Fx.order

    @property
    def q(self) -> int:
        return self.field.q

    def fpoly(self, obj) -> SkewPoly:
        return parse_poly(self.Fx, obj)

    def to_spec(self) -> dict:
        F = self.field
        return {"p": F.p, "m": F.m, "modulus": list(F.modulus), "frobenius_power": self.i}

    def __eq__(self, other) -> bool:
        return isinstance(other, CodeContext) and self.field == other.field and self.i == other.i

    def __hash__(self) -> int:
        return hash((self.field, self.i))

    def __repr__(self) -> str:
        return f"CodeContext({self.field!r}, i={self.i})"


# ----------------------------------------------------------------------------
# words


@dataclass(frozen=True)
class MixedWord:
    """(g_0..g_{r-1} | b_0..b_{s-1}) with g_i in F_q and b_j in R (kappa tuples)."""

    g: tuple
    b: tuple

    @property
    def r(self) -> int:
        return len(self.g)

    @property
    def s(self) -> int:
        return len(self.b)

    def to_vector(self) -> np.ndarray:
        out = np.zeros(self.r + 4 * self.s, dtype=np.int64)
        out[: self.r] = self.g
        for j, bj in enumerate(self.b):
            out[self.r + 4 * j : self.r + 4 * j + 4] = bj
        return out

    @classmethod
    def from_vector(cls, r: int, s: int, vec) -> "MixedWord":
        vec = [int(c) for c in vec]
        if len(vec) != r + 4 * s:
            raise ShapeMismatch(f"expected {r + 4 * s} coordinates, got {len(vec)}")
        return cls(tuple(vec[:r]), tuple(tuple(vec[r + 4 * j : r + 4 * j + 4]) for j in range(s)))

    @classmethod
    def zero(cls, r: int, s: int) -> "MixedWord":
        return cls((0,) * r, ((0, 0, 0, 0),) * s)

    def polys(self, ctx: CodeContext) -> tuple[SkewPoly, SkewPoly]:
        return SkewPoly(ctx.Fx, self.g), SkewPoly(ctx.Rx, self.b)

    def is_zero(self) -> bool:
        return not any(self.g) and all(x == (0, 0, 0, 0) for x in self.b)


def _pad(coeffs: tuple, n: int, zero) -> tuple:
    return tuple(coeffs) + (zero,) * (n - len(coeffs))


def word_from_polys(ctx: CodeContext, r: int, s: int, g: SkewPoly, b: SkewPoly) -> MixedWord:
    """Reduce (g, b) modulo (x^r - 1, x^s - 1) and read off coefficients."""
    if g.ring != ctx.Fx or b.ring != ctx.Rx:
        raise ContextMismatch("word polynomials belong to a different context")
    gr = g.reduce_cyclic(r) if r else ctx.Fx.zero
    br = b.reduce_cyclic(s) if s else ctx.Rx.zero
    return MixedWord(_pad(gr.coeffs, r, 0), _pad(br.coeffs, s, ctx.ring.zero))


def rho(ctx: CodeContext, w: MixedWord) -> MixedWord:
    """The (theta, Theta)-cyclic shift: rotate each block right and apply the automorphism."""
    F, R = ctx.field, ctx.ring
    j = ctx.i
    g = tuple(F.frob(c, j) for c in (w.g[-1:] + w.g[:-1])) if w.r else ()
    b = tuple(R.frob(c, j) for c in (w.b[-1:] + w.b[:-1])) if w.s else ()
    return MixedWord(g, b)


def rho_rows(ctx: CodeContext, r: int, s: int, V: np.ndarray) -> np.ndarray:
    """rho applied to every row of a kappa-model matrix."""
    V = np.asarray(V, dtype=np.int64)
    out = np.empty_like(V)
    if r:
        out[:, :r] = np.roll(V[:, :r], 1, axis=1)
    if s:
        blocks = V[:, r:].reshape(V.shape[0], s, 4)
        out[:, r:] = np.roll(blocks, 1, axis=1).reshape(V.shape[0], 4 * s)
    return ctx.field.vfrob(out, ctx.i)


def kappa_rows(r: int, s: int, V: np.ndarray, j: int) -> np.ndarray:
    """k_{j+1} * word for every row: eta(k1) = 1 keeps the field block only for j = 0."""
    V = np.asarray(V, dtype=np.int64)
    out = np.zeros_like(V)
    if j == 0 and r:
        out[:, :r] = V[:, :r]
    if s:
        cols = r + 4 * np.arange(s) + j
        out[:, cols] = V[:, cols]
    return out


def star_mul(ctx: CodeContext, rp: SkewPoly, w: tuple[SkewPoly, SkewPoly], r: int, s: int) -> tuple[SkewPoly, SkewPoly]:
    """r(x) * (g(x), b(x)) = (eta(r) g mod x^r - 1, r b mod x^s - 1)."""
    g, b = w
    if rp.ring != ctx.Rx:
        raise ContextMismatch("multiplier must live in R[x; Theta]")
    eg = rp.eta() * g
    return (eg.reduce_cyclic(r) if r else ctx.Fx.zero, (rp * b).reduce_cyclic(s) if s else ctx.Rx.zero)


# ----------------------------------------------------------------------------
# codes


@dataclass
class MixedCode:
    ctx: CodeContext
    r: int
    s: int
    ell: SkewPoly
    s_poly: SkewPoly
    t: tuple  # (t1, t2, t3, t4) over F_q
    f: SkewPoly
    h: tuple  # (h1, h2, h3, h4)
    notes: list = dc_field(default_factory=list)
    constraints: dict = dc_field(default_factory=dict)

    @property
    def k(self) -> int:
        return _deg(self.f) + sum(_deg(h) for h in self.h)

    @property
    def n_gray(self) -> int:
        return self.r + 4 * self.s

    @property
    def t_ring(self) -> SkewPoly:
        return assemble_kappa(self.ctx.Rx, list(self.t))

    def satisfies_structure(self) -> bool:
        return all(self.constraints.values())

    def summary(self) -> dict:
        from .skewpoly import format_poly

        return {
            "q": self.ctx.q,
            "r": self.r,
            "s": self.s,
            "ell": format_poly(self.ell),
            "s_poly": format_poly(self.s_poly),
            "t": [format_poly(ti) for ti in self.t],
            "f": format_poly(self.f),
            "h": [format_poly(hi) for hi in self.h],
            "k": self.k,
            "constraints": dict(self.constraints),
            "notes": list(self.notes),
        }


def _deg(g: SkewPoly) -> int:
    return 0 if g.is_zero() else g.degree


def _normalize_generator(ctx: CodeContext, g: SkewPoly, n: int, name: str, notes: list) -> SkewPoly:
    if g.is_zero():
        # the zero generator spans nothing; it is the same as x^n - 1
        notes.append(f"{name} = 0 read as x^{n} - 1")
        return ctx.Fx.x_n_minus_1(n)
    if g.degree == 0:
        if g.coeffs[0] != 1:
            notes.append(f"{name} is a unit, replaced by 1")
        return ctx.Fx.one
    if not g.is_monic():
        notes.append(f"{name} left-normalised to monic")
        g = g.monic()
    return g


def build_mixed_code(
    ctx: CodeContext,
    r: int,
    s: int,
    ell,
    s_poly,
    t: Sequence | None,
) -> MixedCode:
    """Validate generators and compute the cofactors f, h_i.

    ``ell`` must right-divide x^r - 1 and each t_i must right-divide x^s - 1.
    ``s_poly`` is reduced modulo ``ell`` on the right.  The structural
    conditions deg s < deg ell and ell |_r h1 s are checked and recorded in
    ``constraints`` rather than enforced, so that printed examples violating
    them can still be inspected.
    """
    t = [0, 0, 0, 0] if t is None else t
    if len(t) != 4:
        raise ShapeMismatch("need exactly four t_i")
    if r < 0 or s < 0 or r + s == 0:
        raise ShapeMismatch("block lengths must be non-negative and not both zero")
    notes: list[str] = []
    s_poly = ctx.fpoly(s_poly) if s_poly is not None else ctx.Fx.zero
    if r:
        ell = _normalize_generator(ctx, ctx.fpoly(ell), r, "ell", notes)
        xr = ctx.Fx.x_n_minus_1(r)
        if not right_divides(ell, xr):
            raise NotADivisor(f"ell = {ell} does not right-divide x^{r} - 1", which="ell")
        f = exact_right_quotient(xr, ell)
    else:
        # no field block: only the ring part carries information
        ell, f, s_poly = ctx.Fx.one, ctx.Fx.zero, ctx.Fx.zero
    if s:
        ts = [_normalize_generator(ctx, ctx.fpoly(ti), s, f"t{j + 1}", notes) for j, ti in enumerate(t)]
        xs = ctx.Fx.x_n_minus_1(s)
        hs = []
        for j, tj in enumerate(ts):
            if not right_divides(tj, xs):
                raise NotADivisor(f"t{j + 1} = {tj} does not right-divide x^{s} - 1", which=f"t{j + 1}")
            hs.append(exact_right_quotient(xs, tj))
    else:
        ts, hs, s_poly = [ctx.Fx.one] * 4, [ctx.Fx.zero] * 4, ctx.Fx.zero

    if s_poly and ell.degree >= 0 and s_poly.degree >= ell.degree:
        s_poly = s_poly.rem_right(ell)
        notes.append("s_poly reduced modulo ell")
    constraints = {
        "deg_s_below_deg_ell": s_poly.is_zero() or s_poly.degree < ell.degree,
        "ell_divides_h1_s": (hs[0] * s_poly).reduce_cyclic(r).rem_right(ell).is_zero() if r and s else True,
    }
    return MixedCode(ctx, r, s, ell, s_poly, tuple(ts), f, tuple(hs), notes, constraints)


def code_from_spec(spec: dict) -> MixedCode:
    """Build from ``{"field": {...}, "r", "s", "ell", "s_poly", "t": [[..]x4]}``."""
    ctx = CodeContext.from_spec(spec["field"])
    return build_mixed_code(ctx, int(spec["r"]), int(spec["s"]), spec["ell"], spec.get("s_poly", []), spec["t"])


# ----------------------------------------------------------------------------
# generating sets


@dataclass
class GenSet:
    words: list
    labels: list  # (family, shift), family in 1..5

    def __len__(self) -> int:
        return len(self.words)

    def matrix(self, r: int, s: int) -> np.ndarray:
        if not self.words:
            return np.zeros((0, r + 4 * s), dtype=np.int64)
        return np.vstack([w.to_vector() for w in self.words])


def minimal_generating_set(code: MixedCode) -> GenSet:
    """Shifts of (ell, 0), (s, k1 t1) and (0, kj tj), in that order.

    Family 1 has deg f words, family 2 deg h1 and families 3-5 deg h_j.
    """
    ctx, r, s = code.ctx, code.r, code.s
    Fx, Rx, R = ctx.Fx, ctx.Rx, ctx.ring
    words, labels = [], []

    def emit(fam, i, g, b):
        words.append(word_from_polys(ctx, r, s, g, b))
        labels.append((fam, i))

    for i in range(_deg(code.f)):
        emit(1, i, Fx.monomial(i) * code.ell, Rx.zero)
    for j in range(4):
        comps = [Fx.zero] * 4
        comps[j] = code.t[j]
        tj = assemble_kappa(Rx, comps)
        for i in range(_deg(code.h[j])):
            xi_f = Fx.monomial(i)
            xi_r = Rx.monomial(i)
            g = xi_f * code.s_poly if j == 0 else Fx.zero
            emit(2 + j, i, g, xi_r * tj)
    return GenSet(words, labels)


def generator_pairs(code: MixedCode) -> list[tuple[SkewPoly, SkewPoly]]:
    """The two module generators (ell, 0) and (s, t)."""
    Rx = code.ctx.Rx
    return [(code.ell, Rx.zero), (code.s_poly, code.t_ring)]


def module_basis(code: MixedCode) -> np.ndarray:
    """F_q-basis (rref rows) of the submodule generated by the two generators.

    Computed by closing the span under kappa_j * and rho, independent of the
    generating-set bookkeeping; used as an oracle.
    """
    ctx, r, s = code.ctx, code.r, code.s
    F = ctx.field
    gens = np.vstack([word_from_polys(ctx, r, s, g, b).to_vector() for g, b in generator_pairs(code)])
    rows = np.vstack([kappa_rows(r, s, gens, j) for j in range(4)])
    basis, _ = linalg.rref(F, rows)
    while True:
        grown, _ = linalg.rref(F, np.vstack([basis, rho_rows(ctx, r, s, basis)]))
        if grown.shape[0] == basis.shape[0]:
            return grown
        basis = grown


def is_separable(code: MixedCode) -> bool:
    """ell right-divides s_poly (true for s_poly = 0)."""
    return code.s_poly.is_zero() or right_divides(code.ell, code.s_poly)


def punctured_parts(code: MixedCode) -> tuple[SkewPoly, tuple]:
    """Generators of the projections: gcd_r(ell, s) for the field block, (t1..t4) for the ring block."""
    gen_r = code.ell if code.s_poly.is_zero() else sp_gcd_right(code.ell, code.s_poly)
    return gen_r, tuple(code.t)


def enumerate_codewords(code: MixedCode, budget: int = DEFAULT_ENUM_BUDGET) -> Iterator[MixedWord]:
    """Every F_q-combination of the generating set, as words."""
    F = code.ctx.field
    gs = minimal_generating_set(code)
    k = len(gs)
    if F.q**k > budget:
        raise BudgetExceeded(f"q^k = {F.q}^{k} words exceed budget {budget}", partial={"k": k})
    G = gs.matrix(code.r, code.s)
    for combo in itertools.product(range(F.q), repeat=k):
        vec = np.zeros(code.n_gray, dtype=np.int64)
        for c, row in zip(combo, G):
            if c:
                vec = F.vadd(vec, F.vmul(c, row))
        yield MixedWord.from_vector(code.r, code.s, vec)


def cyclic_closure_ok(code: MixedCode) -> bool:
    """rho of every generating-set word stays in the span of the generating set."""
    ctx, r, s = code.ctx, code.r, code.s
    G = minimal_generating_set(code).matrix(r, s)
    if G.shape[0] == 0:
        return True
    return linalg.row_space_contains(ctx.field, G, rho_rows(ctx, r, s, G))
