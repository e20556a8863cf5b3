"""Duals of (theta, Theta)-cyclic codes.

The inner product on F_q^r x R^s is <w, w'> = k1 * sum g_i g'_i + sum b_j b'_j.
In the kappa model it splits into four F_q bilinear forms: component 1 pairs
the field block together with the k1 coordinates, component j pairs only the
kj coordinates.  A word is in the dual when all four vanish against every
codeword, which is what :func:`dual_oracle` solves directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from . import linalg
from .errors import ContextMismatch, DenominatorNotDivisor, OracleMismatch, OrderMismatch, ShapeMismatch
from .mixedcode import (
    CodeContext,
    MixedCode,
    MixedWord,
    _deg,
    build_mixed_code,
    is_separable,
    module_basis,
    punctured_parts,
)
from .ring_r import RElement
from .skewpoly import (
    SkewPoly,
    assemble_kappa,
    exact_right_quotient,
    format_poly,
    right_divides,
    sp_gcd_left,
    sp_gcd_right,
    sp_xgcd_right,
)


def mixed_inner_product(ctx: CodeContext, w: MixedWord, w2: MixedWord) -> RElement:
    if w.r != w2.r or w.s != w2.s:
        raise ShapeMismatch(f"words of shape ({w.r},{w.s}) and ({w2.r},{w2.s})")
    F, R = ctx.field, ctx.ring
    field_part = F.sum(F.mul(a, b) for a, b in zip(w.g, w2.g))
    out = R.scale(field_part, R.kappa_part(R.one, 0))
    for a, b in zip(w.b, w2.b):
        out = R.add(out, R.mul(a, b))
    return out


def gamma(ring, n: int, step: int = 1) -> SkewPoly:
    """Gamma_n(x^step) = sum_{i<n} x^(i*step)."""
    return SkewPoly(ring, [ring.base.one if k % step == 0 else ring.base.zero for k in range((n - 1) * step + 1)])


@dataclass
class DualContext:
    ctx: CodeContext
    r: int
    s: int

    def __post_init__(self):
        o = self.ctx.order
        if self.r % o or self.s % o:
            raise OrderMismatch(f"ord(theta) = {o} must divide r = {self.r} and s = {self.s}")

    @property
    def m(self) -> int:
        # r*s; with an empty block the other length already has every needed property
        return self.r * self.s if self.r and self.s else max(self.r, self.s)

    @property
    def gamma_r(self) -> SkewPoly:
        return gamma(self.ctx.Rx, self.m // self.r, self.r)

    @property
    def gamma_s(self) -> SkewPoly:
        return gamma(self.ctx.Rx, self.m // self.s, self.s)


def _twisted_reciprocal(g: SkewPoly, m: int) -> SkewPoly:
    """Psi^(m - deg g)(g^dagger)."""
    return g.reciprocal().psi(m - g.degree)


def bilinear_o(dctx: DualContext, d: tuple[SkewPoly, SkewPoly], d2: tuple[SkewPoly, SkewPoly]) -> SkewPoly:
    """The polynomial pairing whose vanishing mod x^m - 1 encodes orthogonality to all shifts."""
    ctx, m = dctx.ctx, dctx.m
    Rx = ctx.Rx
    g, b = d
    g2, b2 = d2
    if g.ring != ctx.Fx or g2.ring != ctx.Fx or b.ring != Rx or b2.ring != Rx:
        raise ContextMismatch("o expects (F_q[x], R[x]) pairs from one context")
    out = Rx.zero
    if dctx.r and g and g2:
        prod = g * _twisted_reciprocal(g2, m)
        field_term = assemble_kappa(Rx, [prod, *[ctx.Fx.zero] * 3])
        out = out + field_term * Rx.monomial(m - 1 - g2.degree) * dctx.gamma_r
    if dctx.s and b and b2:
        out = out + b * _twisted_reciprocal(b2, m) * Rx.monomial(m - 1 - b2.degree) * dctx.gamma_s
    return out.reduce_cyclic(m)


def _form_rows(r: int, s: int, V: np.ndarray) -> np.ndarray:
    """Rows of the four kappa-component forms for every word in V."""
    V = np.asarray(V, dtype=np.int64)
    blocks = []
    for j in range(4):
        out = np.zeros_like(V)
        if j == 0 and r:
            out[:, :r] = V[:, :r]
        if s:
            cols = r + 4 * np.arange(s) + j
            out[:, cols] = V[:, cols]
        blocks.append(out)
    return np.vstack(blocks) if V.size else V


def dual_oracle(code: MixedCode) -> np.ndarray:
    """F_q-basis (rref rows) of the dual as a subspace of the kappa model."""
    F = code.ctx.field
    n = code.n_gray
    B = module_basis(code)
    if B.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    N = linalg.nullspace(F, _form_rows(code.r, code.s, B), n)
    if N.shape[0] == 0:
        return N
    return linalg.rref(F, N)[0]


@dataclass
class DualGens:
    ell_bar: SkewPoly
    s_bar: SkewPoly
    t_bar: tuple
    provenance: dict
    notes: list = dc_field(default_factory=list)

    def degrees(self) -> dict:
        return {"ell_bar": _deg(self.ell_bar), "t_bar": [_deg(t) for t in self.t_bar]}

    def to_json(self) -> dict:
        return {
            "ell_bar": format_poly(self.ell_bar),
            "s_bar": format_poly(self.s_bar),
            "t_bar": [format_poly(t) for t in self.t_bar],
            "degrees": self.degrees(),
            "provenance": dict(self.provenance),
            "notes": list(self.notes),
        }


def _quotient(num: SkewPoly, den: SkewPoly, what: str) -> SkewPoly:
    if not right_divides(den, num):
        raise DenominatorNotDivisor(f"{what}: {format_poly(den)} does not right-divide {format_poly(num)}")
    return exact_right_quotient(num, den).monic()


def _lclm_cofactor(ell: SkewPoly, s_poly: SkewPoly) -> SkewPoly:
    """a with a*s = b*ell the least common left multiple (a = 1 when s = 0)."""
    if s_poly.is_zero():
        return ell.ring.one
    _, _, _, u1, _ = sp_xgcd_right(s_poly, ell)
    return u1.monic()


def dual_generators(code: MixedCode, validate: bool = True) -> DualGens:
    """Generator polynomials of the dual, each checked against :func:`dual_oracle`."""
    ctx, r, s = code.ctx, code.r, code.s
    dctx = DualContext(ctx, r, s)
    m = dctx.m
    Fx = ctx.Fx
    notes = []
    prov = {}

    if r:
        den = _twisted_reciprocal(code.ell, m)
        if code.s_poly:
            den = sp_gcd_left(den, _twisted_reciprocal(code.s_poly, m))
        ell_bar = _quotient(Fx.x_n_minus_1(r), den, "ell_bar")
    else:
        ell_bar = Fx.one
    prov["ell_bar"] = "formula"

    t_bar = []
    if s:
        xs = Fx.x_n_minus_1(s)
        # k1 part of D meeting {0} x R^s is generated by gcd_r(a t1, x^s - 1), a*s = lclm(s, ell)
        a = _lclm_cofactor(code.ell, code.s_poly) if r else Fx.one
        w = sp_gcd_right(a * code.t[0], xs)
        if _deg(w) != _deg(a) + _deg(code.t[0]):
            notes.append("a*t1 does not right-divide x^s - 1; its right gcd with x^s - 1 is used")
        t_bar.append(_quotient(xs, _twisted_reciprocal(w, m), "t1_bar"))
        for j in range(1, 4):
            t_bar.append(_quotient(xs, _twisted_reciprocal(code.t[j], m), f"t{j + 1}_bar"))
        prov.update({f"t{j + 1}_bar": "formula" for j in range(4)})
    else:
        t_bar = [Fx.one] * 4

    s_bar = Fx.zero
    prov["s_bar"] = "formula"
    oracle = None
    if r and s and not is_separable(code):
        oracle = dual_oracle(code)
        s_bar = _s_bar_from_oracle(code, oracle, t_bar)
        prov["s_bar"] = "oracle"
        notes.append("s_bar solved from the oracle dual")

    out = DualGens(ell_bar, s_bar, tuple(t_bar), prov, notes)
    if validate:
        if oracle is None:
            oracle = dual_oracle(code)
        got = module_basis(dual_code(code, out))
        if not linalg.same_row_space(ctx.field, got, oracle):
            raise OracleMismatch(
                f"formula dual has dimension {got.shape[0]}, oracle dual has {oracle.shape[0]}"
            )
    return out


def _s_bar_from_oracle(code: MixedCode, oracle: np.ndarray, t_bar: list) -> SkewPoly:
    """A dual word whose ring block is k1 t1_bar + ... ; its field block is s_bar."""
    ctx, r, s = code.ctx, code.r, code.s
    target = assemble_kappa(ctx.Rx, t_bar).reduce_cyclic(s)
    tv = np.zeros(4 * s, dtype=np.int64)
    for k, c in enumerate(target.coeffs):
        tv[4 * k : 4 * k + 4] = c
    coeffs = linalg.solve_left(ctx.field, oracle[:, r:], tv)
    if coeffs is None:
        raise OracleMismatch("no dual word carries the formula's ring generator")
    word = linalg.matmul(ctx.field, coeffs.reshape(1, -1), oracle)[0]
    return SkewPoly(ctx.Fx, [int(c) for c in word[:r]])


def dual_code(code: MixedCode, gens: DualGens) -> MixedCode:
    ctx = code.ctx
    s_bar = gens.s_bar
    if code.r and s_bar:
        s_bar = s_bar.rem_right(gens.ell_bar) if gens.ell_bar.degree > 0 else ctx.Fx.zero
    return build_mixed_code(ctx, code.r, code.s, gens.ell_bar, s_bar, list(gens.t_bar))


def dual_cardinalities(code: MixedCode) -> dict:
    """log_q of the sixteen cardinalities tied to the code and its dual."""
    r, s = code.r, code.s
    gen_r, t = punctured_parts(code)
    dg = _deg(gen_r) if r else 0
    dl = _deg(code.ell) if r else 0
    dt = [_deg(ti) if s else 0 for ti in t]
    if not s:
        dt = [0, 0, 0, 0]
    return {
        "C_r": r - dg,
        "C_s": 4 * s - sum(dt),
        **{f"k{j + 1}C_s": s - dt[j] for j in range(4)},
        "C_r_perp": dg,
        "C_s_perp": sum(dt),
        "dual_r": dl,
        "dual_s": sum(dt) + dl - dg,
        **{f"k{j + 1}C_s_perp": dt[j] for j in range(4)},
        "k1_dual_s": dt[0] + dl - dg,
        **{f"k{j + 1}_dual_s": dt[j] for j in range(1, 4)},
    }


def degree_law_holds(code: MixedCode, gens: DualGens) -> bool:
    """deg ell_bar = r - deg gcd_r(ell, s) and deg tj_bar = s - deg tj for j = 2, 3, 4."""
    r, s = code.r, code.s
    gen_r, _ = punctured_parts(code)
    ok = (not r) or _deg(gens.ell_bar) == r - _deg(gen_r)
    if s:
        ok = ok and all(_deg(gens.t_bar[j]) == s - _deg(code.t[j]) for j in range(1, 4))
    return ok
