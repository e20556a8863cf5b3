"""Dual-containing tests, the CSS construction and the quantum Singleton bound."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BoundViolated, NegativeLogicalDim, NotDualContaining, NotSeparable, OrderMismatch
from .mixedcode import CodeContext, MixedCode, is_separable
from .skewpoly import SkewPoly, exact_right_quotient, right_divides


@dataclass
class ContainmentResult:
    holds: bool
    product: SkewPoly  # c^dagger * c for the check polynomial c
    cofactor: SkewPoly | None  # the left cofactor of x^n - 1 when it divides

    def __bool__(self) -> bool:
        return self.holds


def _require_central(ctx: CodeContext, n: int, what: str) -> None:
    if n % ctx.order:
        raise OrderMismatch(f"ord(theta) = {ctx.order} does not divide {what} = {n}")


def reciprocal_test(ctx: CodeContext, n: int, check: SkewPoly) -> ContainmentResult:
    """Does x^n - 1 right-divide check^dagger * check?"""
    prod = check.reciprocal() * check
    xn = ctx.Fx.x_n_minus_1(n)
    if right_divides(xn, prod):
        return ContainmentResult(True, prod, exact_right_quotient(prod, xn))
    return ContainmentResult(False, prod, None)


def dual_containing_theta(ctx: CodeContext, r: int, ell) -> ContainmentResult:
    """<ell>^perp is inside <ell> iff x^r - 1 right-divides f^dagger f, x^r - 1 = f ell."""
    _require_central(ctx, r, "r")
    ell = ctx.fpoly(ell)
    f = exact_right_quotient(ctx.Fx.x_n_minus_1(r), ell)
    return reciprocal_test(ctx, r, f)


def dual_containing_theta_big(ctx: CodeContext, s: int, t) -> tuple[bool, list[ContainmentResult]]:
    """The same test for each h_i with x^s - 1 = h_i t_i; all four must pass."""
    _require_central(ctx, s, "s")
    xs = ctx.Fx.x_n_minus_1(s)
    results = [reciprocal_test(ctx, s, exact_right_quotient(xs, ctx.fpoly(ti))) for ti in t]
    return all(results), results


def dual_containing_mixed(code: MixedCode) -> bool:
    """Both punctured codes contain their duals (separable codes only)."""
    if not is_separable(code):
        raise NotSeparable("the dual-containing criterion needs a separable code")
    ctx = code.ctx
    ok = True
    if code.r:
        ok = ok and bool(dual_containing_theta(ctx, code.r, code.ell))
    if code.s:
        ok = ok and dual_containing_theta_big(ctx, code.s, code.t)[0]
    return ok


@dataclass
class QeccParams:
    n: int
    k: int
    d: int | None
    q: int
    d_range: tuple | None = None
    source: str = ""

    @property
    def defect(self) -> int | None:
        if self.d is None:
            return None
        return self.n - self.k + 2 - 2 * self.d

    @property
    def mds(self) -> bool:
        return self.d is not None and self.defect == 0

    def __str__(self) -> str:
        d = self.d if self.d is not None else f"{self.d_range[0]}..{self.d_range[1]}"
        return f"[[{self.n},{self.k},{d}]]_{self.q}"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "q": self.q,
            "mds": self.mds,
            "defect": self.defect,
            "source": self.source,
        }


def css(n: int, k: int, d, q: int, dual_containing: bool, source: str = "") -> QeccParams:
    """[[n, 2k - n, d]]_q from a dual-containing [n, k, d]_q code.

    ``d`` may be an int or a (lower, upper) pair when only bounds are known;
    the result is then not classified as MDS.
    """
    if not dual_containing:
        raise NotDualContaining(f"[{n},{k}] code does not contain its dual")
    kq = 2 * k - n
    if kq < 0:
        raise NegativeLogicalDim(f"2k - n = {kq} < 0")
    if isinstance(d, tuple):
        out = QeccParams(n, kq, None, q, d_range=d, source=source)
    else:
        out = QeccParams(n, kq, d, q, source=source)
        singleton_report(out)
    return out


def css_general(n: int, k1: int, d1: int, k2: int, d2: int, q: int, nested: bool, source: str = "") -> QeccParams:
    """[[n, k1 + k2 - n, min(d1, d2)]]_q from C2^perp inside C1."""
    if not nested:
        raise NotDualContaining("C2^perp is not contained in C1")
    kq = k1 + k2 - n
    if kq < 0:
        raise NegativeLogicalDim(f"k1 + k2 - n = {kq} < 0")
    out = QeccParams(n, kq, min(d1, d2), q, source=source)
    singleton_report(out)
    return out


def singleton_report(p: QeccParams) -> int:
    """n - k + 2 - 2d; zero exactly for MDS codes."""
    defect = p.n - p.k + 2 - 2 * p.d
    if defect < 0:
        raise BoundViolated(f"{p} violates 2d <= n - k + 2 (defect {defect})")
    return defect
