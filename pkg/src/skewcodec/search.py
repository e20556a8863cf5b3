"""Bounded search for dual-containing separable codes."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BudgetExceeded, EmptyCode
from .gray import gray_image_code, min_distance
from .mixedcode import CodeContext, build_mixed_code
from .qecc import QeccParams, reciprocal_test
from .skewpoly import SkewPoly, exact_right_quotient, format_poly, sp_right_divisors


@dataclass
class Candidate:
    ell: SkewPoly | None
    t: tuple
    n: int
    k: int
    d: int
    qecc: QeccParams

    @property
    def defect(self) -> int:
        return self.qecc.defect

    def key(self) -> tuple:
        gens = ([] if self.ell is None else [self.ell.coeffs]) + [ti.coeffs for ti in self.t]
        return (self.defect, self.n, gens)

    def to_json(self) -> dict:
        return {
            "ell": None if self.ell is None else format_poly(self.ell),
            "t": [format_poly(ti) for ti in self.t],
            "classical": [self.n, self.k, self.d],
            "qecc": [self.qecc.n, self.qecc.k, self.qecc.d],
            "defect": self.defect,
        }


def _dual_containing_divisors(ctx: CodeContext, n: int, degrees) -> list[SkewPoly]:
    xn = ctx.Fx.x_n_minus_1(n)
    out = []
    for d in degrees:
        for g in sp_right_divisors(ctx.Fx, n, d):
            if reciprocal_test(ctx, n, exact_right_quotient(xn, g)):
                out.append(g)
    return out


def search(
    ctx: CodeContext,
    r: int,
    s: int,
    deg_ell=range(0),
    deg_t=range(0),
    budget: int = 10_000,
    start: int = 0,
    strategy: str = "auto",
    distance_budget: int | None = None,
) -> list[Candidate]:
    """Every dual-containing separable code with ell and t_i drawn from the given degree ranges.

    ``budget`` caps the number of generator combinations examined; on overflow
    BudgetExceeded carries the ranked partial list and the index to resume from.
    """
    if (r and not len(deg_ell)) or (s and not len(deg_t)):
        return []
    ells = _dual_containing_divisors(ctx, r, deg_ell) if r else [None]
    ts = _dual_containing_divisors(ctx, s, deg_t) if s else [ctx.Fx.one]
    combos = itertools.product(ells, itertools.product(ts, repeat=4) if s else [(ctx.Fx.one,) * 4])
    found: list[Candidate] = []
    for idx, (ell, t) in enumerate(combos):
        if idx < start:
            continue
        if idx - start >= budget:
            found.sort(key=Candidate.key)
            raise BudgetExceeded(f"stopped after {budget} combinations", partial={"candidates": found, "resume": idx})
        code = build_mixed_code(ctx, r, s, ell if r else 1, None, list(t))
        try:
            lc = gray_image_code(code)
            d = min_distance(lc, strategy=strategy, budget=distance_budget).distance
        except EmptyCode:
            continue
        if 2 * lc.k < lc.n:
            continue
        q = QeccParams(lc.n, 2 * lc.k - lc.n, d, ctx.q, source="css")
        found.append(Candidate(ell, tuple(code.t), lc.n, lc.k, d, q))
    found.sort(key=Candidate.key)
    return found
