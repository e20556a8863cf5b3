"""Random instances shared by the property tests."""

from __future__ import annotations

import random

import numpy as np

from skewcodec import linalg
from skewcodec.mixedcode import CodeContext, MixedCode, build_mixed_code
from skewcodec.skewpoly import SkewPoly, SkewRing, sp_right_divisors


def random_coeff(ring: SkewRing, rng: random.Random, unit: bool = False):
    F = ring.field
    if ring.over_ring:
        while True:
            c = tuple(rng.randrange(F.q) for _ in range(4))
            if not unit or all(c):
                return c
    return rng.randrange(1, F.q) if unit else rng.randrange(F.q)


def random_poly(ring: SkewRing, deg: int, rng: random.Random, unit_lead=False, unit_const=False, monic=False) -> SkewPoly:
    coeffs = [random_coeff(ring, rng) for _ in range(deg)]
    # the leading coefficient is always a unit so that the degree is exact
    coeffs.append(ring.one.coeffs[0] if monic else random_coeff(ring, rng, unit=True))
    if unit_const and deg > 0:
        coeffs[0] = random_coeff(ring, rng, unit=True)
    return SkewPoly(ring, coeffs)


def brute_lcm_degree(a: SkewPoly, b: SkewPoly) -> int:
    """Smallest d with a nonzero u, deg u <= d - deg a, such that b right-divides u a.

    Searched degree by degree: u a mod_r b is F_q-linear in the coefficients of u.
    """
    ring, F = a.ring, a.ring.field
    for d in range(a.degree, a.degree + b.degree + 1):
        rows = []
        for i in range(d - a.degree + 1):
            rem = (ring.monomial(i) * a).rem_right(b)
            rows.append([rem.coeff(j) for j in range(b.degree)] or [0])
        if linalg.rank(F, np.array(rows, dtype=np.int64)) < len(rows):
            return d
    raise AssertionError("no common left multiple found")


def random_tiny_code(ctx: CodeContext, rng: random.Random) -> MixedCode:
    """q = |F|, r, s in {2, 4}; s_poly is random subject to the structure condition."""
    r, s = rng.choice([2, 4]), rng.choice([2, 4])
    ells = [g for d in range(r + 1) for g in sp_right_divisors(ctx.Fx, r, d)]
    ts = [g for d in range(s + 1) for g in sp_right_divisors(ctx.Fx, s, d)]
    ell = rng.choice(ells)
    t = [rng.choice(ts) for _ in range(4)]
    if rng.random() < 0.5 and ell.degree > 0:
        s_poly = SkewPoly(ctx.Fx, [rng.randrange(ctx.q) for _ in range(ell.degree)])
        code = build_mixed_code(ctx, r, s, ell, s_poly, t)
        if code.satisfies_structure():
            return code
    return build_mixed_code(ctx, r, s, ell, None, t)
