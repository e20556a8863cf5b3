import pytest

from skewcodec.errors import ContextMismatch, NonUnitLead, NotADivisor, ParseError
from skewcodec.skewpoly import (
    SkewPoly,
    exact_right_quotient,
    format_poly,
    parse_poly,
    right_divides,
    sp_gcd_left,
    sp_gcd_right,
    sp_lcm_left,
    sp_right_divisors,
)

from random_codes import brute_lcm_degree, random_poly


def test_twisted_multiplication(ctx9):
    Fx, F = ctx9.Fx, ctx9.field
    w = F.w()
    # x * w = w^3 * x
    assert Fx.x * SkewPoly(Fx, [w]) == SkewPoly(Fx, [0, F.w(3)])
    assert parse_poly(Fx, "w*x") * parse_poly(Fx, "w*x") == parse_poly(Fx, "w^4*x^2")


def test_central_modulus(ctx9, ctx27):
    assert ctx9.Fx.is_central_modulus(6) and not ctx9.Fx.is_central_modulus(3)
    assert ctx27.Fx.is_central_modulus(9)


@pytest.mark.parametrize("which", ["Fx", "Rx"])
def test_division_round_trip(ctx9, rng, which):
    ring = getattr(ctx9, which)
    for _ in range(200):
        c = random_poly(ring, rng.randrange(0, 8), rng)
        a = random_poly(ring, rng.randrange(0, 4), rng)
        q, r = c.divmod_right(a)
        assert q * a + r == c and (r.is_zero() or r.degree < a.degree)
        q, r = c.divmod_left(a)
        assert a * q + r == c and (r.is_zero() or r.degree < a.degree)


def test_non_unit_lead_rejected(ctx9):
    Rx, R = ctx9.Rx, ctx9.ring
    with pytest.raises(NonUnitLead):
        Rx.x.divmod_right(SkewPoly(Rx, [R.one, R.kappa[0]]))


def test_gcd_and_lcm(ctx9, rng):
    Fx = ctx9.Fx
    for _ in range(60):
        g = random_poly(Fx, rng.randrange(1, 3), rng, monic=True)
        a = random_poly(Fx, rng.randrange(0, 3), rng) * g
        b = random_poly(Fx, rng.randrange(0, 3), rng) * g
        d = sp_gcd_right(a, b)
        assert right_divides(d, a) and right_divides(d, b) and right_divides(g, d)
        m = sp_lcm_left(a, b)
        assert right_divides(a, m) and right_divides(b, m)
        assert m.degree == a.degree + b.degree - d.degree == brute_lcm_degree(a, b)
        e = sp_gcd_left(a, b)
        assert (a.divmod_left(e)[1]).is_zero() and (b.divmod_left(e)[1]).is_zero()


def test_reciprocal_identities(ctx9, rng):
    for ring in (ctx9.Fx, ctx9.Rx):
        for _ in range(50):
            a = random_poly(ring, rng.randrange(0, 5), rng, unit_const=True)
            b = random_poly(ring, rng.randrange(0, 5), rng, unit_const=True)
            assert (a * b).reciprocal() == b.reciprocal().psi(a.degree) * a.reciprocal()
            assert a.reciprocal().reciprocal() == a.psi(a.degree)


def test_divisors_of_x6_minus_1(ctx9):
    Fx = ctx9.Fx
    xn = Fx.x_n_minus_1(6)
    linear = sp_right_divisors(Fx, 6, 1)
    assert parse_poly(Fx, "x + w^2") in linear
    for g in linear:
        assert (xn.rem_right(g)).is_zero()
    with pytest.raises(NotADivisor):
        exact_right_quotient(xn, parse_poly(Fx, "x + w"))


def test_parse_format_round_trip(ctx27, rng):
    Fx = ctx27.Fx
    for _ in range(100):
        g = random_poly(Fx, rng.randrange(0, 6), rng)
        assert parse_poly(Fx, format_poly(g)) == g
    assert parse_poly(Fx, [1, 0, "w"]) == parse_poly(Fx, "w*x^2 + 1")
    with pytest.raises(ParseError):
        parse_poly(Fx, "x^2 ++ y")


def test_mixing_contexts_fails(ctx9, ctx27):
    with pytest.raises(ContextMismatch):
        ctx9.Fx.x * ctx27.Fx.x
