import pytest

from skewcodec.errors import BoundViolated, NegativeLogicalDim, NotDualContaining, NotSeparable, OrderMismatch
from skewcodec.mixedcode import build_mixed_code
from skewcodec.qecc import css, css_general, dual_containing_mixed, dual_containing_theta, reciprocal_test
from skewcodec.skewpoly import parse_poly


def test_css_parameters():
    q = css(50, 41, 3, 9, True)
    assert (q.n, q.k, q.d) == (50, 32, 3) and str(q) == "[[50,32,3]]_9"
    assert q.defect == 14 and not q.mds
    assert css(6, 5, 2, 9, True).mds
    assert css(10, 7, (2, 3), 9, True).d is None


def test_css_errors():
    with pytest.raises(NotDualContaining):
        css(10, 7, 2, 9, False)
    with pytest.raises(NegativeLogicalDim):
        css(10, 4, 2, 9, True)
    with pytest.raises(BoundViolated):
        css(10, 8, 4, 9, True)
    assert css_general(10, 7, 3, 6, 3, 9, True).k == 3


def test_reciprocal_test_cofactor(ctx9):
    Fx = ctx9.Fx
    f = parse_poly(Fx, "x + 1")
    res = reciprocal_test(ctx9, 2, f)
    # (x + 1)^dagger (x + 1) = (x + 1)^2 is not a multiple of x^2 - 1
    assert not res.holds
    res = reciprocal_test(ctx9, 2, Fx.x_n_minus_1(2))
    assert res.holds and res.cofactor * Fx.x_n_minus_1(2) == res.product


def test_theta_dual_containing(ctx9):
    assert dual_containing_theta(ctx9, 6, "x + w^2")
    with pytest.raises(OrderMismatch):
        dual_containing_theta(ctx9, 3, "x + 1")


def test_mixed_needs_separable(ctx9):
    code = build_mixed_code(ctx9, 2, 2, "x + 1", "w", ["x + 1"] * 4)
    if not code.s_poly.is_zero():
        with pytest.raises(NotSeparable):
            dual_containing_mixed(code)
