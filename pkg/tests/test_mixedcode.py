import numpy as np
import pytest

from skewcodec import linalg
from skewcodec.errors import NotADivisor, ShapeMismatch
from skewcodec.mixedcode import (
    MixedWord,
    build_mixed_code,
    code_from_spec,
    cyclic_closure_ok,
    enumerate_codewords,
    is_separable,
    minimal_generating_set,
    module_basis,
    rho,
    rho_rows,
)

from random_codes import random_tiny_code


def test_dimension_formula_matches_closure(ctx9, rng):
    for _ in range(40):
        code = random_tiny_code(ctx9, rng)
        gs = minimal_generating_set(code)
        assert len(gs) == code.k
        assert module_basis(code).shape[0] == code.k
        assert cyclic_closure_ok(code)


def test_rho_rows_match_rho(ctx9, rng):
    for _ in range(50):
        r, s = rng.choice([2, 4]), rng.choice([2, 4])
        v = [rng.randrange(9) for _ in range(r + 4 * s)]
        w = MixedWord.from_vector(r, s, v)
        assert np.array_equal(rho(ctx9, w).to_vector(), rho_rows(ctx9, r, s, np.array([v]))[0])


def test_rho_has_order_lcm(ctx9):
    # rho^(lcm(r, s)) is the identity when ord(theta) divides r and s
    w = MixedWord.from_vector(2, 4, [k % 9 for k in range(1, 19)])
    v = w
    for _ in range(4):
        v = rho(ctx9, v)
    assert v == w


def test_small_code_enumeration(ctx9):
    code = build_mixed_code(ctx9, 2, 2, "x + 1", None, ["x + 1", "x^2 - 1", "x^2 - 1", "x^2 - 1"])
    words = list(enumerate_codewords(code))
    assert len(words) == 9 ** code.k == 81
    B = module_basis(code)
    assert all(linalg.row_space_contains(ctx9.field, B, w.to_vector().reshape(1, -1)) for w in words)


def test_separable_flag(ctx9):
    sep = build_mixed_code(ctx9, 2, 2, "x + 1", None, ["x + 1"] * 4)
    assert is_separable(sep)


def test_validation(ctx9):
    with pytest.raises(NotADivisor):
        build_mixed_code(ctx9, 4, 2, "x^2 + w", None, [1, 1, 1, 1])
    with pytest.raises(ShapeMismatch):
        build_mixed_code(ctx9, 2, 2, 1, None, [1, 1, 1])
    with pytest.raises(ShapeMismatch):
        build_mixed_code(ctx9, 0, 0, 1, None, None)


def test_unit_and_zero_generators_normalised(ctx9):
    code = build_mixed_code(ctx9, 2, 2, "w", None, [0, 1, 1, 1])
    assert code.ell == ctx9.Fx.one and code.t[0] == ctx9.Fx.x_n_minus_1(2)
    assert code.notes


def test_spec_round_trip(ctx9):
    spec = {"field": ctx9.to_spec(), "r": 2, "s": 2, "ell": "x + 1", "t": ["x + 1", 1, 1, 1]}
    code = code_from_spec(spec)
    assert code.k == 1 + 1 + 2 + 2 + 2
