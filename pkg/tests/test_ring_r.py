import itertools

import pytest

from skewcodec.errors import ParseError
from skewcodec.ring_r import RingR, uv_multiply


@pytest.fixture(scope="module")
def R(f9):
    return RingR(f9)


def test_kappa_product_matches_uv_product(R, rng):
    F = R.field
    for _ in range(500):
        a = tuple(rng.randrange(9) for _ in range(4))
        b = tuple(rng.randrange(9) for _ in range(4))
        got = R.to_uv(R.mul(R.from_uv(*a), R.from_uv(*b)))
        assert got == uv_multiply(F, a, b)


def test_idempotents(R):
    for i, j in itertools.product(range(4), repeat=2):
        assert R.mul(R.kappa[i], R.kappa[j]) == (R.kappa[i] if i == j else R.zero)
    assert R.sum(R.kappa) == R.one
    assert R.mul(R.u, R.u) == R.u and R.mul(R.v, R.v) == R.v


def test_units(R, rng):
    for _ in range(200):
        a = tuple(rng.randrange(9) for _ in range(4))
        assert R.is_unit(a) == all(a)
        if all(a):
            assert R.mul(a, R.inv(a)) == R.one


def test_parse_forms(R):
    assert R.parse({"uv": [0, 1, 0, 0]}) == R.u
    assert R.parse([1, 0, 0, 0]) == R.kappa[0]
    assert R.parse("w") == R.from_field(R.field.w())
    with pytest.raises(ParseError):
        R.parse([1, 2])
