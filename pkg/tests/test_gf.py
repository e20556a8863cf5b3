import pytest

from skewcodec.errors import FieldError, NotIrreducible, NotPrime, NotPrimitive, ParseError
from skewcodec.gf import GF, Frobenius, primitive_moduli


def test_rejects_bad_moduli():
    with pytest.raises(NotPrimitive):
        GF(3, 3, [2, 2, 0, 1])
    with pytest.raises(NotPrimitive):
        GF(3, 2, [1, 0, 1])
    with pytest.raises(NotIrreducible):
        GF(3, 2, [2, 0, 1])
    with pytest.raises(NotPrime):
        GF(4, 1, [1, 1])
    with pytest.raises(FieldError):
        GF(3, 2, [1, 1, 2])


def test_tables_match_schoolbook(f9, f27):
    # schoolbook products of coefficient vectors, reduced by the modulus
    for F in (f9, f27):
        p, m, mod = F.p, F.m, F.modulus
        for a in range(F.q):
            for b in range(F.q):
                va, vb = F.to_vector(a), F.to_vector(b)
                prod = [0] * (2 * m - 1)
                for i, x in enumerate(va):
                    for j, y in enumerate(vb):
                        prod[i + j] = (prod[i + j] + x * y) % p
                for k in range(2 * m - 2, m - 1, -1):
                    c = prod[k]
                    for j in range(m + 1):
                        prod[k - m + j] = (prod[k - m + j] - c * mod[j]) % p
                assert F.mul(a, b) == F.from_vector(prod[:m])
                assert F.add(a, b) == F.from_vector([(x + y) % p for x, y in zip(va, vb)])


def test_inverse_and_frobenius(f27):
    for a in range(1, 27):
        assert f27.mul(a, f27.inv(a)) == 1
        assert f27.frob(a, 1) == f27.pow(a, 3)
    theta = Frobenius(f27, 1)
    assert theta.order == 3


def test_parse_fmt_round_trip(f9):
    for a in range(9):
        assert f9.parse(f9.fmt(a)) == a
    assert f9.parse("w^8") == 1
    with pytest.raises(ParseError):
        f9.parse("v^2")


def test_primitive_moduli_counts():
    # phi(q - 1) / m primitive polynomials of degree m
    assert len(primitive_moduli(3, 2)) == 2
    assert len(primitive_moduli(3, 3)) == 4
    assert len(primitive_moduli(5, 2)) == 4
    assert [2, 2, 1] in primitive_moduli(3, 2)
