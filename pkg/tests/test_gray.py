import numpy as np
import pytest

from skewcodec import linalg
from skewcodec.errors import BudgetExceeded, EmptyCode
from skewcodec.gray import (
    LinearCodeFq,
    big_phi,
    gray_lambda,
    gray_matrix,
    gray_rows,
    hamming_weight,
    lee_weight,
    min_distance,
)
from skewcodec.mixedcode import MixedWord


@pytest.mark.parametrize("name", ["f9", "f27"])
def test_matrix_is_orthogonal(name, request):
    F = request.getfixturevalue(name)
    assert gray_lambda(F, gray_matrix(F)) == 1


def test_gray_is_linear_isometry(f9, rng):
    for _ in range(300):
        r, s = rng.randrange(0, 4), rng.randrange(1, 4)
        a = [rng.randrange(9) for _ in range(r + 4 * s)]
        b = [rng.randrange(9) for _ in range(r + 4 * s)]
        c = rng.randrange(9)
        w, w2 = MixedWord.from_vector(r, s, a), MixedWord.from_vector(r, s, b)
        lin = MixedWord.from_vector(r, s, f9.vadd(f9.vmul(c, np.array(a)), np.array(b)))
        assert np.array_equal(big_phi(f9, lin), f9.vadd(f9.vmul(c, big_phi(f9, w)), big_phi(f9, w2)))
        assert lee_weight(f9, w) == hamming_weight(big_phi(f9, w))
        assert np.array_equal(gray_rows(f9, r, s, np.array([a]))[0], big_phi(f9, w))


def test_lee_weight_of_units(f9):
    # 1 = (1,1,1,1) maps to (1,0,0,0): Lee weight 1
    assert lee_weight(f9, MixedWord((), ((1, 1, 1, 1),))) == 1
    assert lee_weight(f9, MixedWord((), ((1, 0, 0, 0),))) == 4


def _repetition(F, n):
    return LinearCodeFq.from_generator(F, np.ones((1, n), dtype=np.int64))


def test_distance_strategies_agree(f9, rng):
    assert min_distance(_repetition(f9, 5), strategy="enumerate").distance == 5
    assert min_distance(_repetition(f9, 5), strategy="support_search").distance == 5
    for _ in range(40):
        n, k = rng.randrange(2, 10), rng.randrange(1, 5)
        G = np.array([[rng.randrange(9) for _ in range(n)] for _ in range(k)])
        lc = LinearCodeFq.from_generator(f9, G, n)
        if lc.k == 0:
            continue
        e = min_distance(lc, strategy="enumerate")
        s = min_distance(lc, strategy="support_search")
        assert e.distance == s.distance and e.proved_exact and s.proved_exact
        w = np.array(s.witness if len(s.witness) == n else e.witness)
        assert hamming_weight(w) == e.distance


def test_full_space_has_distance_one(f9):
    lc = LinearCodeFq.from_generator(f9, np.eye(4, dtype=np.int64))
    assert min_distance(lc).distance == 1


def test_empty_code(f9):
    lc = LinearCodeFq.from_generator(f9, np.zeros((0, 3), dtype=np.int64), 3)
    with pytest.raises(EmptyCode):
        min_distance(lc)


def test_budget(f9):
    lc = LinearCodeFq.from_generator(f9, np.eye(8, dtype=np.int64)[:6] + np.eye(8, k=2, dtype=np.int64)[:6])
    with pytest.raises(BudgetExceeded):
        min_distance(lc, strategy="enumerate", budget=100)


def test_dual_code(f9, rng):
    G = np.array([[rng.randrange(9) for _ in range(7)] for _ in range(3)])
    lc = LinearCodeFq.from_generator(f9, G)
    assert lc.k + lc.dual().k == 7
    assert not linalg.matmul(f9, lc.G, lc.dual().G.T).any()
