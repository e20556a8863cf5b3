import pytest

from skewcodec.errors import BudgetExceeded
from skewcodec.qecc import dual_containing_theta_big
from skewcodec.search import search


def test_empty_degree_range(ctx9):
    assert search(ctx9, 0, 6, deg_t=range(0)) == []


def test_linear_divisors_s6(ctx9):
    found = search(ctx9, 0, 6, deg_t=range(0, 2), budget=10**6)
    assert found == sorted(found, key=lambda c: c.key())
    for c in found:
        assert dual_containing_theta_big(ctx9, 6, c.t)[0]
        assert c.qecc.k == 2 * c.k - c.n and c.defect >= 0
    assert (24, 20, 2) in {(c.n, c.k, c.d) for c in found}


def test_budget_and_resume(ctx9):
    full = search(ctx9, 2, 2, deg_ell=range(1, 2), deg_t=range(1, 2), budget=10**6)
    with pytest.raises(BudgetExceeded) as ei:
        search(ctx9, 2, 2, deg_ell=range(1, 2), deg_t=range(1, 2), budget=7)
    part = ei.value.partial
    assert part["resume"] == 7
    rest = search(ctx9, 2, 2, deg_ell=range(1, 2), deg_t=range(1, 2), budget=10**6, start=part["resume"])
    merged = sorted(part["candidates"] + rest, key=lambda c: c.key())
    assert [c.to_json() for c in merged] == [c.to_json() for c in full]
