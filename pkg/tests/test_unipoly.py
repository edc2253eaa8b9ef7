import pytest
from hypothesis import given, strategies as st

from zerosum.errors import BothZero, DegreeCapExceeded, DivisionByZeroPoly
from zerosum.gf2n import find_irreducible
from zerosum.unipoly import (deg, find_roots, from_roots, p_add, p_divmod, p_eval, p_gcd,
                             p_mul)

F16 = find_irreducible(4)
F32 = find_irreducible(5)
B = 0x6


def test_mul_examples():
    assert p_mul(F16, [1, 1], [1, 1]) == [1, 0, 1]
    assert p_mul(F16, [3, 0, 5], [1]) == [3, 0, 5]
    assert p_mul(F16, [B, 1], [B ^ 1, 1]) == [1, 1, 1]


def test_divmod_examples():
    assert p_divmod(F16, [7, 2], [7, 2]) == ([1], [])
    assert p_divmod(F16, [1, 0, 1], [1, 1]) == ([1, 1], [])
    assert p_divmod(F16, [0, 0, 0, 1], [0, 0, 1]) == ([0, 1], [])
    with pytest.raises(DivisionByZeroPoly):
        p_divmod(F16, [1], [])


def test_gcd_examples():
    assert p_gcd(F16, [3, 1], []) == [3, 1]
    assert p_gcd(F16, [1, 0, 1], [1, 1]) == [1, 1]
    assert p_gcd(F16, [1, 0, 0, 1], [1, 1, 1]) == [1, 1, 1]
    with pytest.raises(BothZero):
        p_gcd(F16, [], [])


def test_roots_examples():
    assert find_roots(F16, [0, 1, 1]) == [0, 1]
    assert find_roots(F16, [1, 0, 0, 1]) == [1, B, B ^ 1]
    assert find_roots(F32, [1, 1, 1]) == []
    with pytest.raises(DegreeCapExceeded):
        find_roots(F16, [1] + [0] * 20 + [1], degree_cap=10)


polys = st.lists(st.integers(0, (1 << 13) - 1), max_size=9)
F13 = find_irreducible(13)


@given(polys, polys.filter(lambda p: any(p)))
def test_divmod_round_trip(a, b):
    q, r = p_divmod(F13, a, b)
    assert deg(r) < deg(b)
    assert p_add(p_mul(F13, q, b), r) == p_add(a, [])


@given(st.sets(st.integers(0, (1 << 13) - 1), max_size=12), polys, st.integers(0, 99))
def test_roots_of_products(roots, extra, seed):
    g = p_mul(F13, from_roots(F13, sorted(roots)), [1, 1, 1] if not extra else [1])
    found = find_roots(F13, g, seed=seed)
    assert found == sorted(r for r in set(roots) | set(find_roots(F13, [1, 1, 1]))
                           if p_eval(F13, g, r) == 0)
    assert set(roots) <= set(found) and len(found) <= deg(g)


@pytest.mark.parametrize("n", [33, 49, 64])
def test_roots_large_fields(n):
    spec = find_irreducible(n)
    roots = sorted({(0x9E3779B97F4A7C15 * (i + 1)) & spec.mask for i in range(25)})
    g = p_mul(spec, from_roots(spec, roots), [1, 0, 1, 1])
    assert set(roots) <= set(find_roots(spec, g, seed=5))
    assert all(p_eval(spec, g, r) == 0 for r in find_roots(spec, g, seed=5))
