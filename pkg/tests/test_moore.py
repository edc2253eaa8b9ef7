import pytest
from hypothesis import assume, given, strategies as st

from zerosum.bitlinalg import Subspace, enumerate_k_subspaces
from zerosum.construct import extend_non_zero_sum
from zerosum.errors import DependentBasis, EmptyTuple, IndexOutOfRange, ZeroDimension
from zerosum.gf2n import find_irreducible
from zerosum.moore import (delta, delta1, delta1_kernel, delta_i, direct_inverse_sum, eval_Fk,
                           is_zero_sum, linearized_delta1_map, subspace_poly_images)
from zerosum.rng import SplitMix64

from helpers import expansion_value, moore_product, random_independent
from oracles import brute_inverse_sum, span

F16 = find_irreducible(4)
F32 = find_irreducible(5)
B = 0x6


def test_delta_examples():
    assert delta(F16, (0xB,)) == 0xB
    assert delta(F16, (1, B)) == 1
    assert delta(F16, (3, 5, 6)) == 0
    with pytest.raises(EmptyTuple):
        delta(F16, ())


def test_delta_i_examples():
    assert delta_i(F16, (0xB,), 1) == 0xB
    assert delta_i(F16, (1, B), 1) == 0
    assert delta_i(F16, (3, 5, 6), 0) == 0
    assert delta_i(F16, (1, 2), 0) != 0
    with pytest.raises(IndexOutOfRange):
        delta_i(F16, (1, 2), 3)


def test_eval_Fk_examples():
    for v in range(1, 16):
        assert eval_Fk(F16, (v,)) == 1
    assert eval_Fk(F16, (1, B)) == 0
    with pytest.raises(DependentBasis):
        eval_Fk(F16, (1, 1))


@given(st.integers(1, 2 ** 13 - 1), st.integers(1, 2 ** 13 - 1))
def test_eval_Fk_closed_form_k2(a, b):
    spec = find_irreducible(13)
    assume(a != b)
    expected = spec.sqr(a) ^ spec.mul(a, b) ^ spec.sqr(b)
    assert eval_Fk(spec, (a, b)) == expected


def test_is_zero_sum_examples():
    assert not is_zero_sum(Subspace.from_vectors(F16, [1]))
    assert is_zero_sum(Subspace.from_vectors(F16, [1, B]))
    with pytest.raises(ZeroDimension):
        is_zero_sum(Subspace.from_vectors(F16, []))


def test_direct_sum_examples():
    assert direct_inverse_sum(Subspace.from_vectors(F16, [1])) == 1
    assert direct_inverse_sum(Subspace.from_vectors(F16, [1, B])) == 0
    for n in (2, 5, 9, 17, 20):
        spec = find_irreducible(n)
        full = Subspace.from_vectors(spec, [1 << i for i in range(n)])
        assert direct_inverse_sum(full) == 0


def test_kernel_examples():
    m = linearized_delta1_map(F16, (1,))
    assert all(m.apply(x) == F16.pow(x, 4) ^ x for x in range(16))
    assert delta1_kernel(F16, (1,)) == [1, B]
    assert delta1_kernel(F32, (1,)) == [1]


@given(st.sampled_from([8, 13, 20, 33]), st.integers(1, 4), st.integers(0, 2 ** 32))
def test_linearized_map_matches_determinant(n, m, seed):
    spec = find_irreducible(n)
    rng = SplitMix64(seed)
    us = random_independent(rng, n, m)
    lin = linearized_delta1_map(spec, us)
    for _ in range(5):
        x = rng.bits(n)
        assert lin.apply(x) == delta1(spec, us + (x,))
    ker = delta1_kernel(spec, us)
    assert all(delta1(spec, us + (x,)) == 0 for x in ker)
    assert all(x in span(ker) for x in us)


@given(st.sampled_from([6, 11, 16, 32]), st.integers(1, 5), st.integers(0, 2 ** 32))
def test_product_formula(n, k, seed):
    spec = find_irreducible(n)
    k = min(k, n)
    vs = random_independent(SplitMix64(seed), n, k)
    assert delta(spec, vs) == moore_product(spec, vs) != 0


@given(st.integers(0, 2 ** 32))
def test_dependent_tuples_vanish(seed):
    spec = find_irreducible(12)
    rng = SplitMix64(seed)
    vs = list(random_independent(rng, 12, 3))
    vs.append(vs[0] ^ vs[2])
    for i in range(len(vs) + 1):
        assert delta_i(spec, vs, i) == 0
    assert delta(spec, vs) == 0


@given(st.sampled_from([5, 8, 10, 12]), st.integers(1, 8), st.integers(0, 2 ** 32))
def test_criterion_and_basis_independence(n, k, seed):
    spec = find_irreducible(n)
    k = min(k, n - 1)
    rng = SplitMix64(seed)
    vs = random_independent(rng, n, k)
    s = Subspace.from_vectors(spec, vs)
    assert is_zero_sum(s) == (direct_inverse_sum(s) == 0)
    assert (delta1(spec, vs) == 0) == is_zero_sum(s)
    if n <= 8:
        assert direct_inverse_sum(s) == brute_inverse_sum(span(vs), spec.modulus)


@pytest.mark.parametrize("n,k", [(6, 2), (6, 3), (7, 3), (8, 3)])
def test_closure_exhaustive(n, k):
    spec = find_irreducible(n)
    for s in enumerate_k_subspaces(spec, k):
        if is_zero_sum(s):
            a = 1 + (sum(s.basis) % (spec.q - 1))
            assert is_zero_sum(s.map(lambda x: spec.mul(a, x)))
            assert is_zero_sum(s.map(spec.sqr))


@given(st.sampled_from([(2, 1), (2, 2), (3, 1), (3, 2)]), st.integers(0, 2 ** 32))
def test_expansion_identity(kl, seed):
    k, l = kl
    spec = find_irreducible(16)
    us = extend_non_zero_sum(spec, (), l)
    rng = SplitMix64(seed)
    xs = random_independent(rng, 16, k + l)[:k]
    assume(delta(spec, xs + us))
    rhs = expansion_value(spec, xs, us)
    assume(rhs is not None)
    assert eval_Fk(spec, xs + us) == rhs


@pytest.mark.parametrize("basis", [(1,), (1, 6), (3, 5, 9)])
def test_subspace_polynomial(basis):
    imgs = subspace_poly_images(F16, basis)
    zeros = span(basis)
    for x in range(16):
        val = 0
        for j in range(4):
            if x >> j & 1:
                val ^= imgs[j]
        expected = 1
        for w in zeros:
            expected = F16.mul(expected, x ^ w)
        assert val == expected
