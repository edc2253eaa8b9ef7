"""Moore determinants and the zero-sum criterion.

For a tuple v_1..v_k of field elements, ``delta`` is the determinant of
the matrix whose row i holds v_j^(2^i), i = 0..k-1.  ``delta_i`` uses the
row exponents 2^0..2^k with 2^i left out.  A k-dim subspace with basis
u_1..u_k is zero-sum (its nonzero elements have inverses summing to 0)
exactly when delta_i(u, 1) == 0.

All functions take the field first and plain int elements.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from . import _vec
from .bitlinalg import DEFAULT_ELEMENT_CAP, BitMatrix, Subspace, echelon, kernel_of_map
from .errors import (BudgetExceeded, DependentBasis, EmptyTuple, IndexOutOfRange,
                     ZeroDimension)
from .gf2n import FieldSpec


def field_det(spec: FieldSpec, rows: Sequence[Sequence[int]]) -> int:
    """Determinant over GF(2^n) by Gaussian elimination (signs vanish)."""
    m = [list(r) for r in rows]
    k = len(m)
    mul, inv = spec.mul, spec.inv
    det = 1
    for c in range(k):
        p = next((r for r in range(c, k) if m[r][c]), None)
        if p is None:
            return 0
        if p != c:
            m[c], m[p] = m[p], m[c]
        pivot_row = m[c]
        piv = pivot_row[c]
        det = mul(det, piv)
        pinv = inv(piv)
        for r in range(c + 1, k):
            row = m[r]
            if row[c]:
                f = mul(row[c], pinv)
                for j in range(c + 1, k):
                    if pivot_row[j]:
                        row[j] ^= mul(f, pivot_row[j])
    return det


def field_solve(spec: FieldSpec, a: Sequence[Sequence[int]], b: Sequence[int]) -> list[int]:
    """Solve a.x = b for square nonsingular a over GF(2^n)."""
    k = len(a)
    m = [list(r) + [bi] for r, bi in zip(a, b)]
    mul, inv = spec.mul, spec.inv
    for c in range(k):
        p = next((r for r in range(c, k) if m[r][c]), None)
        if p is None:
            raise DependentBasis("singular system")
        m[c], m[p] = m[p], m[c]
        pinv = inv(m[c][c])
        m[c] = [mul(x, pinv) for x in m[c]]
        pr = m[c]
        for r in range(k):
            if r != c and m[r][c]:
                f = m[r][c]
                m[r] = [x ^ mul(f, y) for x, y in zip(m[r], pr)]
    return [m[r][k] for r in range(k)]


def _moore_rows(spec: FieldSpec, vs: Sequence[int], exponents: Sequence[int]) -> list[list[int]]:
    frob = spec.frob
    return [[frob(v, e) for v in vs] for e in exponents]


def delta(spec: FieldSpec, vs: Sequence[int]) -> int:
    """Moore determinant of vs; zero iff vs is F2-dependent."""
    k = len(vs)
    if k == 0:
        raise EmptyTuple("delta needs at least one element")
    return field_det(spec, _moore_rows(spec, vs, range(k)))


def delta_i(spec: FieldSpec, vs: Sequence[int], i: int) -> int:
    """Moore-type determinant with row exponent 2^i removed from 2^0..2^k."""
    k = len(vs)
    if k == 0:
        raise EmptyTuple("delta_i needs at least one element")
    if not 0 <= i <= k:
        raise IndexOutOfRange(f"i={i} outside [0, {k}]")
    exps = [e for e in range(k + 1) if e != i]
    return field_det(spec, _moore_rows(spec, vs, exps))


def delta1(spec: FieldSpec, vs: Sequence[int]) -> int:
    return delta_i(spec, vs, 1)


def eval_Fk(spec: FieldSpec, vs: Sequence[int]) -> int:
    """delta_1(vs) / delta(vs); zero iff span(vs) is zero-sum."""
    d = delta(spec, vs)
    if not d:
        raise DependentBasis("delta(vs) = 0")
    return spec.mul(delta1(spec, vs), spec.inv(d))


def is_zero_sum(s: Subspace) -> bool:
    if s.k == 0:
        raise ZeroDimension("the zero subspace has no nonzero elements")
    return delta1(s.ambient, s.basis) == 0


def direct_inverse_sum(s: Subspace, cap: int = DEFAULT_ELEMENT_CAP) -> int:
    """Brute-force sum of 1/x over the nonzero elements of s (affine ok)."""
    if (1 << s.k) > cap:
        raise BudgetExceeded(f"2^{s.k} elements exceeds cap {cap}")
    return _vec.inverse_sum(s.ambient, _vec.span_array(s.basis, s.offset))


# -- linearized maps -------------------------------------------------------------

@lru_cache(maxsize=4096)
def frob_basis_images(spec: FieldSpec, e: int) -> tuple[int, ...]:
    """(X^j)^(2^e) for j = 0..n-1."""
    return tuple(spec.frob(1 << j, e) for j in range(spec.n))


def linearized_images(spec: FieldSpec, terms: Sequence[tuple[int, int]]) -> list[int]:
    """Images of the standard basis under x -> sum c * x^(2^e) over (c, e) terms."""
    mul = spec.mul
    images = [0] * spec.n
    for c, e in terms:
        if not c:
            continue
        fb = frob_basis_images(spec, e % spec.n)
        for j in range(spec.n):
            images[j] ^= mul(c, fb[j])
    return images


def delta1_coefficients(spec: FieldSpec, us: Sequence[int]) -> list[tuple[int, int]]:
    """Terms (c, e) with delta_1(us, x) = sum c * x^(2^e).

    The coefficients are the cofactors of the last column.  The one on x is
    delta(us)^4 != 0; the rest solve sum_j c_j u_i^(2^e_j) = 0 for each u_i,
    a system whose matrix has determinant delta(us)^4 as well.
    """
    m = len(us)
    d = delta(spec, us) if m else 1
    if not d:
        raise DependentBasis("prefix is F2-dependent")
    c0 = spec.frob(d, 2)
    exps = [0] + list(range(2, m + 2))
    if m == 0:
        return [(c0, 0)]
    a = [[spec.frob(u, e) for e in exps[1:]] for u in us]
    rhs = [spec.mul(c0, u) for u in us]
    rest = field_solve(spec, a, rhs)
    return [(c0, 0)] + list(zip(rest, exps[1:]))


def linearized_delta1_map(spec: FieldSpec, us: Sequence[int]) -> BitMatrix:
    """Matrix of x -> delta_1(u_1..u_m, x) over F2 (column j = image of X^j)."""
    if len(us) < 1:
        raise EmptyTuple("need at least one fixed element")
    images = linearized_images(spec, delta1_coefficients(spec, us))
    return BitMatrix.from_columns(images, spec.n)


def delta1_kernel(spec: FieldSpec, us: Sequence[int]) -> list[int]:
    """Echelon basis of {x : delta_1(us, x) = 0}; always contains span(us)."""
    images = linearized_images(spec, delta1_coefficients(spec, us))
    return echelon(kernel_of_map(images))


def subspace_poly_images(spec: FieldSpec, basis: Sequence[int]) -> list[int]:
    """Images of X^j under the subspace polynomial prod_{w in span}(x + w)."""
    # L_j(x) = L_{j-1}(x)^2 + L_{j-1}(b_j) L_{j-1}(x), tracked as (c, e) terms
    terms = {0: 1}
    mul, sqr = spec.mul, spec.sqr

    def ev(x):
        acc = 0
        for e, c in terms.items():
            acc ^= mul(c, spec.frob(x, e))
        return acc

    for b in basis:
        beta = ev(b)
        new: dict[int, int] = {}
        for e, c in terms.items():
            new[e + 1] = new.get(e + 1, 0) ^ sqr(c)
            new[e] = new.get(e, 0) ^ mul(beta, c)
        terms = new
    return linearized_images(spec, [(c, e) for e, c in terms.items()])


def is_independent(vs: Sequence[int]) -> bool:
    return len(echelon(vs)) == len(vs)
