"""Vectorised GF(2^n) arithmetic on numpy uint64 arrays (brute-force sums)."""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

import numpy as np

from .gf2n import FieldSpec


def span_array(basis: Sequence[int], offset: int = 0) -> np.ndarray:
    """All XOR combinations of ``basis`` shifted by ``offset``."""
    arr = np.array([offset], dtype=np.uint64)
    for b in basis:
        arr = np.concatenate([arr, arr ^ np.uint64(b)])
    return arr


def vmul(spec: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    n = spec.n
    tail = np.uint64(spec.modulus ^ (1 << n))
    mask = np.uint64((1 << n) - 1)
    one = np.uint64(1)
    top_shift = np.uint64(n - 1)
    a = a.astype(np.uint64, copy=False)
    b = b.astype(np.uint64, copy=False)
    r = np.zeros(np.broadcast(a, b).shape, dtype=np.uint64)
    for i in range(n - 1, -1, -1):
        top = (r >> top_shift) & one
        r = ((r << one) & mask) ^ (tail * top)
        r ^= a * ((b >> np.uint64(i)) & one)
    return r


@lru_cache(maxsize=8)
def _np_tables(spec: FieldSpec):
    t = spec._tables
    if t is None:
        return None
    exp, log = t
    return np.frombuffer(exp, dtype=np.uint64), np.frombuffer(log, dtype=np.int64)


def vinv(spec: FieldSpec, a: np.ndarray) -> np.ndarray:
    """Elementwise inverse, inv(0) = 0; table-backed fields only."""
    tables = _np_tables(spec)
    if tables is None:
        raise ValueError("vinv needs a table-backed field")
    exp, log = tables
    q1 = spec.q - 1
    out = exp[(q1 - log[a.astype(np.int64)]) % q1]
    out[a == 0] = 0
    return out


def inverse_sum(spec: FieldSpec, elements: np.ndarray) -> int:
    """sum of 1/x over the array, 0 contributing 0."""
    x = elements[elements != 0].astype(np.uint64)
    if x.size == 0:
        return 0
    if _np_tables(spec) is not None:
        return int(np.bitwise_xor.reduce(vinv(spec, x)))
    # pairwise fraction sums: a/b + c/d = (ad + cb)/(bd)
    num = np.ones_like(x)
    den = x
    while den.size > 1:
        if den.size & 1:
            num = np.append(num, np.uint64(0))
            den = np.append(den, np.uint64(1))
        n1, n2 = num[0::2], num[1::2]
        d1, d2 = den[0::2], den[1::2]
        num = vmul(spec, n1, d2) ^ vmul(spec, n2, d1)
        den = vmul(spec, d1, d2)
    return spec.mul(int(num[0]), spec.inv(int(den[0])))
