"""Univariate polynomials over GF(2^n).

A polynomial is a list of int coefficients, index = degree, with no
trailing zeros; the zero polynomial is ``[]``.
"""

from __future__ import annotations

from typing import Sequence

from .errors import (BothZero, DegreeCapExceeded, DivisionByZeroPoly, ZeroPoly)
from .gf2n import FieldSpec
from .rng import SplitMix64

Poly = list
DEFAULT_DEGREE_CAP = 4096


def trim(a: Sequence[int]) -> Poly:
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def deg(a: Sequence[int]) -> int:
    return len(a) - 1


def p_add(a: Sequence[int], b: Sequence[int]) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] ^= c
    return trim(out)


def p_scale(spec: FieldSpec, a: Sequence[int], c: int) -> Poly:
    if not c:
        return []
    return [spec.mul(c, x) for x in a]


def p_mul(spec: FieldSpec, a: Sequence[int], b: Sequence[int]) -> Poly:
    if not a or not b:
        return []
    mul = spec.mul
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] ^= mul(x, y)
    return trim(out)


def p_sqr(spec: FieldSpec, a: Sequence[int]) -> Poly:
    # char 2: cross terms cancel
    out = [0] * (2 * len(a) - 1) if a else []
    for i, x in enumerate(a):
        out[2 * i] = spec.mul(x, x)
    return out


def p_divmod(spec: FieldSpec, a: Sequence[int], b: Sequence[int]) -> tuple[Poly, Poly]:
    b = trim(b)
    if not b:
        raise DivisionByZeroPoly("division by the zero polynomial")
    r = trim(a)
    db = len(b) - 1
    if len(r) <= db:
        return [], r
    mul = spec.mul
    lead_inv = spec.inv(b[-1])
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if not c:
            continue
        f = mul(c, lead_inv)
        q[i - db] = f
        off = i - db
        for j, y in enumerate(b):
            if y:
                r[off + j] ^= mul(f, y)
    return trim(q), trim(r[:db])


def p_mod(spec: FieldSpec, a: Sequence[int], b: Sequence[int]) -> Poly:
    return p_divmod(spec, a, b)[1]


def p_monic(spec: FieldSpec, a: Sequence[int]) -> Poly:
    a = trim(a)
    if not a:
        return []
    return p_scale(spec, a, spec.inv(a[-1]))


def p_gcd(spec: FieldSpec, a: Sequence[int], b: Sequence[int]) -> Poly:
    a, b = trim(a), trim(b)
    if not a and not b:
        raise BothZero("gcd(0, 0) is undefined")
    while b:
        a, b = b, p_mod(spec, a, b)
    return p_monic(spec, a)


def p_eval(spec: FieldSpec, a: Sequence[int], x: int) -> int:
    acc = 0
    mul = spec.mul
    for c in reversed(a):
        acc = mul(acc, x) ^ c
    return acc


def from_roots(spec: FieldSpec, roots: Sequence[int]) -> Poly:
    """prod (X + r)."""
    out = [1]
    mul = spec.mul
    for r in roots:
        nxt = [0] * (len(out) + 1)
        for i, c in enumerate(out):
            nxt[i + 1] ^= c
            nxt[i] ^= mul(c, r)
        out = nxt
    return out


def div_linear(spec: FieldSpec, a: Sequence[int], r: int) -> Poly:
    """a / (X + r) by synthetic division; the remainder is dropped."""
    n = len(a) - 1
    if n < 1:
        return []
    q = [0] * n
    acc = 0
    mul = spec.mul
    for i in range(n, 0, -1):
        acc = a[i] ^ mul(acc, r)
        q[i - 1] = acc
    return q


def _split(spec: FieldSpec, h: Poly, rng: SplitMix64, out: list[int]) -> None:
    """Roots of a monic product of distinct linear factors."""
    d = deg(h)
    if d <= 0:
        return
    if d == 1:
        out.append(h[0])
        return
    while True:
        delta = rng.nonzero(spec.n)
        y = [0, delta]
        y = p_mod(spec, y, h)
        acc = y
        for _ in range(spec.n - 1):
            y = p_mod(spec, p_sqr(spec, y), h)
            acc = p_add(acc, y)
        g = p_gcd(spec, h, acc) if acc else h
        if 0 < deg(g) < d:
            _split(spec, g, rng, out)
            _split(spec, p_divmod(spec, h, g)[0], rng, out)
            return


def find_roots(spec: FieldSpec, g: Sequence[int], seed: int = 0,
               degree_cap: int = DEFAULT_DEGREE_CAP) -> list[int]:
    """Sorted distinct roots of g in GF(2^n)."""
    g = trim(g)
    if not g:
        raise ZeroPoly("every element is a root of the zero polynomial")
    if deg(g) > degree_cap:
        raise DegreeCapExceeded(f"degree {deg(g)} > cap {degree_cap}")
    if deg(g) == 0:
        return []
    roots = []
    if not g[0]:
        roots.append(0)
        while g and not g[0]:
            g = g[1:]
    if deg(g) >= 1:
        g = p_monic(spec, g)
        # X^(2^n) mod g by n squarings
        r = p_mod(spec, [0, 1], g)
        for _ in range(spec.n):
            r = p_mod(spec, p_sqr(spec, r), g)
        h = p_gcd(spec, g, p_add(r, [0, 1]))
        _split(spec, h, SplitMix64(seed), roots)
    return sorted(roots)
