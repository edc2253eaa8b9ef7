"""Arithmetic in GF(2^n), 2 <= n <= 64, in polynomial basis.

Elements are plain ints: bit i is the coefficient of X^i.  Zero is 0 and
one is 1.  Addition is XOR.  A :class:`FieldSpec` carries the modulus and
the multiplication routines; hot loops call its methods directly on ints.
:class:`FieldElement` is a thin checked wrapper for callers that want the
field attached to the value.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .errors import DegreeOutOfRange, NotADivisor, SpecMismatch

MAX_DEGREE = 64
TABLE_MAX_DEGREE = 20


# -- GF(2)[X] helpers on ints ------------------------------------------------

def _clmul(a: int, b: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def _pmod(a: int, m: int) -> int:
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def _pgcd(a: int, b: int) -> int:
    while b:
        a, b = b, _pmod(a, b)
    return a


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(poly: int) -> bool:
    """Rabin's test for a binary polynomial given as an int."""
    n = poly.bit_length() - 1
    if n < 1 or not poly & 1:
        return n == 1

    def x_pow2(k: int) -> int:
        # X^(2^k) mod poly
        r = 2
        for _ in range(k):
            r = _pmod(_clmul(r, r), poly)
        return r

    if x_pow2(n) != _pmod(2, poly):
        return False
    for p in _prime_factors(n):
        if _pgcd(poly, x_pow2(n // p) ^ 2) != 1:
            return False
    return True


# -- the field ----------------------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    """GF(2^n) defined by an irreducible ``modulus`` (bit n and bit 0 set)."""

    n: int
    modulus: int

    def __post_init__(self):
        if not 2 <= self.n <= MAX_DEGREE:
            raise DegreeOutOfRange(f"n={self.n} outside [2, {MAX_DEGREE}]")
        if self.modulus.bit_length() != self.n + 1 or not self.modulus & 1:
            raise ValueError(f"modulus {self.modulus:#x} is not a degree-{self.n} polynomial with constant term")

    @property
    def q(self) -> int:
        return 1 << self.n

    @property
    def mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def _tail_bits(self) -> tuple[int, ...]:
        tail = self.modulus ^ (1 << self.n)
        return tuple(i for i in range(self.n) if tail >> i & 1)

    @cached_property
    def _tables(self):
        """(exp, log) arrays; exp runs over two periods so log sums need no mod."""
        if self.n > TABLE_MAX_DEGREE:
            return None
        from ._vec import vmul

        q1 = self.q - 1
        exp = np.ones(1, dtype=np.uint64)
        step = self.primitive_element  # g^len(exp)
        while exp.size < q1:
            exp = np.concatenate([exp, vmul(self, exp, np.uint64(step))])
            step = self._mul_slow(step, step)
        exp = exp[:q1]
        log = np.zeros(self.q, dtype=np.int64)
        log[exp.astype(np.int64)] = np.arange(q1)
        return array("Q", np.concatenate([exp, exp]).tobytes()), array("q", log.tobytes())

    @cached_property
    def primitive_element(self) -> int:
        """Smallest generator of the multiplicative group."""
        q1 = self.q - 1
        cofactors = [q1 // p for p in _prime_factors(q1)]
        for g in range(2, self.q):
            if all(self._pow_slow(g, c) != 1 for c in cofactors):
                return g
        return 1  # n == 1 never happens; GF(4)* etc. always have a generator above

    @cached_property
    def trace_mask(self) -> int:
        """Bitmask t with Tr(x) = parity(x & t)."""
        t = 0
        for i in range(self.n):
            x = 1 << i
            s, y = 0, x
            for _ in range(self.n):
                s ^= y
                y = self._mul_slow(y, y)
            t |= (s & 1) << i
        return t

    # multiplication ----------------------------------------------------------

    def reduce(self, r: int) -> int:
        n = self.n
        tail = self._tail_bits
        while r >> n:
            hi = r >> n
            r &= self.mask
            for j in tail:
                r ^= hi << j
        return r

    def _mul_slow(self, a: int, b: int) -> int:
        return self.reduce(_clmul(a, b))

    def _pow_slow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_slow(r, a)
            a = self._mul_slow(a, a)
            e >>= 1
        return r

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        t = self._tables
        if t is not None:
            exp, log = t
            return exp[log[a] + log[b]]
        return self.reduce(_clmul(a, b))

    def sqr(self, a: int) -> int:
        return self.mul(a, a)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if not a:
            return 0 if e else 1
        t = self._tables
        if t is not None:
            exp, log = t
            return exp[(log[a] * e) % (self.q - 1)]
        return self._pow_slow(a, e)

    def inv(self, a: int) -> int:
        """Inverse with the convention inv(0) = 0."""
        if not a:
            return 0
        t = self._tables
        if t is not None:
            exp, log = t
            return exp[(self.q - 1 - log[a]) % (self.q - 1)]
        # extended Euclid in GF(2)[X]; invariant g1*a = u, g2*a = v
        u, v = a, self.modulus
        g1, g2 = 1, 0
        while u != 1:
            j = u.bit_length() - v.bit_length()
            if j < 0:
                u, v, g1, g2 = v, u, g2, g1
                j = -j
            u ^= v << j
            g1 ^= g2 << j
        return self.reduce(g1)

    def div(self, a: int, b: int) -> int:
        if not b:
            raise ZeroDivisionError("division by zero field element")
        return self.mul(a, self.inv(b))

    def frob(self, a: int, j: int = 1) -> int:
        """a^(2^j)."""
        j %= self.n
        t = self._tables
        if t is not None and a:
            exp, log = t
            return exp[(log[a] << j) % (self.q - 1)]
        for _ in range(j):
            a = self.mul(a, a)
        return a

    def trace(self, a: int) -> int:
        return (a & self.trace_mask).bit_count() & 1

    def element(self, bits: int) -> "FieldElement":
        return FieldElement(bits, self)

    def hex(self) -> str:
        return format(self.modulus, "x")


@lru_cache(maxsize=None)
def find_irreducible(n: int) -> FieldSpec:
    """Field spec with the lexicographically smallest irreducible modulus of degree n."""
    if not 2 <= n <= MAX_DEGREE:
        raise DegreeOutOfRange(f"n={n} outside [2, {MAX_DEGREE}]")
    for m in range((1 << n) | 1, 1 << (n + 1), 2):
        if is_irreducible(m):
            return FieldSpec(n, m)
    raise AssertionError("unreachable: irreducibles exist in every degree")


# -- checked element wrapper ----------------------------------------------------

@dataclass(frozen=True)
class FieldElement:
    bits: int
    spec: FieldSpec

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.spec.n:
            raise ValueError(f"{self.bits:#x} does not fit in GF(2^{self.spec.n})")

    def __int__(self):
        return self.bits

    def hex(self) -> str:
        return format(self.bits, "x")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return fe_add(self, other)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return fe_mul(self, other)


def _same(a: FieldElement, b: FieldElement) -> FieldSpec:
    if a.spec != b.spec:
        raise SpecMismatch(f"GF(2^{a.spec.n}) vs GF(2^{b.spec.n})")
    return a.spec


def fe_add(a: FieldElement, b: FieldElement) -> FieldElement:
    spec = _same(a, b)
    return FieldElement(a.bits ^ b.bits, spec)


def fe_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    spec = _same(a, b)
    return FieldElement(spec.mul(a.bits, b.bits), spec)


def fe_inv(a: FieldElement) -> FieldElement:
    return FieldElement(a.spec.inv(a.bits), a.spec)


def fe_frob(a: FieldElement, j: int) -> FieldElement:
    if j < 0:
        raise ValueError("Frobenius iteration count must be >= 0")
    return FieldElement(a.spec.frob(a.bits, j), a.spec)


def subfield_subspace(spec: FieldSpec, l: int):
    """The subfield GF(2^l) as an F2-subspace: kernel of x -> x^(2^l) + x."""
    from .bitlinalg import Subspace, kernel_of_map

    if l < 1 or spec.n % l:
        raise NotADivisor(f"{l} does not divide {spec.n}")
    images = [spec.frob(1 << i, l) ^ (1 << i) for i in range(spec.n)]
    return Subspace.from_vectors(spec, kernel_of_map(images))


def to_hex(x: int) -> str:
    return format(x, "x")


def from_hex(s: str) -> int:
    return int(s, 16)
