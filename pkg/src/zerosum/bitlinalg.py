"""Linear algebra over GF(2) with rows packed into ints.

A vector of length ``cols`` is an int whose bit j is coordinate j.  Field
elements of GF(2^n) are already vectors of this kind, so a subspace of the
field is just a list of ints.

Canonical echelon form used throughout: the pivot of a row is its highest
set bit, every pivot bit is cleared in all other rows, and rows are kept in
increasing pivot order (hence increasing integer order).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import BudgetExceeded, DimensionMismatch, SpecMismatch
from .gf2n import FieldSpec

DEFAULT_ELEMENT_CAP = 1 << 26


def echelon(vectors: Iterable[int]) -> list[int]:
    """Reduced echelon basis of span(vectors), sorted ascending."""
    piv: dict[int, int] = {}  # pivot bit -> row
    for v in vectors:
        while v:
            p = v.bit_length() - 1
            row = piv.get(p)
            if row is None:
                break
            v ^= row
        if not v:
            continue
        p = v.bit_length() - 1
        # clear lower pivots from v, then clear p from the others
        for q, row in piv.items():
            if v >> q & 1:
                v ^= row
        for q in piv:
            if piv[q] >> p & 1:
                piv[q] ^= v
        piv[p] = v
    return [piv[p] for p in sorted(piv)]


def reduce_against(v: int, basis: Sequence[int]) -> int:
    """Remainder of v after clearing every pivot of an echelon basis."""
    for row in reversed(basis):
        if v >> (row.bit_length() - 1) & 1:
            v ^= row
    return v


def in_span(v: int, basis: Sequence[int]) -> bool:
    return reduce_against(v, basis) == 0


def rank(vectors: Iterable[int]) -> int:
    return len(echelon(vectors))


# -- matrices -----------------------------------------------------------------

@dataclass(frozen=True)
class BitMatrix:
    """``rows`` x ``cols`` matrix over GF(2); row i is ``data[i]``."""

    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self):
        if len(self.data) != self.rows:
            raise DimensionMismatch(f"{len(self.data)} rows given, {self.rows} declared")
        if any(r >> self.cols for r in self.data):
            raise DimensionMismatch("row has bits beyond cols")

    @classmethod
    def from_rows(cls, rows: Sequence[int], cols: int) -> "BitMatrix":
        return cls(len(rows), cols, tuple(rows))

    @classmethod
    def from_columns(cls, columns: Sequence[int], rows: int) -> "BitMatrix":
        """Matrix whose column j is the vector ``columns[j]``."""
        data = [0] * rows
        for j, c in enumerate(columns):
            while c:
                i = c.bit_length() - 1
                data[i] |= 1 << j
                c ^= 1 << i
        return cls(rows, len(columns), tuple(data))

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols, (0,) * rows)

    def columns(self) -> list[int]:
        cols = [0] * self.cols
        for i, r in enumerate(self.data):
            while r:
                j = r.bit_length() - 1
                cols[j] |= 1 << i
                r ^= 1 << j
        return cols

    def apply(self, x: int) -> int:
        """m . x as a vector of length ``rows``."""
        out = 0
        for i, r in enumerate(self.data):
            out |= ((r & x).bit_count() & 1) << i
        return out


def reduce(m: BitMatrix) -> tuple[BitMatrix, int, BitMatrix]:
    """(rref, rank, kernel_basis) of m.

    The RREF uses the module's pivot convention, so rows are ascending.
    ``kernel_basis`` rows span {x : m.x = 0} and are themselves in echelon
    form.
    """
    rref = echelon(m.data)
    rk = len(rref)
    kernel = echelon(kernel_of_map(m.columns()))
    return (BitMatrix.from_rows(rref, m.cols), rk,
            BitMatrix.from_rows(kernel, m.cols))


def kernel_of_map(images: Sequence[int]) -> list[int]:
    """Kernel of the linear map sending basis vector j to ``images[j]``.

    Returned vectors are combinations x (bit j set = use basis vector j)
    with XOR of the selected images equal to 0.
    """
    piv: dict[int, tuple[int, int]] = {}
    kernel = []
    for j, img in enumerate(images):
        combo = 1 << j
        while img:
            p = img.bit_length() - 1
            hit = piv.get(p)
            if hit is None:
                piv[p] = (img, combo)
                break
            img ^= hit[0]
            combo ^= hit[1]
        else:
            kernel.append(combo)
    return kernel


def image_of_map(images: Sequence[int]) -> list[int]:
    return echelon(images)


def solve_linear(m: BitMatrix, rhs: int) -> int | None:
    """Some x with m.x = rhs, free variables set to 0; None if inconsistent."""
    if rhs >> m.rows:
        raise DimensionMismatch(f"rhs has more than {m.rows} bits")
    return solve_images(m.columns(), rhs)


def solve_images(images: Sequence[int], target: int) -> int | None:
    """x with XOR_{j in x} images[j] = target, free variables zero."""
    # eliminate on augmented columns; pivot columns are chosen left to right
    piv: dict[int, tuple[int, int]] = {}
    for j, img in enumerate(images):
        combo = 1 << j
        while img:
            p = img.bit_length() - 1
            hit = piv.get(p)
            if hit is None:
                piv[p] = (img, combo)
                break
            img ^= hit[0]
            combo ^= hit[1]
    x = 0
    t = target
    while t:
        p = t.bit_length() - 1
        hit = piv.get(p)
        if hit is None:
            return None
        t ^= hit[0]
        x ^= hit[1]
    return x


# -- subspaces of GF(2^n) -------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """F2-subspace of GF(2^n) stored by its canonical echelon basis."""

    ambient: FieldSpec
    basis: tuple[int, ...]
    offset: int = field(default=0, compare=True)

    @classmethod
    def from_vectors(cls, spec: FieldSpec, vectors: Iterable[int]) -> "Subspace":
        vs = [int(v) for v in vectors]
        if any(v < 0 or v >> spec.n for v in vs):
            raise SpecMismatch(f"vector outside GF(2^{spec.n})")
        return cls(spec, tuple(echelon(vs)))

    @property
    def k(self) -> int:
        return len(self.basis)

    @property
    def n(self) -> int:
        return self.ambient.n

    def __contains__(self, v: int) -> bool:
        return in_span(v ^ self.offset, self.basis)

    def __len__(self):
        return 1 << self.k

    def elements(self, cap: int = DEFAULT_ELEMENT_CAP) -> Iterator[int]:
        return subspace_elements(self, cap)

    def hex_basis(self) -> list[str]:
        return [format(b, "x") for b in self.basis]

    def map(self, fn) -> "Subspace":
        """Span of fn applied to the basis; fn should be F2-linear."""
        return Subspace.from_vectors(self.ambient, (fn(b) for b in self.basis))

    def __add__(self, other: "Subspace") -> "Subspace":
        if other.ambient != self.ambient:
            raise SpecMismatch("different fields")
        return Subspace.from_vectors(self.ambient, self.basis + other.basis)


def subspace_from_vectors(spec: FieldSpec, vs: Iterable) -> Subspace:
    out = []
    for v in vs:
        s = getattr(v, "spec", None)
        if s is not None and s != spec:
            raise SpecMismatch("element from a different field")
        out.append(int(v))
    return Subspace.from_vectors(spec, out)


def subspace_elements(s: Subspace, cap: int = DEFAULT_ELEMENT_CAP) -> Iterator[int]:
    """All 2^k elements in Gray-code order, starting at the offset (0 for linear)."""
    if (1 << s.k) > cap:
        raise BudgetExceeded(f"2^{s.k} elements exceeds cap {cap}")
    x = s.offset
    yield x
    basis = s.basis
    for i in range(1, 1 << s.k):
        x ^= basis[(i & -i).bit_length() - 1]
        yield x


def enumerate_k_subspaces(spec: FieldSpec, k: int) -> Iterator[Subspace]:
    """Every k-dim subspace once, by pivot set then free entries."""
    n = spec.n
    if not 0 <= k <= n:
        return
    for pivots in combinations(range(n), k):
        pset = set(pivots)
        # free positions of row i: below its pivot and not a pivot
        free = [[j for j in range(p) if j not in pset] for p in pivots]
        sizes = [len(f) for f in free]
        total = sum(sizes)
        for word in range(1 << total):
            rows = []
            w = word
            for p, f, sz in zip(pivots, free, sizes):
                r = 1 << p
                for j in f:
                    if w & 1:
                        r |= 1 << j
                    w >>= 1
                rows.append(r)
            yield Subspace(spec, tuple(rows))


def gaussian_binomial(n: int, k: int, q: int = 2) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def affine(spec: FieldSpec, offset: int, basis: Iterable[int]) -> Subspace:
    """offset + span(basis), with the offset reduced to its canonical coset rep."""
    b = tuple(echelon(basis))
    return Subspace(spec, b, reduce_against(offset, b))
