"""Which dimensions carry zero-sum subspaces, plus two empirical checks.

``census_run`` determines the member set K_n = {k : GF(2^n) has a k-dim
zero-sum subspace}, exhaustively for small n or constructively otherwise.
``affine_sample_check`` samples affine subspaces avoiding 0 and confirms
their inverse sums are nonzero.  ``curve_point_count`` counts pairs
(x1, x2) completing a fixed non-zero-sum tuple u to a zero-sum subspace and
compares the count with q - 9 * 4^l * sqrt(q).
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import _vec
from .bitlinalg import Subspace, echelon, enumerate_k_subspaces, in_span, kernel_of_map
from .construct import (SearchBudget, ZeroSumCertificate, build_zero_sum,
                        extend_non_zero_sum)
from .errors import BudgetExceeded, CapExceeded, NoSolution, NotExist
from .gf2n import find_irreducible
from .moore import delta, delta1, delta1_coefficients, is_zero_sum, linearized_images
from .rng import SplitMix64

EXHAUSTIVE_CAP = 10
CURVE_SCAN_MAX_BITS = 26


@dataclass
class CensusReport:
    n: int
    mode: str
    members: set[int] = field(default_factory=set)
    evidence: dict[int, object] = field(default_factory=dict)
    counts: dict[int, int] | None = None
    checks: dict[str, bool] = field(default_factory=dict)

    def method(self, k: int) -> str:
        ev = self.evidence.get(k)
        if isinstance(ev, ZeroSumCertificate):
            return ev.method
        return str(ev)

    def to_dict(self) -> dict:
        ev = {str(k): (json.loads(v.to_json()) if isinstance(v, ZeroSumCertificate) else v)
              for k, v in sorted(self.evidence.items())}
        out = {"n": self.n, "mode": self.mode, "members": sorted(self.members),
               "evidence": ev, "checks": self.checks}
        if self.counts is not None:
            out["counts"] = {str(k): c for k, c in sorted(self.counts.items())}
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "k", "member", "method"])
        for k in range(1, self.n):
            w.writerow([self.n, k, int(k in self.members), self.method(k)])
        return buf.getvalue()


def census_run(n: int, mode: str = "exhaustive", budget: SearchBudget | None = None,
               counts: bool = False, cap: int = EXHAUSTIVE_CAP) -> CensusReport:
    budget = budget or SearchBudget()
    spec = find_irreducible(n)
    report = CensusReport(n=n, mode=mode, counts={} if counts else None)
    if mode == "exhaustive":
        if n > cap:
            raise CapExceeded(f"exhaustive census capped at n <= {cap}")
        for k in range(1, n):
            found = None
            c = 0
            for sub in enumerate_k_subspaces(spec, k):
                if is_zero_sum(sub):
                    c += 1
                    if found is None:
                        found = sub
                        if not counts:
                            break
            if found is not None:
                report.members.add(k)
                report.evidence[k] = ZeroSumCertificate.for_subspace(found, "exhaustive", r=k)
            else:
                report.evidence[k] = "exhausted-none"
            if counts:
                report.counts[k] = c
    elif mode == "constructive":
        for k in range(1, n):
            try:
                cert = build_zero_sum(n, k, budget)
            except NotExist:
                report.evidence[k] = "not-exist"
            except NoSolution:
                report.evidence[k] = "no-solution"
            else:
                report.members.add(k)
                report.evidence[k] = cert
    else:
        raise ValueError(f"unknown census mode {mode!r}")

    mem = report.members
    if mode == "exhaustive":
        report.checks["symmetry"] = all((k in mem) == (n - k in mem) for k in range(1, n))
    report.checks["parity"] = (2 in mem) == (n % 2 == 0) if n > 2 else True
    report.checks["ends"] = 1 not in mem and (n - 1) not in mem
    return report


def affine_sample_check(n: int, trials: int, seed: int = 0, max_dim: int = 12):
    """(True, None) if every sampled affine subspace avoiding 0 has nonzero inverse sum.

    Otherwise (False, (offset, basis)) for the first violation.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    spec = find_irreducible(n)
    rng = SplitMix64(seed)
    top = min(n - 1, max_dim)
    for _ in range(trials):
        d = rng.below(top + 1)
        basis: list[int] = []
        while len(basis) < d:
            v = rng.nonzero(n)
            if not in_span(v, basis):
                basis = echelon(basis + [v])
        while True:
            offset = rng.nonzero(n)
            if not in_span(offset, basis):
                break
        total = _vec.inverse_sum(spec, _vec.span_array(basis, offset))
        if total == 0:
            return False, (offset, basis)
    return True, None


@dataclass
class CurveCount:
    n: int
    l: int
    u_basis: tuple[int, ...]
    points_on_curve_off_delta: int
    hw_lower_bound: float

    @property
    def exceeds_bound(self) -> bool:
        return self.points_on_curve_off_delta > self.hw_lower_bound

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "l": self.l,
                           "u_basis": [format(u, "x") for u in self.u_basis],
                           "points_on_curve_off_delta": self.points_on_curve_off_delta,
                           "hw_lower_bound": self.hw_lower_bound,
                           "exceeds_bound": self.exceeds_bound})


def hw_lower_bound(n: int, l: int) -> float:
    return 2.0 ** n - 9 * 4 ** l * 2.0 ** (n / 2)


def curve_point_count(n: int, l: int, seed: int = 0) -> CurveCount:
    """Exact number of (x1, x2) with delta_1(x1, x2, u) = 0 and delta(x1, x2, u) != 0.

    For each x2 the condition on x1 is linear: x1 must lie in the kernel K
    of x1 -> delta_1(x1, x2, u) but outside span(x2, u), a subspace of K.
    Summing |K| - 2^(l+1) over x2 outside span(u) gives the exact count of
    the 2^(2n) scan.  The u-basis is deterministic, so ``seed`` is recorded
    only for interface symmetry.
    """
    if 2 * n > CURVE_SCAN_MAX_BITS:
        raise BudgetExceeded(f"2n = {2 * n} exceeds scan budget {CURVE_SCAN_MAX_BITS}")
    if l < 1:
        raise ValueError("l must be >= 1")
    spec = find_irreducible(n)
    us = extend_non_zero_sum(spec, (), l)
    u_span = echelon(us)
    inner = 1 << (l + 1)
    total = 0
    for x2 in range(spec.q):
        if in_span(x2, u_span):
            continue
        coeffs = delta1_coefficients(spec, (x2,) + us)
        kdim = len(kernel_of_map(linearized_images(spec, coeffs)))
        total += (1 << kdim) - inner
    return CurveCount(n, l, us, total, hw_lower_bound(n, l))


def curve_point_count_scan(n: int, l: int) -> int:
    """The same count by evaluating both determinants at every pair (small n)."""
    spec = find_irreducible(n)
    us = extend_non_zero_sum(spec, (), l)
    count = 0
    for x1 in range(spec.q):
        for x2 in range(spec.q):
            v = (x1, x2) + us
            if delta(spec, v) and not delta1(spec, v):
                count += 1
    return count
