"""Building and checking zero-sum subspaces.

The pieces, bottom up:

* :func:`extend_non_zero_sum` appends elements keeping delta_1 != 0.
* :func:`complete_to_zero_sum` adds one element x with delta_1(us, x) = 0
  by taking a kernel vector of the linear map x -> delta_1(us, x).
* :func:`lift_one` / :func:`lift_chain` grow a zero-sum F by whole
  GF(2^l)-lines, l | n.
* :func:`build_zero_sum` strings these together and emits a certificate.

Lifting rests on one identity.  For a subspace V that is itself zero-sum
with subspace polynomial L_V(X) = prod_{w in V} (X + w), and a subspace F
meeting V trivially,

    sum_{0 != x in F + V} 1/x = L_V'(0) * sum_{0 != u in F} 1/L_V(u),

so F + V is zero-sum iff the image L_V(F) is.  Taking V to be a
GF(2^l)-subspace with Im L_V containing GF(2^l)F, the full preimage
L_V^{-1}(F) is a zero-sum subspace of dimension dim F + dim V.
"""

from __future__ import annotations

import json
from functools import lru_cache
from dataclasses import asdict, dataclass, field
from typing import Sequence

from .bitlinalg import (Subspace, echelon, enumerate_k_subspaces, in_span,
                        kernel_of_map, solve_images)
from .errors import (DependentBasis, NotADivisor, NoSolution, NotExist,
                     PreconditionViolated, TooManyGenerators)
from .gf2n import FieldSpec, find_irreducible, subfield_subspace
from .moore import (delta, delta1, delta1_coefficients, direct_inverse_sum,
                    is_zero_sum, linearized_images)
from .rng import SplitMix64, trial_rng
from .unipoly import div_linear, find_roots, from_roots, p_add, p_scale, trim

METHODS = ("subfield-space", "pipeline", "kernel-completion", "lift", "exhaustive")
EXHAUSTIVE_MAX_N = 10
LIFT_ONE_MAX_DIM = 12


@dataclass(frozen=True)
class SearchBudget:
    max_trials: int = 1000
    seed: int = 0
    direct_check_max_k: int = 20

    def __post_init__(self):
        if self.max_trials < 1:
            raise ValueError("max_trials must be >= 1")


@dataclass
class ZeroSumCertificate:
    n: int
    modulus: str
    k: int
    basis: list[str]
    method: str
    seed: int = 0
    l: int = 0
    t: int = 0
    s: int = 0
    r: int = 0

    @classmethod
    def for_subspace(cls, sub: Subspace, method: str, seed: int = 0, **extra) -> "ZeroSumCertificate":
        return cls(n=sub.n, modulus=sub.ambient.hex(), k=sub.k, basis=sub.hex_basis(),
                   method=method, seed=seed, **extra)

    def to_json(self) -> str:
        return json.dumps(asdict(self))

    @classmethod
    def from_json(cls, text: str) -> "ZeroSumCertificate":
        d = json.loads(text)
        return cls(n=int(d["n"]), modulus=str(d["modulus"]), k=int(d["k"]),
                   basis=[str(b) for b in d["basis"]], method=str(d["method"]),
                   seed=int(d.get("seed", 0)), l=int(d.get("l", 0)), t=int(d.get("t", 0)),
                   s=int(d.get("s", 0)), r=int(d.get("r", 0)))

    def subspace(self) -> Subspace:
        spec = FieldSpec(self.n, int(self.modulus, 16))
        return Subspace.from_vectors(spec, (int(b, 16) for b in self.basis))


@dataclass
class VerificationReport:
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = "") -> bool:
        self.checks.append((name, ok, detail))
        return ok

    @property
    def ok(self) -> bool:
        return bool(self.checks) and all(c[1] for c in self.checks)

    def failures(self) -> list[str]:
        return [c[0] for c in self.checks if not c[1]]

    def __str__(self):
        lines = [f"{'PASS' if ok else 'FAIL'} {name}" + (f": {d}" if d else "")
                 for name, ok, d in self.checks]
        return "\n".join(lines)


# -- small helpers -----------------------------------------------------------------

def _smallest_outside(basis: Sequence[int]) -> int:
    """Smallest nonzero int not in span(basis) (basis in echelon form)."""
    x = 1
    while in_span(x, basis):
        x += 1
    return x


def _first_outside(kernel: Sequence[int], sub: Sequence[int]) -> int | None:
    """Smallest element of span(kernel) outside span(sub).

    With an ascending echelon basis, integer order on the span matches the
    order of the combination masks, so the answer is the first basis row
    that is not already in span(sub).
    """
    for row in kernel:
        if not in_span(row, sub):
            return row
    return None


def subfield_span(spec: FieldSpec, basis: Sequence[int], l: int) -> list[int]:
    """Echelon F2-basis of the GF(2^l)-span of ``basis``."""
    sub = subfield_subspace(spec, l).basis
    return echelon(spec.mul(c, u) for c in sub for u in basis)


def span_dim_over_subfield(f: Subspace, l: int) -> int:
    if l < 1 or f.n % l:
        raise NotADivisor(f"{l} does not divide {f.n}")
    return len(subfield_span(f.ambient, f.basis, l)) // l


def _random_in(rng: SplitMix64, basis: Sequence[int]) -> int:
    x = 0
    bits = rng.bits(len(basis)) if basis else 0
    for i, b in enumerate(basis):
        if bits >> i & 1:
            x ^= b
    return x


# -- extension and completion -----------------------------------------------------

def extend_non_zero_sum(spec: FieldSpec, us: Sequence[int], count: int) -> tuple[int, ...]:
    """Append ``count`` elements, each the smallest keeping delta_1 != 0."""
    us = tuple(us)
    if len(us) + count > spec.n - 1:
        raise TooManyGenerators(f"{len(us)} + {count} > n - 1 = {spec.n - 1}")
    if us and not delta(spec, us):
        raise DependentBasis("prefix is F2-dependent")
    for _ in range(count):
        if not us:
            us = (1,)
            continue
        kernel = echelon(kernel_of_map(linearized_images(spec, delta1_coefficients(spec, us))))
        us = us + (_smallest_outside(kernel),)
    return us


def _completion(spec: FieldSpec, us: Sequence[int]) -> int | None:
    kernel = echelon(kernel_of_map(linearized_images(spec, delta1_coefficients(spec, us))))
    if len(kernel) <= len(us):
        return None
    return _first_outside(kernel, echelon(us))


def complete_to_zero_sum(spec: FieldSpec, us: Sequence[int], budget: SearchBudget,
                         pool: Sequence[int] | None = None) -> tuple[tuple[int, ...], int]:
    """Find x making span(us, x) zero-sum.

    Trial 0 uses ``us`` as given; later trials replace the last element by
    a seeded random element of ``pool`` (an F2-basis; whole field if None)
    that keeps the tuple independent.  Returns (the tuple used, x).
    """
    us = tuple(us)
    if not us or not delta(spec, us):
        raise DependentBasis("us must be a nonempty independent tuple")
    head = us[:-1]
    head_span = echelon(head)
    pool_basis = list(pool) if pool is not None else [1 << i for i in range(spec.n)]
    for trial in range(budget.max_trials):
        if trial:
            rng = trial_rng(budget.seed, trial)
            for _ in range(64):
                cand = _random_in(rng, pool_basis)
                if cand and not in_span(cand, head_span):
                    break
            else:
                continue
            us = head + (cand,)
        x = _completion(spec, us)
        if x is not None:
            return us, x
    raise NoSolution(f"no completion within {budget.max_trials} trials")


# -- lifting by GF(2^l)-lines ---------------------------------------------------------

def _check_lift_args(f: Subspace, l: int):
    n = f.n
    if l < 2 or n % l:
        raise PreconditionViolated(f"need l >= 2 dividing n={n}, got l={l}")
    if f.k < 1 or not is_zero_sum(f):
        raise PreconditionViolated("f must be a nonzero zero-sum subspace")


def lift_polynomial(spec: FieldSpec, f: Subspace, l: int) -> tuple[list[int], list[int]]:
    """(G, poles) with sum_{0 != u in f} u^(Q-2)/(u^(Q-1) + w) = G(w)/prod(w + pole).

    Terms sharing the same u^(Q-1) are merged and zero weights dropped.
    """
    Q = 1 << l
    weights: dict[int, int] = {}
    for u in f.elements():
        if u:
            b = spec.pow(u, Q - 1)
            weights[b] = weights.get(b, 0) ^ spec.pow(u, Q - 2)
    poles = sorted(b for b, a in weights.items() if a)
    P = from_roots(spec, poles)
    G: list[int] = []
    for b in poles:
        G = p_add(G, p_scale(spec, div_linear(spec, P, b), weights[b]))
    return trim(G), poles


def lift_one(f: Subspace, l: int, budget: SearchBudget | None = None) -> Subspace:
    """f + v*GF(2^l) zero-sum, v from the roots of the lift polynomial."""
    budget = budget or SearchBudget()
    _check_lift_args(f, l)
    spec = f.ambient
    span_l = subfield_span(spec, f.basis, l)
    if len(span_l) // l + 1 > spec.n // l:
        raise PreconditionViolated("no room for another GF(2^l)-line")
    if f.k > LIFT_ONE_MAX_DIM:
        raise PreconditionViolated(f"lift_one handles dim f <= {LIFT_ONE_MAX_DIM}")
    Q = 1 << l
    line = subfield_subspace(spec, l).basis
    G, poles = lift_polynomial(spec, f, l)

    def accept(v):
        cand = Subspace.from_vectors(spec, f.basis + tuple(spec.mul(v, c) for c in line))
        return cand if cand.k == f.k + l and is_zero_sum(cand) else None

    if not G:
        # the coset sums cancel for every v
        v = _smallest_outside(span_l)
        out = accept(v)
        if out is not None:
            return out
        raise NoSolution("degenerate lift polynomial but candidate failed")
    cands = set()
    for w in find_roots(spec, G, seed=budget.seed):
        if w in poles or not w:
            continue
        root_poly = [w] + [0] * (Q - 2) + [1]
        cands.update(find_roots(spec, root_poly, seed=budget.seed))
    for v in sorted(cands):
        if in_span(v, span_l):
            continue
        out = accept(v)
        if out is not None:
            return out
    raise NoSolution("no root of the lift polynomial gives a new line")


def _trace_perp(spec: FieldSpec, basis: Sequence[int]) -> list[int]:
    """Echelon basis of {y : Tr(u y) = 0 for all u in basis}."""
    images = []
    for j in range(spec.n):
        y = 1 << j
        v = 0
        for i, u in enumerate(basis):
            v |= spec.trace(spec.mul(u, y)) << i
        images.append(v)
    return echelon(kernel_of_map(images))


def _qpoly_eval(spec: FieldSpec, coeffs: Sequence[int], l: int, x: int) -> int:
    acc = 0
    for i, c in enumerate(coeffs):
        if c:
            acc ^= spec.mul(c, spec.frob(x, l * i))
    return acc


def lift_chain(f: Subspace, l: int, t: int, budget: SearchBudget | None = None) -> Subspace:
    """Zero-sum subspace of dim dim(f) + t*l containing a GF(2^l)-space of dim t.

    Picks a GF(2^l)-subspace W inside the trace-dual of GF(2^l)f, forms the
    GF(2^l)-linear map L whose adjoint has kernel W, so Im L contains
    GF(2^l)f and ker L = V is a t-dim GF(2^l)-space, and returns L^{-1}(f).
    """
    budget = budget or SearchBudget()
    _check_lift_args(f, l)
    if t < 0:
        raise PreconditionViolated("t must be >= 0")
    if t == 0:
        return f
    spec = f.ambient
    n, m = spec.n, spec.n // l
    U = subfield_span(spec, f.basis, l)
    s = len(U) // l
    if s + t > m:
        raise PreconditionViolated(f"s + t = {s + t} exceeds n/l = {m}")
    perp = _trace_perp(spec, U)
    Q1 = (1 << l) - 1
    for trial in range(budget.max_trials):
        rng = trial_rng(budget.seed, trial)
        # subspace polynomial of W in Q-power form, W built one line at a time
        ell = [1]
        for _ in range(64 * t):
            if len(ell) - 1 == t:
                break
            w = _random_in(rng, perp)
            val = _qpoly_eval(spec, ell, l, w)
            if not val:
                continue
            beta = spec.pow(val, Q1)
            nxt = [0] * (len(ell) + 1)
            for i, c in enumerate(ell):
                nxt[i + 1] ^= spec.frob(c, l)
                nxt[i] ^= spec.mul(beta, c)
            ell = nxt
        if len(ell) - 1 != t:
            continue
        inv0 = spec.inv(ell[0])
        terms = [(spec.frob(spec.mul(ell[t - i], inv0), l * (m - t + i)), l * i)
                 for i in range(t + 1)]
        images = linearized_images(spec, terms)
        kernel = kernel_of_map(images)
        pre = [solve_images(images, b) for b in f.basis]
        if len(kernel) != l * t or None in pre:
            continue
        out = Subspace.from_vectors(spec, kernel + pre)
        if out.k == f.k + l * t and is_zero_sum(out):
            return out
    raise NoSolution(f"lift by {t} lines failed within {budget.max_trials} trials")


# -- certificates -----------------------------------------------------------------

def verify_certificate(cert: ZeroSumCertificate, direct_max_k: int = 20) -> VerificationReport:
    rep = VerificationReport()
    try:
        expected = find_irreducible(cert.n)
    except Exception as exc:  # noqa: BLE001 - report, never raise
        rep.add("ModulusMismatch", False, str(exc))
        return rep
    try:
        modulus = int(cert.modulus, 16)
    except (TypeError, ValueError):
        modulus = None
    if not rep.add("ModulusMismatch", modulus == expected.modulus,
                   f"expected {expected.hex()}, got {cert.modulus}"):
        return rep
    spec = expected
    try:
        basis = [int(b, 16) for b in cert.basis]
    except (TypeError, ValueError) as exc:
        rep.add("IndependenceFailure", False, f"bad hex: {exc}")
        return rep
    in_range = len(basis) == cert.k and cert.k >= 1 and all(0 < b < spec.q for b in basis)
    if not rep.add("IndependenceFailure", in_range and delta(spec, basis) != 0,
                   f"k={cert.k}, {len(basis)} basis elements"):
        return rep
    rep.add("ZeroSumFailure", delta1(spec, basis) == 0, "delta_1 over the basis")
    if cert.k <= direct_max_k:
        sub = Subspace.from_vectors(spec, basis)
        rep.add("DirectSumMismatch", direct_inverse_sum(sub) == 0,
                "brute-force sum of inverses")
    return rep


# -- the strategy ladder -------------------------------------------------------------

def _min_prime(n: int) -> int:
    p = 2
    while n % p:
        p += 1
    return p


def provably_absent(n: int, k: int) -> bool:
    """Dimensions with no zero-sum subspace: 1, n-1, and 2, n-2 for odd n."""
    if k in (1, n - 1):
        return True
    return n % 2 == 1 and k in (2, n - 2)


def subfield_space(spec: FieldSpec, d: int, m: int) -> Subspace:
    """m-dim GF(2^d)-subspace spanned by smallest-encoding directions."""
    line = subfield_subspace(spec, d).basis
    span: list[int] = []
    for _ in range(m):
        w = _smallest_outside(span) if span else 1
        span = echelon(span + [spec.mul(w, c) for c in line])
    return Subspace(spec, tuple(span))


@lru_cache(maxsize=256)
def pipeline_seed(spec: FieldSpec, l: int, r: int, budget: SearchBudget,
                  restrict: bool = True) -> Subspace:
    """r-dim zero-sum seed, 3 <= r <= l + 2: subfield prefix, extension, completion.

    With ``restrict`` the element added before completion is drawn from
    GF(2^l) + u*GF(2^l), u the extension element, so the seed's
    GF(2^l)-span has dimension at most 3.  Restricted trials after the
    first also redraw u.
    """
    lp = r - 2
    sub = subfield_subspace(spec, l).basis
    prefix = tuple(sub[: lp - 1]) if lp > 1 else (1,)
    us = extend_non_zero_sum(spec, prefix, lp - len(prefix))
    if not restrict:
        start = _smallest_outside(echelon(us))
        used, x = complete_to_zero_sum(spec, us + (start,), budget)
        return Subspace.from_vectors(spec, used + (x,))
    head = us[:-1]
    u = us[-1]
    for trial in range(budget.max_trials):
        if trial:
            rng = trial_rng(budget.seed, trial)
            u = rng.nonzero(spec.n)
            if not delta(spec, head + (u,)):
                continue
        pool = subfield_span(spec, [1, u], l)
        span = echelon(head + (u,))
        if trial:
            x2 = _random_in(rng, pool)
            if in_span(x2, span):
                continue
        else:
            x2 = _first_outside(pool, span)
            if x2 is None:
                continue
        x = _completion(spec, head + (u, x2))
        if x is not None:
            return Subspace.from_vectors(spec, head + (u, x2, x))
    raise NoSolution(f"no restricted seed within {budget.max_trials} trials")


def _verified(sub: Subspace, budget: SearchBudget) -> bool:
    if sub.k < 1 or not is_zero_sum(sub):
        return False
    if sub.k <= budget.direct_check_max_k:
        return direct_inverse_sum(sub) == 0
    return True


def build_zero_sum(n: int, k: int, budget: SearchBudget | None = None,
                   strategies: Sequence[str] = ("subfield-space", "pipeline",
                                                "kernel-completion", "exhaustive"),
                   ) -> ZeroSumCertificate:
    """Certificate for a k-dim zero-sum subspace of GF(2^n), first strategy wins."""
    budget = budget or SearchBudget()
    if not 1 <= k <= n - 1:
        raise PreconditionViolated(f"k={k} outside [1, n-1]")
    if provably_absent(n, k):
        raise NotExist(f"GF(2^{n}) has no {k}-dim zero-sum subspace")
    spec = find_irreducible(n)
    seed = budget.seed

    def done(sub, method, **extra):
        if not _verified(sub, budget):
            return None
        return ZeroSumCertificate.for_subspace(sub, method, seed, **extra)

    for strategy in strategies:
        cert = None
        if strategy == "subfield-space":
            for d in range(2, n + 1):
                if n % d == 0 and k % d == 0:
                    cert = done(subfield_space(spec, d, k // d), strategy,
                                l=d, s=k // d, r=k)
                    break
        elif strategy == "pipeline" and k >= 3:
            cert = _pipeline(spec, k, budget)
        elif strategy == "kernel-completion":
            cert = _kernel_completion(spec, k, budget)
        elif strategy == "exhaustive" and n <= EXHAUSTIVE_MAX_N:
            for sub in enumerate_k_subspaces(spec, k):
                if is_zero_sum(sub):
                    cert = done(sub, strategy, r=k)
                    break
        if cert is not None:
            return cert
    raise NoSolution(f"no {k}-dim zero-sum subspace of GF(2^{n}) found within budget")


def _pipeline(spec: FieldSpec, k: int, budget: SearchBudget) -> ZeroSumCertificate | None:
    n = spec.n
    l = _min_prime(n)
    if l == n:
        return None
    r = (k - 3) % l + 3
    t = (k - r) // l
    for restrict in (True, False):
        try:
            seed_space = pipeline_seed(spec, l, r, budget, restrict=restrict)
        except NoSolution:
            continue
        s = span_dim_over_subfield(seed_space, l)
        if s + t > n // l:
            continue
        try:
            out = lift_chain(seed_space, l, t, budget)
        except NoSolution:
            continue
        if _verified(out, budget):
            return ZeroSumCertificate.for_subspace(out, "pipeline", budget.seed,
                                                   l=l, t=t, s=s, r=r)
    return None


def _random_independent(rng: SplitMix64, n: int, count: int) -> list[int]:
    us: list[int] = []
    span: list[int] = []
    while len(us) < count:
        v = rng.nonzero(n)
        if not in_span(v, span):
            us.append(v)
            span = echelon(span + [v])
    return us


def _kernel_completion(spec: FieldSpec, k: int, budget: SearchBudget
                       ) -> ZeroSumCertificate | None:
    for trial in range(budget.max_trials):
        us = _random_independent(trial_rng(budget.seed, trial), spec.n, k - 1)
        x = _completion(spec, us)
        if x is None:
            continue
        sub = Subspace.from_vectors(spec, us + [x])
        if _verified(sub, budget):
            return ZeroSumCertificate.for_subspace(sub, "kernel-completion", budget.seed, r=k)
    return None


def kernel_completion_rate(n: int, k: int, trials: int, seed: int = 0) -> tuple[int, int]:
    """(successes, trials) of independent kernel-completion attempts at dim k."""
    spec = find_irreducible(n)
    wins = 0
    for trial in range(trials):
        us = _random_independent(trial_rng(seed, trial), spec.n, k - 1)
        if _completion(spec, us) is not None:
            wins += 1
    return wins, trials
