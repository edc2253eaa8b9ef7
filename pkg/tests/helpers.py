"""Test-harness helpers shared by unit and acceptance tests."""

from zerosum.moore import delta, delta_i, eval_Fk
from zerosum.rng import SplitMix64


def moore_product(spec, vs):
    """Product of every nonzero F2-combination of vs."""
    acc = 1
    for mask in range(1, 1 << len(vs)):
        s = 0
        for i, v in enumerate(vs):
            if mask >> i & 1:
                s ^= v
        acc = spec.mul(acc, s)
    return acc


def expansion_value(spec, xs, us):
    """Value of F at (xs, us) rebuilt from its expansion in the first variable.

    Coefficient of x^(2^i) is F(rest) * delta_i(rest) / delta(rest) for
    i < len(rest), F(rest) for the top term, plus delta(rest)^2 as the
    constant, where rest = (xs[1:], us).  None where delta(rest) = 0.
    """
    rest = tuple(xs[1:]) + tuple(us)
    d = delta(spec, rest)
    if not d:
        return None
    top = eval_Fk(spec, rest)
    dinv = spec.inv(d)
    acc = spec.sqr(d)
    for i in range(len(rest) + 1):
        c = spec.mul(top, spec.mul(delta_i(spec, rest, i), dinv))
        acc ^= spec.mul(c, spec.frob(xs[0], i))
    return acc


def random_independent(rng: SplitMix64, n: int, k: int) -> tuple[int, ...]:
    from zerosum.bitlinalg import in_span, echelon
    out: list[int] = []
    while len(out) < k:
        v = rng.nonzero(n)
        if not in_span(v, echelon(out)):
            out.append(v)
    return tuple(out)


def coset_sum_formula(spec, f_elements, v, l):
    """sum over 0 != u in f of u^(Q-2) / (u^(Q-1) + v^(Q-1)), Q = 2^l."""
    Q = 1 << l
    vq = spec.pow(v, Q - 1)
    acc = 0
    for u in f_elements:
        if u:
            acc ^= spec.mul(spec.pow(u, Q - 2), spec.inv(spec.pow(u, Q - 1) ^ vq))
    return acc


def line_sum(spec, f, v, l):
    """The subspace f + v*GF(2^l)."""
    from zerosum.bitlinalg import Subspace
    from zerosum.gf2n import subfield_subspace
    line = [spec.mul(v, c) for c in subfield_subspace(spec, l).basis]
    return Subspace.from_vectors(spec, f.basis + tuple(line))
