# ---
# jupyter:
#   jupytext:
#     formats: py:light
#     text_representation:
#       extension: .py
#       format_name: light
#       format_version: '1.5'
#   kernelspec:
#     display_name: Python 3
#     language: python
#     name: python3
# ---


# # Building certificates in larger fields
#
# Exhaustive search dies quickly.  ``build_zero_sum`` instead tries, in
# order: a GF(2^d)-subspace when d divides both n and k, a seeded
# completion lifted by GF(2^l)-lines (l the smallest prime factor of n),
# and random kernel completion.

# +
import json

from zerosum import (SearchBudget, ZeroSumCertificate, build_zero_sum,
                     span_dim_over_subfield, verify_certificate)

budget = SearchBudget(max_trials=2000, seed=1)
for n, k in [(12, 5), (15, 7), (21, 11), (22, 9)]:
    cert = build_zero_sum(n, k, budget)
    print(n, k, cert.method, "l=%d r=%d t=%d s=%d" % (cert.l, cert.r, cert.t, cert.s))
# -

# A certificate is plain JSON and is checked from scratch: modulus,
# independence, the determinant test, and a brute-force sum when k is small.

cert = build_zero_sum(20, 13, budget)
text = cert.to_json()
print(text)
print(verify_certificate(ZeroSumCertificate.from_json(text)))

# The lifted subspace keeps track of how many GF(2^l)-dimensions it spans.

sub = cert.subspace()
cert.l, span_dim_over_subfield(sub, cert.l) if cert.l else None

# ## GF(2^49)
#
# Here l = 7.  Seeds of dimension 3..9 are lifted by up to three 7-dim
# lines, which reaches every k up to 30; multiples of 7 come from GF(2^7).

big = SearchBudget(max_trials=2000, seed=1, direct_check_max_k=12)
for k in (3, 10, 17, 28, 35):
    c = build_zero_sum(49, k, big, strategies=("subfield-space", "pipeline"))
    print(k, c.method, verify_certificate(c, direct_max_k=12).ok)

# ## How often does a single line lift work?
#
# Adding one GF(2^l)-line v*GF(2^l) to a zero-sum f needs v to hit a root of
# a fixed polynomial.  For some f no such v exists at all, which is why the
# pipeline lifts by a preimage under a GF(2^l)-linear map instead.

# +
from itertools import islice

from zerosum import enumerate_k_subspaces, find_irreducible, is_zero_sum, lift_one
from zerosum.errors import NoSolution

spec = find_irreducible(12)
for l in (2, 3, 4):
    fs = [f for f in islice(enumerate_k_subspaces(spec, 3), 4000)
          if is_zero_sum(f) and span_dim_over_subfield(f, l) < 12 // l][:20]
    wins = 0
    for f in fs:
        try:
            lift_one(f, l)
            wins += 1
        except NoSolution:
            pass
    print(f"l={l}: {wins}/{len(fs)} single-line lifts succeed")
# -
