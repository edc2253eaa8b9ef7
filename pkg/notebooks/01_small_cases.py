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


# # Zero-sum subspaces, small cases
#
# A subspace of GF(2^n) over GF(2) is *zero-sum* when the inverses of its
# nonzero elements add up to zero.  We look at the smallest examples and
# at the determinant test that replaces summing over all 2^k elements.

# +
from zerosum import (Subspace, census_run, delta, delta_i, direct_inverse_sum,
                     find_irreducible, is_zero_sum)

F16 = find_irreducible(4)
print("modulus of GF(16):", F16.hex())
# -

# GF(4) sits inside GF(16) as span{1, 0x6}.  Its inverses permute its
# nonzero elements, so the sum vanishes.

F4 = Subspace.from_vectors(F16, [1, 0x6])
sorted(F4.elements()), direct_inverse_sum(F4)

# The determinant with row exponents 1, 4 (the 2-power 2 left out) detects
# the same thing without enumerating anything.

delta(F16, F4.basis), delta_i(F16, F4.basis, 1), is_zero_sum(F4)

# A random 3-dim subspace of GF(2^12) almost never sums to zero; both
# tests agree.

F4096 = find_irreducible(12)
s = Subspace.from_vectors(F4096, [0x3a1, 0x7c, 0x915])
is_zero_sum(s), direct_inverse_sum(s)

# ## Which dimensions occur?
#
# For n up to 9 an exhaustive sweep is cheap.  The member sets are
# symmetric under k -> n - k, contain 2 exactly for even n, and never
# contain 1 or n - 1.

for n in range(4, 9):
    rep = census_run(n, "exhaustive", counts=True)
    print(n, sorted(rep.members), rep.counts)
