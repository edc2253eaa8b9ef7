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


# # Completing a fixed tuple
#
# Fix a non-zero-sum tuple u of length l.  The pairs (x1, x2) that complete
# it to an (l+2)-dim zero-sum subspace are the points of a plane curve off
# the locus where the tuple is dependent.  Counting them and comparing with
# q - 9 * 4^l * sqrt(q) shows how soon the count is forced to be positive.

# +
import numpy as np

from zerosum import curve_point_count

rows = []
for n in range(6, 14):
    c = curve_point_count(n, 1)
    rows.append((n, c.points_on_curve_off_delta, c.hw_lower_bound))
table = np.array(rows)
table
# -

# The ratio to q levels off, so the count grows like q while the bound's
# error term grows like sqrt(q).

table[:, 1] / 2.0 ** table[:, 0]
