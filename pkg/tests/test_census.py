import csv
import io
import json
import math

import pytest

from zerosum.census import (affine_sample_check, census_run, curve_point_count,
                            curve_point_count_scan, hw_lower_bound)
from zerosum.construct import SearchBudget, verify_certificate
from zerosum.errors import BudgetExceeded, CapExceeded


@pytest.mark.parametrize("n,expected", [(4, {2}), (5, set()), (6, {2, 3, 4}), (7, {3, 4})])
def test_exhaustive_members(n, expected):
    rep = census_run(n, "exhaustive")
    assert rep.members == expected
    assert all(rep.checks.values())
    for k in expected:
        assert verify_certificate(rep.evidence[k]).ok


@pytest.mark.parametrize("n", [6, 8])
def test_counts_are_symmetric(n):
    rep = census_run(n, "exhaustive", counts=True)
    # 2-dim zero-sum subspaces are exactly the lines a*GF(4)
    assert rep.counts[2] == (2 ** n - 1) // 3
    assert all(rep.counts[k] == rep.counts[n - k] for k in range(1, n))
    assert all((rep.counts[k] > 0) == (k in rep.members) for k in range(1, n))


def test_exhaustive_cap():
    with pytest.raises(CapExceeded):
        census_run(11, "exhaustive")


def test_constructive_mode_and_exports():
    rep = census_run(12, "constructive", SearchBudget(seed=1))
    assert rep.members == set(range(2, 11))
    assert rep.evidence[1] == "not-exist" and rep.evidence[11] == "not-exist"
    assert "symmetry" not in rep.checks and all(rep.checks.values())
    d = json.loads(rep.to_json())
    assert d["members"] == list(range(2, 11))
    rows = list(csv.DictReader(io.StringIO(rep.to_csv())))
    assert [r["k"] for r in rows] == [str(k) for k in range(1, 12)]
    assert rows[0] == {"n": "12", "k": "1", "member": "0", "method": "not-exist"}


def test_affine_check():
    assert affine_sample_check(8, 2000, seed=3) == (True, None)
    with pytest.raises(ValueError):
        affine_sample_check(8, 0)


@pytest.mark.parametrize("n,l", [(5, 1), (6, 1), (7, 2)])
def test_curve_count_matches_scan(n, l):
    assert curve_point_count(n, l).points_on_curve_off_delta == curve_point_count_scan(n, l)


def test_curve_count_fields():
    c = curve_point_count(11, 1)
    assert math.isclose(c.hw_lower_bound, 2 ** 11 - 36 * 2 ** 5.5)
    assert math.isclose(hw_lower_bound(11, 1), 419.0, abs_tol=0.5)
    assert c.exceeds_bound
    assert json.loads(c.to_json())["exceeds_bound"] is True
    with pytest.raises(BudgetExceeded):
        curve_point_count(14, 1)
