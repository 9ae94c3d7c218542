from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from terai.descent import THEOREM_CONSISTENT
from terai.solver import (
    INCONCLUSIVE,
    Bounds,
    SolutionRecord,
    find_solutions,
    verify_instance,
    verify_range,
)
from terai.triples import InstanceError, make_instance, scan_instances

from brute import solutions_double_loop


def triples(sols):
    return [s.as_tuple() for s in sols]


@pytest.mark.parametrize(
    "b, c, y_max, z_max, expected",
    [
        (21, 29, 20, 20, [(20, 2, 2)]),
        (35, 37, 20, 20, [(12, 2, 2)]),
        (3, 5, 10, 10, [(4, 2, 2)]),
    ],
)
def test_find_solutions_examples(b, c, y_max, z_max, expected):
    assert triples(find_solutions(b, c, y_max, z_max)) == expected


def test_find_solutions_sorted_and_multi():
    # 1 + 2 = 3, 1 + 8 = 9, 25 + 2 = 27, 49 + 32 = 81
    sols = triples(find_solutions(2, 3, 10, 10))
    assert sols == [(1, 1, 1), (1, 3, 2), (5, 1, 3), (7, 5, 4)]
    assert sols == solutions_double_loop(2, 3, 10, 10)


@pytest.mark.parametrize("b, c", [(6, 9), (1, 5), (5, 1)])
def test_find_solutions_rejects(b, c):
    with pytest.raises(ValueError):
        find_solutions(b, c, 5, 5)


def test_find_solutions_matches_double_loop_small_grid():
    for b in range(2, 40):
        for c in range(2, 40):
            if gcd(b, c) == 1:
                assert triples(find_solutions(b, c, 8, 8)) == solutions_double_loop(b, c, 8, 8), (b, c)


@settings(max_examples=60, deadline=None)
@given(
    st.integers(min_value=2, max_value=100),
    st.integers(min_value=2, max_value=100),
    st.integers(min_value=1, max_value=8),
    st.integers(min_value=1, max_value=8),
    st.integers(min_value=0, max_value=4),
    st.integers(min_value=0, max_value=4),
)
def test_find_solutions_monotone(b, c, y_max, z_max, dy, dz):
    if gcd(b, c) != 1:
        return
    small = set(find_solutions(b, c, y_max, z_max))
    large = set(find_solutions(b, c, y_max + dy, z_max + dz))
    assert small <= large
    for s in large:
        assert s.x**2 + b**s.y == c**s.z


def test_theorem_up_to_40():
    for inst in scan_instances(40):
        assert triples(find_solutions(inst.b, inst.c, 40, 40)) == [inst.expected_solution]


@pytest.mark.parametrize("m, n, x", [(5, 2, 20), (9, 2, 36), (10, 3, 60)])
def test_verify_instance_examples(m, n, x):
    rep = verify_instance(make_instance(m, n))
    assert rep.verdict == THEOREM_CONSISTENT, rep.violations
    assert triples(rep.solutions) == [(x, 2, 2)]
    assert rep.parity.valid
    assert len(rep.traces) == 1 and rep.traces[0].consistent
    assert {o.window.name for o in rep.oracles} >= {"cohn", "corollary-c", "lemma-l2"}


def test_verify_9_2_numbers():
    assert 85**2 - 77**2 == 7225 - 5929 == 1296 == 36**2


def test_verify_rejects_non_qualifying():
    with pytest.raises(InstanceError):
        verify_instance(make_instance(4, 1))


def test_verify_small_bounds_inconclusive():
    rep = verify_instance(make_instance(5, 2), Bounds(y_max=1, z_max=1))
    assert rep.verdict == INCONCLUSIVE
    assert rep.solutions == []
    assert Bounds(y_max=1).below_defaults() == ["y_max"]


def test_verify_reports_violation(monkeypatch):
    import terai.solver as solver

    def fake(b, c, y_max, z_max):
        return [SolutionRecord(20, 2, 2), SolutionRecord(1, 1, 1)]

    monkeypatch.setattr(solver, "find_solutions", fake)
    rep = solver.verify_instance(make_instance(5, 2))
    assert rep.verdict == "VIOLATION"
    assert any("unexpected solution" in v for v in rep.violations)
    assert any(v.startswith("descent[precondition]") for v in rep.violations)


def test_bounds_validation():
    with pytest.raises(ValueError):
        Bounds(y_max=0)


@pytest.mark.parametrize("m_max, count", [(10, 5), (4, 0), (5, 1)])
def test_verify_range(m_max, count):
    reports = verify_range(m_max)
    assert len(reports) == count
    assert all(r.verdict == THEOREM_CONSISTENT for r in reports)


def test_verify_range_parallel_matches_serial():
    serial = verify_range(12)
    parallel = verify_range(12, jobs=2)
    assert [(r.instance.m, r.instance.n, r.verdict) for r in serial] == [
        (r.instance.m, r.instance.n, r.verdict) for r in parallel
    ]


def test_verify_consults_oracle_branch_when_b_divides_k():
    # b = 21 for (5, 2), so k = 21 reaches the oracle branch.
    rep = verify_instance(make_instance(5, 2), Bounds(k_max=21))
    branch = [o for o in rep.oracles if o.window.name == "oracle-branch"]
    assert [o.window.as_dict() for o in branch] == [
        {"r": r, "k": 21, "a_prime": 1} for r in range(3, 16, 2)
    ]
    assert all(o.hits == () for o in branch)
    assert rep.verdict == THEOREM_CONSISTENT


def test_full_default_grid_matches_double_loop():
    for inst in scan_instances(15):
        assert triples(find_solutions(inst.b, inst.c, 40, 40)) == solutions_double_loop(inst.b, inst.c, 40, 40)
