"""Acceptance criteria, one test per criterion, each under its wall-clock budget.

Run directly (``python tests/test_acceptance.py``) or through pytest; either
way one PASS/FAIL line per criterion is printed.
"""

import sys
import time

import pytest

from fdpairs.selftest import CRITERIA, run_check

# seconds; criteria without a stated budget get a generous desk-scale one
BUDGETS = {1: 1, 2: 1, 3: 120, 4: 120, 5: 120, 6: 120, 7: 60, 8: 120, 9: 120, 10: 300}

RESULTS: dict[int, str] = {}


def _run(number: int):
    start = time.perf_counter()
    res = run_check(number)
    elapsed = time.perf_counter() - start
    in_time = elapsed <= BUDGETS[number]
    ok = res.ok and in_time
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:2d}: {res.name} ({elapsed:.2f}s / {BUDGETS[number]}s)"
    RESULTS[number] = line
    return res, in_time, line


@pytest.mark.parametrize("number", [num for num, _, _ in CRITERIA], ids=lambda n: f"criterion_{n:02d}")
def test_criterion(number):
    res, in_time, line = _run(number)
    print(line)
    bad = [d for d in res.details if d.startswith("BAD")]
    assert res.ok, "\n".join(bad)
    assert in_time, line


def test_budget_of_third_criterion_parts():
    # the m=3 verification and the m=4 spectrum each have their own limit
    from fdpairs.constructions import dircon1, dircon1_spectrum
    from fdpairs.duality import verify_formally_dual, verify_primitive
    from fdpairs.group_ring import difference_spectrum

    p = dircon1(3)
    t = time.perf_counter()
    assert verify_formally_dual(p.group, p.S, p.T).ok
    assert verify_primitive(p.group, p.S).primitive and verify_primitive(p.group, p.T).primitive
    assert time.perf_counter() - t <= 60
    q = dircon1(4)
    t = time.perf_counter()
    assert difference_spectrum(q.group, q.T) == dircon1_spectrum(4)
    assert time.perf_counter() - t <= 60


if __name__ == "__main__":
    failed = 0
    for num, _, _ in CRITERIA:
        res, in_time, line = _run(num)
        print(line)
        failed += not (res.ok and in_time)
    sys.exit(1 if failed else 0)
