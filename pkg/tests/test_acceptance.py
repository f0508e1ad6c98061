"""
Acceptance criteria, one test each, at the required tolerances and time
budgets. Run directly (``python tests/test_acceptance.py``) for a bare
pass/fail listing; under pytest the same lines appear in the summary.
"""
import sys

import pytest

from pspin.suites import run_suite

CRITERIA = [
    (1, "closed", "closed GUE tables", 2.0),
    (2, "open", "open sector: KP values, open p-spin and open O(2N) lists", 5.0),
    (3, "euler", "Euler characteristics, both routes", 1.0),
    (4, "lie", "O(2N) structure, UUNO, NO anchors", 2.0),
    (5, "gw", "GW CP^1 one-point invariants", 2.0),
    (6, "virasoro", "golden table and mutation detection", 1.0),
    (7, "oracle", "numeric oracle", 5.0),
    (8, "properties", "property suites", 10.0),
]

RESULTS = {}


def evaluate(num, suite, budget):
    checks, secs = run_suite(suite)
    failed = [c for c in checks if not c.ok]
    ok = bool(checks) and not failed and secs < budget
    line = "criterion %d %-10s %s  %3d checks  %d failed  %.2fs (budget %.0fs)" % (
        num, suite, "PASS" if ok else "FAIL", len(checks), len(failed), secs, budget)
    RESULTS[num] = line
    return ok, failed, secs


@pytest.mark.parametrize("num, suite, title, budget", CRITERIA, ids=[c[1] for c in CRITERIA])
def test_criterion(num, suite, title, budget):
    ok, failed, secs = evaluate(num, suite, budget)
    assert secs < budget, "%s took %.2fs" % (title, secs)
    assert not failed, "\n".join("%s: %s" % (c.name, c.detail) for c in failed)
    assert ok


if __name__ == "__main__":
    results = [evaluate(num, suite, budget)[0] for num, suite, _, budget in CRITERIA]
    for num, *_ in CRITERIA:
        print(RESULTS[num])
    sys.exit(0 if all(results) else 1)
