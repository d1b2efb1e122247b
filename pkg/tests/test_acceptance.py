"""Acceptance gate: the fourteen primary verification checks.

Each test runs one check through its wall-clock budget and prints a single
pass/fail line (run pytest with -s or look at captured output).
"""

import pytest

from dicksonnf.verify import _CHECKS, run_check


@pytest.mark.parametrize("fn", _CHECKS, ids=[f"check_{i}" for i in
                                             range(1, len(_CHECKS) + 1)])
def test_acceptance(fn):
    res = run_check(fn)
    status = "PASS" if res.passed else "FAIL"
    print(f"ACCEPTANCE {res.number:2d} {res.name}: {status} "
          f"({res.seconds:.2f}s) -- {res.detail}")
    assert res.passed, f"check {res.number} ({res.name}): {res.detail}"
