"""Acceptance gate: one test per criterion, each printing its PASS/FAIL line.

Run with ``pytest -s tests/test_acceptance.py`` to see the per-criterion
lines; ``raux verify --suite all`` prints the same report.
"""
import pytest

from raux.verify import CRITERIA, _run

_RESULTS = {}


def _criterion(index):
    if index not in _RESULTS:
        for idx, name, fn in CRITERIA:
            if idx == index:
                _RESULTS[index] = _run(idx, name, fn)
    res = _RESULTS[index]
    status = "PASS" if res.passed else "FAIL"
    print(f"\n{status}  [{res.index:2d}] {res.name} ({res.detail}) [{res.seconds:.1f}s]")
    return res


@pytest.mark.parametrize("index", [1, 2, 3, 4, 5, 6, 7, 9, 10, 11])
def test_criterion(index):
    res = _criterion(index)
    assert res.passed, f"criterion {index}: {res.detail}"


def test_criterion_8_census():
    """Zero census against the published figure count.

    The census machinery itself is cross-validated three ways (expansion
    orders 4 and 8 and the pure contour-quadrature oracle agree, quartered
    boxes are additive, every located zero is verified independently); the
    measured count for the exact stated square is stable at 457, while the
    reference count 472 corresponds to a square about 3% larger.  The
    criterion is asserted as stated; see the detail line for the measured
    value and convention.
    """
    res = _criterion(8)
    assert res.passed, f"criterion 8: {res.detail}"
