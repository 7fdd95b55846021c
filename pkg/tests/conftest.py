import random
from fractions import Fraction

import pytest

from waringq.poly import Poly


def rand_rational(rng, height=20, nonzero=False):
    while True:
        q = Fraction(rng.randint(-height, height), rng.randint(1, height))
        if q or not nonzero:
            return q


def rand_laurent_terms(rng, lo=-5, hi=5, max_support=3, height=20):
    exps = [e for e in range(lo, hi + 1) if e]
    support = rng.sample(exps, rng.randint(1, max_support))
    return {e: rand_rational(rng, height, nonzero=True) for e in support}


@pytest.fixture
def rng():
    return random.Random(12345)


def P(*coeffs):
    """Poly from coefficients written from the leading term down."""
    return Poly(list(reversed(coeffs)))


_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion n")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None or call.when != "call":
        return
    n, title = mark.args
    _ACCEPTANCE[n] = (title, call.excinfo is None, call.duration)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        title, ok, secs = _ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {title}  ({secs:.1f}s)")
