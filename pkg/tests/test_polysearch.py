import random
from fractions import Fraction as F

import pytest

from waringq.certificate import verify_certificate
from waringq.errors import DimensionMismatch
from waringq.parser import parse_function
from waringq.polysearch import (
    LinearFormSet,
    PowerSumTarget,
    companion,
    jacobian_rank,
    newton_ps_to_elem,
    power_sum_point_search,
    split_roots,
    wp_search_poly,
)


def test_newton_examples():
    assert newton_ps_to_elem([6, 14, 36]) == [6, 11, 6]
    assert newton_ps_to_elem([5]) == [5]
    assert newton_ps_to_elem([0, 0]) == [0, 0]


def test_newton_round_trip():
    rng = random.Random(31)
    for d in range(1, 9):
        for _ in range(5):
            xs = sorted((F(rng.randint(-30, 30), rng.randint(1, 6)) for _ in range(d)), reverse=True)
            ps = [sum(x**j for x in xs) for j in range(1, d + 1)]
            assert sorted(split_roots(companion(newton_ps_to_elem(ps))), reverse=True) == xs


def test_point_search_examples():
    pt = power_sum_point_search(PowerSumTarget(2, (6, 14), 3))
    assert pt is not None and sum(pt) == 6 and sum(x * x for x in pt) == 14
    assert power_sum_point_search(PowerSumTarget(2, (0, 2), 2)) == (1, -1)
    assert power_sum_point_search(PowerSumTarget(2, (0, 1), 2)) is None
    with pytest.raises(DimensionMismatch):
        PowerSumTarget(3, (1, 2, 3), 2)


def test_point_search_successes_verify():
    rng = random.Random(5)
    for _ in range(20):
        d, m = rng.randint(2, 3), rng.randint(3, 5)
        anchor = [F(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(m)]
        c = tuple(sum(x**j for x in anchor) for j in range(1, d + 1))
        pt = power_sum_point_search(PowerSumTarget(d, c, m), budget=300, seed=rng.randrange(100))
        if pt is not None:
            assert len(pt) == m
            assert all(sum(x**j for x in pt) == c[j - 1] for j in range(1, d + 1))


def test_jacobian_examples():
    assert jacobian_rank([0, 1, 2], 2) == 2
    assert jacobian_rank([1, 1], 2) == 1
    assert jacobian_rank([0, 1, 2], 2, LinearFormSet(((3, -1, 7),))) == 3
    with pytest.raises(DimensionMismatch):
        jacobian_rank([0, 1], 2, [[1, 1]])


def test_wp_search_examples():
    f = parse_function("x^3")
    assert wp_search_poly(f, 1).points == [1]
    assert sorted(wp_search_poly(f, 10).points) == [1, 1, 2]
    assert sorted(wp_search_poly(f, 6).points) == [-1, -1, 2]


def test_wp_search_certificates_verify():
    for text, targets in [("x^3 - x", [F(1, 2), 5, -3]), ("x^4 + 1", [3, F(17, 16)]), ("2*x^3 + x^2", [7, F(-1, 3)])]:
        f = parse_function(text)
        for t in targets:
            cert = wp_search_poly(f, t, budget=200)
            if cert is not None:
                assert cert.mode in ("wp", "positive") and verify_certificate(cert)
