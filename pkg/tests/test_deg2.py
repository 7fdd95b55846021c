import random
from fractions import Fraction as F

import pytest
import sympy

from waringq import deg2
from waringq.certificate import verify_certificate
from waringq.errors import OutOfRange, WrongCase, WrongDegree
from waringq.functions import LaurentPolynomial, MobiusTransform, RationalFunction, mobius_compose
from waringq.parser import parse_function
from waringq.poly import count_real_roots

X = RationalFunction.x()


def test_classification_examples():
    assert deg2.classify_deg2(parse_function("(x^2+1)/(x^2-4)")).case == deg2.TWO_POLES
    assert deg2.classify_deg2(parse_function("x^2+3")).case == deg2.DOUBLE_POLE
    c = deg2.classify_deg2(parse_function("1/(x^2+1)"))
    assert c.case == deg2.NO_POLE and c.discriminant == -4
    with pytest.raises(WrongDegree):
        deg2.classify_deg2(parse_function("x^3"))


def test_normalize_examples():
    g, a, b, c = deg2.normalize_two_poles(parse_function("(x^2+1)/x"))
    assert g == MobiusTransform.identity() and (a, b, c) == (1, 0, 1)
    g, a, b, c = deg2.normalize_two_poles(parse_function("1/x + 1/(x-1)"))
    assert g == MobiusTransform(1, 0, 1, 1) and (a, b, c) == (-1, 0, 1)
    g, a, b, c = deg2.normalize_two_poles(parse_function("x^2/(x^2-1)"))
    assert g == MobiusTransform(1, -1, 1, 1) and (a, b, c) == (F(-1, 4), F(1, 2), F(-1, 4))
    with pytest.raises(WrongCase):
        deg2.normalize_two_poles(parse_function("x^2+1"))


def test_normal_form_identities():
    rng = deg2.make_rng(2)
    for _ in range(80):
        f = deg2.random_deg2(rng)
        cls = deg2.classify_deg2(f)
        if cls.case == deg2.TWO_POLES:
            assert cls.a * cls.c != 0
            assert mobius_compose(f, cls.g) - cls.b == cls.a * X + cls.c / X
        elif cls.case == deg2.DOUBLE_POLE:
            h = mobius_compose(f, cls.g)
            shift = X + cls.b / (2 * cls.a)
            assert h - (cls.a * shift * shift + cls.d0) == RationalFunction.const(0)


@pytest.mark.parametrize("text", ["(x^2+1)/x", "1/x + 1/(x-1)", "x^2/(x^2-1)", "(x^2+1)/(x^2-4)", "(3*x^2+1)/(x^2-2*x)"])
def test_caseA_certificates(text):
    f = parse_function(text)
    for t in (F(0), F(1), F(-7, 3), F(100), F(1, 9)):
        cert = deg2.caseA_wp_rep(f, t)
        assert cert.mode == "wp" and all(s == 1 for s, _ in cert.terms)
        assert verify_certificate(cert)
        assert verify_certificate(deg2.caseA_ewp_rep(f, t))


def test_caseB_positive_examples():
    cert = deg2.caseB_positive_rep(parse_function("x^2+1"), 9)
    assert sorted(cert.points, reverse=True) == [2, 1, 0, 0]
    cert = deg2.caseB_positive_rep(parse_function("2*x^2-4*x+3"), 17)
    assert sorted(cert.points, reverse=True) == [F(7, 2), F(3, 2), 1, 1]
    assert verify_certificate(cert)
    with pytest.raises(OutOfRange):
        deg2.caseB_positive_rep(parse_function("x^2+1"), 0)


def test_caseB_positive_avoids_pole():
    # pole of g at 0 after moving the double pole at 1 to infinity
    f = parse_function("x^2/(x-1)^2")
    rng = random.Random(4)
    for _ in range(30):
        t = F(rng.randint(5, 200), rng.randint(1, 4))
        try:
            cert = deg2.caseB_positive_rep(f, t)
        except OutOfRange:
            continue
        assert len(cert.terms) == 4 and verify_certificate(cert)


def test_caseB_ewp_examples():
    cert = deg2.caseB_ewp_rep(parse_function("x^2"), 5)
    assert cert.terms == [(1, 3), (-1, 2)]
    cert = deg2.caseB_ewp_rep(parse_function("2*x^2-4*x+3"), 1)
    assert cert.terms == [(1, F(7, 4)), (-1, F(3, 4))]
    for d in (0, 5, F(-7, 2)):
        for t in (3, F(1, 2), -8):
            cert = deg2.caseB_ewp_rep(parse_function(f"x^2 + ({d})"), t)
            assert cert.terms == [(1, F(t + 1, 2)), (-1, F(t - 1, 2))]


def test_caseB_obstruction_examples():
    for text, kind, bound in [("x^2+1", "real-bounded-below", 1), ("-x^2", "real-bounded-above", 0),
                              ("2*x^2-4*x+3", "real-bounded-below", 1)]:
        cert = deg2.caseB_obstruction(parse_function(text))
        assert cert.obstruction.kind == kind and cert.obstruction.bound == bound
        assert verify_certificate(cert)


def test_caseC_obstruction_examples():
    cert = deg2.caseC_obstruction(parse_function("1/(x^2+1)"))
    assert cert.obstruction.prime == 3
    assert [o.kind for o in cert.supporting] == ["no-real-pole"]
    assert verify_certificate(cert)
    cert = deg2.caseC_obstruction(parse_function("1/(x^2-2)"))
    assert cert.obstruction.prime == 3 and cert.supporting == []
    assert verify_certificate(cert)


def test_caseC_real_witness_only_without_real_poles():
    rng = deg2.make_rng(6)
    seen = 0
    while seen < 25:
        f = deg2.random_deg2(rng)
        cls = deg2.classify_deg2(f)
        if cls.case != deg2.NO_POLE:
            continue
        seen += 1
        cert = deg2.caseC_obstruction(f)
        assert bool(cert.supporting) == (count_real_roots(f.den) == 0)
        assert sympy.legendre_symbol(
            (cls.discriminant.numerator * cls.discriminant.denominator) % cert.obstruction.prime,
            cert.obstruction.prime,
        ) == -1
