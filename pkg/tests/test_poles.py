import random
from fractions import Fraction as F

import pytest

from waringq.certificate import verify_certificate
from waringq.errors import InvalidPrime, SquareDiscriminant
from waringq.numtheory import primes_up_to, valuation
from waringq.parser import parse_function
from waringq.poles import (
    IMPOSSIBLE,
    INFINITY,
    PASS,
    factor_over_q,
    inert_prime_witness,
    obstruction_report,
    padic_pole_exists,
    padic_root_witness,
    pole_profile,
    rational_pole_profile,
    real_pole_profile,
)

from conftest import P


def euler(a, p):
    """Euler's criterion by explicit repeated squaring."""
    a %= p
    result, base, e = 1, a, (p - 1) // 2
    while e:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return -1 if result == p - 1 else result


def test_rational_pole_profile():
    assert rational_pole_profile(parse_function("(x^2+1)/(x^2-4)")) == [(-2, 1), (2, 1)]
    assert rational_pole_profile(parse_function("x^3")) == [(INFINITY, 3)]
    assert rational_pole_profile(parse_function("1/x^2")) == [(0, 2)]


def test_real_pole_profile():
    assert real_pole_profile(parse_function("1/(x^2+1)")) == (0, False)
    assert real_pole_profile(parse_function("1/(x^2-2)")) == (2, True)
    assert real_pole_profile(parse_function("x^3")) == (1, True)
    assert real_pole_profile(parse_function("x^2")) == (1, False)
    prof = pole_profile(parse_function("1/((x^2-2)^2*(x^2+3))"))
    assert prof.real_pole_count == 2 and not prof.has_odd_order_real_pole


def test_padic_pole_exists_examples():
    f = parse_function("1/(x^2+1)")
    assert padic_pole_exists(f, 3) == "No"
    assert padic_pole_exists(f, 5) == "Yes"
    assert padic_pole_exists(parse_function("x^3"), 7) == "Yes"
    assert padic_pole_exists(parse_function("1/(x^3-2)"), 7) == "Unknown"
    with pytest.raises(InvalidPrime):
        padic_pole_exists(f, 15)


def test_padic_yes_has_hensel_witness():
    rng = random.Random(8)
    checked = 0
    for _ in range(60):
        q = P(rng.randint(1, 5), rng.randint(-9, 9), rng.randint(-9, 9))
        if [g.degree for g, _ in factor_over_q(q)] != [2]:
            continue
        f = 1 / parse_function(f"({q.coeff(2)})*x^2 + ({q.coeff(1)})*x + ({q.coeff(0)})")
        for p in primes_up_to(30):
            if padic_pole_exists(f, p) != "Yes":
                continue
            w = padic_root_witness(q, p)
            assert w is not None, (q, p)
            r, k, rev = w
            a, b, c = q.integer_coeffs()[2], q.integer_coeffs()[1], q.integer_coeffs()[0]
            if rev:
                a, c = c, a
            val, der = a * r * r + b * r + c, 2 * a * r + b
            assert val % p**k == 0 or val == 0
            vd = valuation(der, p)
            assert 2 * vd < k and (val == 0 or valuation(val, p) > 2 * vd)
            checked += 1
    assert checked > 20


def test_inert_prime_examples():
    assert inert_prime_witness(F(-4)) == 3
    assert inert_prime_witness(F(8)) == 3
    with pytest.raises(SquareDiscriminant):
        inert_prime_witness(F(9))


def test_inert_prime_euler_recheck():
    rng = random.Random(13)
    for _ in range(300):
        d = F(rng.randint(-500, 500), rng.randint(1, 50))
        if d == 0 or (d > 0 and int(d.numerator**0.5) ** 2 == d.numerator
                      and int(d.denominator**0.5) ** 2 == d.denominator):
            continue
        try:
            p = inert_prime_witness(d)
        except SquareDiscriminant:
            continue
        assert euler(d.numerator * d.denominator, p) == -1


def test_obstruction_report_examples():
    r = obstruction_report(parse_function("x^2"))
    assert r.wp_verdict == IMPOSSIBLE and r.ewp_verdict == PASS
    r = obstruction_report(parse_function("1/(x^2+1)"))
    assert r.ewp_verdict == IMPOSSIBLE and any(w.kind == "no-real-pole" for w in r.witnesses)
    r = obstruction_report(parse_function("x^3"))
    assert r.wp_verdict == PASS and r.ewp_verdict == PASS


def test_impossible_always_has_checkable_witness():
    rng = random.Random(17)
    for _ in range(60):
        num = P(*[rng.randint(-5, 5) for _ in range(rng.randint(1, 3))]) + P(1)
        den = P(*([rng.randint(1, 3)] + [rng.randint(-6, 6) for _ in range(rng.randint(0, 3))]))
        if num.is_zero or den.is_zero:
            continue
        from waringq.functions import RationalFunction

        f = RationalFunction(num, den)
        if f.is_constant():
            continue
        r = obstruction_report(f)
        if IMPOSSIBLE in (r.wp_verdict, r.ewp_verdict):
            certs = r.certificates(f)
            assert certs and all(verify_certificate(c) for c in certs), f
