import random
from fractions import Fraction as F

import pytest
import sympy

from waringq.errors import InvalidPrime
from waringq.numtheory import (
    is_padic_square,
    is_prime,
    is_square_rational,
    legendre,
    rational_sqrt,
    sqrt_mod_prime,
    valuation,
)


def test_is_prime_matches_sympy():
    assert all(is_prime(n) == sympy.isprime(n) for n in range(20000))
    rng = random.Random(1)
    for _ in range(200):
        n = rng.randrange(10**12, 10**18)
        assert is_prime(n) == sympy.isprime(n)


def test_legendre_matches_sympy():
    for p in sympy.primerange(3, 200):
        for a in range(1, p):
            assert legendre(a, p) == sympy.legendre_symbol(a, p)


def test_squares():
    assert is_square_rational(F(9, 4)) and rational_sqrt(F(9, 4)) == F(3, 2)
    assert not is_square_rational(F(-4))
    assert not is_square_rational(F(2, 9))
    assert valuation(48, 2) == 4


def test_padic_squares():
    assert not is_padic_square(F(-1), 3)
    assert is_padic_square(F(-1), 5)
    assert is_padic_square(F(-7), 2)  # -7 = 1 mod 8
    assert not is_padic_square(F(3), 2)
    assert not is_padic_square(F(5, 4), 5)  # odd valuation
    assert is_padic_square(F(4, 25), 5)
    with pytest.raises(InvalidPrime):
        is_padic_square(F(2), 9)


def test_sqrt_mod_prime():
    for p in (3, 5, 13, 17, 41, 97, 1009):
        for a in range(1, 30):
            if legendre(a % p, p) == 1:
                r = sqrt_mod_prime(a, p)
                assert r * r % p == a % p
