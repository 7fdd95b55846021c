"""Small exact number-theory helpers: primes, residues, p-adic squares."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .errors import InvalidPrime


def is_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if n % p == 0:
            return n == p
    # deterministic Miller-Rabin for n < 3.3e24
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(n):
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, v in enumerate(sieve) if v]


def is_square_int(n):
    return n >= 0 and isqrt(n) ** 2 == n


def is_square_rational(q):
    q = Fraction(q)
    return is_square_int(q.numerator) and is_square_int(q.denominator)


def rational_sqrt(q):
    q = Fraction(q)
    return Fraction(isqrt(q.numerator), isqrt(q.denominator))


def valuation(n, p):
    if n == 0:
        raise ValueError("valuation of zero")
    n, v = abs(n), 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def legendre(a, p):
    """Legendre symbol (a|p) for an odd prime p, by Euler's criterion."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def legendre_rational(q, p):
    """(q|p) for a rational q whose numerator and denominator are prime to p."""
    q = Fraction(q)
    return legendre(q.numerator * q.denominator, p)


def is_padic_square(q, p):
    """Whether the non-zero rational q is a square in Q_p."""
    if not is_prime(p):
        raise InvalidPrime(f"{p} is not prime")
    q = Fraction(q)
    if q == 0:
        return True
    a, b = q.numerator, q.denominator
    v = valuation(a, p) - valuation(b, p)
    if v % 2:
        return False
    a //= p ** valuation(a, p)
    b //= p ** valuation(b, p)
    if p == 2:
        return (a * b) % 8 == 1
    return legendre(a * b, p) == 1


def sqrt_mod_prime(a, p):
    """Some r with r^2 = a mod p, or None; Tonelli-Shanks."""
    a %= p
    if a == 0:
        return 0
    if p == 2:
        return a
    if legendre(a, p) != 1:
        return None
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return r
