"""Four-square decompositions of non-negative integers and rationals.

``four_squares_int`` returns the lexicographically largest non-increasing
quadruple: the largest part is chosen greedily subject to the remainder being
a sum of three squares (Legendre), the second subject to the remainder being a
sum of two squares, and the last two parts come from the Gaussian-integer
factorization of what is left.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import isqrt

from sympy import factorint

from .numtheory import sqrt_mod_prime


def is_sum_of_three_squares(n):
    if n < 0:
        return False
    if n == 0:
        return True
    while n % 4 == 0:
        n //= 4
    return n % 8 != 7


def _prime_as_two_squares(p):
    """(a, b) with a^2 + b^2 = p for p = 2 or p = 1 mod 4 (Cornacchia)."""
    if p == 2:
        return 1, 1
    r = sqrt_mod_prime(p - 1, p)
    a, b = p, r
    limit = isqrt(p)
    while b > limit:
        a, b = b, a % b
    return b, isqrt(p - b * b)


def two_square_representations(n):
    """All (y, z) with y >= z >= 0 and y^2 + z^2 = n."""
    if n < 0:
        return []
    if n == 0:
        return [(0, 0)]
    if n % 4 == 3:
        return []
    factors = factorint(n)
    scale = 1
    choices = []
    for p, e in factors.items():
        if p % 4 == 3:
            if e % 2:
                return []
            scale *= p ** (e // 2)
        elif p == 2:
            choices.append([[(1, 1)] * e])
        else:
            a, b = _prime_as_two_squares(p)
            opts = []
            for k in range(e + 1):
                opts.append([(a, b)] * k + [(a, -b)] * (e - k))
            choices.append(opts)
    reps = set()
    for combo in product(*choices):
        re, im = scale, 0
        for group in combo:
            for a, b in group:
                re, im = re * a - im * b, re * b + im * a
        y, z = sorted((abs(re), abs(im)), reverse=True)
        reps.add((y, z))
    return sorted(reps, reverse=True)


def four_squares_int(n):
    """Lexicographically largest (w, x, y, z), w >= x >= y >= z >= 0, with squares summing to n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return (0, 0, 0, 0)
    for w in range(isqrt(n), -1, -1):
        r = n - w * w
        if not is_sum_of_three_squares(r):
            continue
        for x in range(isqrt(r), -1, -1):
            reps = two_square_representations(r - x * x)
            if reps:
                y, z = reps[0]
                return tuple(sorted((w, x, y, z), reverse=True))
    raise AssertionError(f"no four-square decomposition for {n}")  # Lagrange


def four_positive_squares_int(n, max_steps=100_000):
    """A decomposition into four strictly positive squares, or None."""
    steps = 0
    for w in range(isqrt(max(n - 3, 0)), 0, -1):
        r = n - w * w
        if not is_sum_of_three_squares(r):
            continue
        for x in range(min(w, isqrt(max(r - 2, 0))), 0, -1):
            steps += 1
            if steps > max_steps:
                return None
            for y, z in two_square_representations(r - x * x):
                if z > 0:
                    return tuple(sorted((w, x, y, z), reverse=True))
    return None


def four_squares_rat(t):
    """Four non-negative rationals whose squares sum to t (t = pq/q^2 reduction)."""
    t = Fraction(t)
    if t < 0:
        raise ValueError("t must be non-negative")
    n = t.numerator * t.denominator
    return tuple(Fraction(c, t.denominator) for c in four_squares_int(n))


def four_positive_squares_rat(t, max_scale=64):
    """Four strictly positive rationals whose squares sum to t > 0, or None."""
    t = Fraction(t)
    if t <= 0:
        return None
    for k in range(1, max_scale + 1):
        q = t.denominator * k
        rep = four_positive_squares_int(t.numerator * t.denominator * k * k)
        if rep is not None:
            return tuple(Fraction(c, q) for c in rep)
    return None
