"""Signed power-sum representations for Laurent polynomials.

The engine builds balanced signed multisets Z with prescribed power sums
``power_sum(Z, s)`` at every exponent s of a finite set S, then reads off a
representation ``sum f(x_i) - sum f(y_j) = c`` of a target c.

Building blocks:

* For a single exponent s >= 2 the (s-1)-th forward difference of x^s is
  linear, ``sum_i (-1)^i C(s-1, i) (x+s-1-i)^s = s! x + (s-1) s!/2``, so any
  target is hit by solving for x after one extra shift pair u^s - v^s
  (u = v + 1) that moves x off the excluded integers.
* Negative exponents are handled by taking reciprocals of all base points.
* An *annihilator* for (s, t) has power sum 0 at s and non-zero at t;
  products of annihilators (the product of signed multisets is a ring
  product pointwise in s) isolate a single exponent of S.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .certificate import Certificate
from .errors import NotOdd, SearchExhausted
from .multiset import SignedMultiset
from .parser import format_function

ANNIHILATOR_BUDGET = 64

# equal s-th power sums, small witnesses: 1+4 = 2+3, 1+49 = 25+25, 1+1728 = 729+1000
_CURATED = {
    1: ((1, 4), (2, 3)),
    2: ((1, 7), (5, 5)),
    3: ((1, 12), (9, 10)),
}


def delta_configuration(s, x):
    """Points of the (s-1)-th forward difference of x^s at x, as (plus, minus) lists."""
    plus, minus = [], []
    for i in range(s):
        point = x + (s - 1 - i)
        (plus if i % 2 == 0 else minus).extend([point] * comb(s - 1, i))
    return plus, minus


def delta_value(s, x):
    """Closed form s! x + (s-1) s!/2 of the configuration's s-th power sum."""
    return factorial(s) * x + Fraction((s - 1) * factorial(s), 2)


def _delta_rep(s, target, v):
    u = v + 1
    shift = Fraction(u**s - v**s)
    x = (target - shift) / factorial(s) - Fraction(s - 1, 2)
    if x.denominator == 1 and 1 - s <= x <= 0:
        return None
    plus, minus = delta_configuration(s, x)
    return SignedMultiset(plus + [u], minus + [v])


def single_exponent_rep(s, target, shift=1):
    """Balanced Z with power_sum(Z, s) == target.

    Per-sign size is 1 for |s| = 1 and 1 + 2**(|s| - 2) otherwise.  ``shift``
    is the first value of the shift parameter v tried.
    """
    if s == 0:
        raise ValueError("exponent must be non-zero")
    target = Fraction(target)
    if s < 0:
        return single_exponent_rep(-s, target, shift).reciprocal()
    v = shift
    if s == 1:
        while target + v == 0:
            v += 1
        return SignedMultiset([target + v], [v])
    while True:
        z = _delta_rep(s, target, v)
        if z is not None:
            return z
        v += 1


def annihilator(s, t, budget=ANNIHILATOR_BUDGET):
    """Balanced W with power_sum(W, s) == 0 and power_sum(W, t) != 0."""
    if s == 0 or t == 0 or s == t:
        raise ValueError("need distinct non-zero exponents")
    if s < 0:
        return annihilator(-s, -t, budget).reciprocal()
    if s in _CURATED:
        w = SignedMultiset(*_CURATED[s])
        if w.power_sum(t) != 0:
            return w
    if s >= 2:
        for v in range(1, budget + 1):
            z = _delta_rep(s, 0, v)
            if z is not None and z.power_sum(t) != 0:
                return z
    raise SearchExhausted(f"no annihilator for s={s}, t={t} within {budget} shifts")


def separator(t, exponents):
    """Product of annihilators: zero power sum on exponents - {t}, non-zero at t."""
    others = sorted(set(exponents) - {t})
    if t not in exponents:
        raise ValueError(f"{t} is not in the exponent set")
    if not others:
        raise ValueError("a singleton exponent set needs no separator")
    e = annihilator(others[0], t)
    for s in others[1:]:
        e = e * annihilator(s, t)
    return e


def vector_rep(exponents, targets, shift=1):
    """Balanced Z with power_sum(Z, s) == targets[s] for every s in exponents."""
    exponents = sorted(set(exponents))
    if not exponents or 0 in exponents:
        raise ValueError("exponent set must be non-empty and avoid 0")
    if set(targets) != set(exponents):
        raise ValueError("targets must be keyed by exactly the exponent set")
    nonzero = [t for t in exponents if targets[t] != 0]
    if not nonzero:
        return SignedMultiset([shift], [shift])
    if len(exponents) == 1:
        return single_exponent_rep(exponents[0], targets[exponents[0]], shift)
    total = None
    for t in nonzero:
        e = separator(t, exponents)
        scale = Fraction(targets[t]) / e.power_sum(t)
        term = e * single_exponent_rep(t, scale, shift)
        total = term if total is None else total + term
    return total


def _lead_exponent(support):
    # smallest |s| keeps the certificate small; ties go to the positive exponent
    return min(support, key=lambda s: (abs(s), s < 0))


def ewp_multiset(f, c, shift=1):
    """Signed multiset Z with sum f(plus) - sum f(minus) == c."""
    support = f.support
    if not support:
        raise ValueError("f must be a non-constant Laurent polynomial")
    s0 = _lead_exponent(support)
    targets = dict.fromkeys(support, Fraction(0))
    targets[s0] = Fraction(c) / f.terms[s0]
    return vector_rep(support, targets, shift)


def ewp_represent(f, c, shift=1):
    z = ewp_multiset(f, c, shift)
    return Certificate(
        function=format_function(f.to_rational_function()),
        mode="ewp",
        target=Fraction(c),
        terms=z.signed_terms(),
        engine_n=z.size,
    )


def wp_represent_odd(f, c, shift=1):
    """Unsigned representation for odd f: f(-y) = -f(y) absorbs every minus sign."""
    if not f.is_odd():
        raise NotOdd("all exponents must be odd and the constant term zero")
    z = ewp_multiset(f, c, shift)
    points = list(z.plus) + [-y for y in z.minus]
    return Certificate(
        function=format_function(f.to_rational_function()),
        mode="wp",
        target=Fraction(c),
        terms=[(1, x) for x in points],
        engine_n=len(points),
    )
