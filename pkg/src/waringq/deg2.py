"""Decision procedure and certificates for rational functions of degree 2.

Classification is by the poles on QP^1:

* two distinct rational poles: a fractional linear change of variable g
  moves them to 0 and infinity, giving f(g(x)) = a x + b + c/x.  The odd part
  a x + c/x is handled by the Laurent engine, the constant b by counting terms.
* one rational (double) pole: moved to infinity, f(g(x)) = a x^2 + b x + c is
  bounded on one side by d0 = c - b^2/(4a); four squares reach every value
  past 4 d0, and a difference of two values reaches everything.
* no rational pole: the denominator is an irreducible quadratic, and a prime
  at which its discriminant is a non-residue bounds f p-adically.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .certificate import Certificate, Obstruction
from .errors import OutOfRange, SearchExhausted, WrongCase, WrongDegree
from .ewp import ewp_multiset, wp_represent_odd
from .functions import LaurentPolynomial, MobiusTransform, RationalFunction, mobius_compose
from .foursquare import four_positive_squares_rat, four_squares_rat
from .numtheory import is_square_rational, rational_sqrt
from .parser import format_function
from .poles import inert_prime_witness, real_pole_profile
from .poly import Poly

TWO_POLES = "TwoRationalPoles"
DOUBLE_POLE = "OneRationalDoublePole"
NO_POLE = "NoRationalPole"

FIXPOINT_ITERATIONS = 8
SHIFT_RETRIES = 64


@dataclass(frozen=True)
class Deg2Class:
    case: str
    g: MobiusTransform | None = None
    a: Fraction | None = None
    b: Fraction | None = None
    c: Fraction | None = None
    d0: Fraction | None = None
    discriminant: Fraction | None = None

    @property
    def normal_form(self):
        return self.a, self.b, self.c


def classify_deg2(f):
    if f.degree != 2:
        raise WrongDegree(f"degree is {f.degree}, not 2")
    den = f.den
    if den.degree == 0:
        return _double_pole(f, MobiusTransform.identity())
    if den.degree == 1:
        r = -den.coeff(0)
        return _two_poles(f, MobiusTransform(1, r, 0, 1))
    disc = den.coeff(1) ** 2 - 4 * den.coeff(0)
    if disc == 0:
        r = -den.coeff(1) / 2
        return _double_pole(f, MobiusTransform(r, 1, 1, 0))
    if is_square_rational(disc):
        root = rational_sqrt(disc)
        lo = (-den.coeff(1) - root) / 2
        hi = (-den.coeff(1) + root) / 2
        return _two_poles(f, MobiusTransform(hi, lo, 1, 1))
    return Deg2Class(NO_POLE, discriminant=disc)


def _two_poles(f, g):
    h = mobius_compose(f, g)
    if h.den != Poly.x() or h.num.degree != 2:
        raise AssertionError(f"normalization failed: {h}")
    c, b, a = h.num.coeffs
    return Deg2Class(TWO_POLES, g, a, b, c)


def _double_pole(f, g):
    h = mobius_compose(f, g)
    if not h.is_polynomial() or h.num.degree != 2:
        raise AssertionError(f"normalization failed: {h}")
    c, b, a = h.num.coeffs
    return Deg2Class(DOUBLE_POLE, g, a, b, c, d0=c - b * b / (4 * a))


def _require(f, case):
    cls = classify_deg2(f)
    if cls.case != case:
        raise WrongCase(f"expected {case}, got {cls.case}")
    return cls


def normalize_two_poles(f):
    cls = _require(f, TWO_POLES)
    return cls.g, cls.a, cls.b, cls.c


def _pad_point(avoid, used_shift):
    w = Fraction(used_shift)
    while w in avoid or -w in avoid:
        w += 1
    return w


def caseA_wp_rep(f, target):
    """Unsigned representation via the odd Laurent polynomial a x + c/x."""
    cls = _require(f, TWO_POLES)
    target = Fraction(target)
    g, b = cls.g, cls.b
    h = LaurentPolynomial({1: cls.a, -1: cls.c})
    avoid = {g.pole} if g.pole is not None else set()
    n = len(wp_represent_odd(h, 0).terms)
    for shift in range(1, SHIFT_RETRIES + 1):
        points = None
        for _ in range(FIXPOINT_ITERATIONS):
            xs = wp_represent_odd(h, target - n * b, shift).points
            if len(xs) == n:
                points = xs
                break
            if len(xs) < n:
                w = _pad_point(avoid, shift)
                points = xs + [w, -w] * ((n - len(xs)) // 2)
                break
            n = len(xs)
        if points is None or any(x in avoid for x in points):
            continue
        ys = [g(x) for x in points]
        return Certificate(
            function=format_function(f),
            mode="wp",
            target=target,
            terms=[(1, y) for y in ys],
            engine_n=len(ys),
        )
    raise SearchExhausted("could not avoid the pole of the normalizing map")


def caseA_ewp_rep(f, target):
    """Balanced signed representation; the constant b cancels between the signs."""
    cls = _require(f, TWO_POLES)
    target = Fraction(target)
    g = cls.g
    h = LaurentPolynomial({1: cls.a, 0: cls.b, -1: cls.c})
    for shift in range(1, SHIFT_RETRIES + 1):
        z = ewp_multiset(h, target, shift)
        if g.pole is not None and g.pole in z.plus + z.minus:
            continue
        return Certificate(
            function=format_function(f),
            mode="ewp",
            target=target,
            terms=[(s, g(x)) for s, x in z.signed_terms()],
            engine_n=z.size,
        )
    raise SearchExhausted("could not avoid the pole of the normalizing map")


def caseB_positive_rep(f, target):
    """Four unsigned terms a u_i^2 + d0 with sum u_i^2 = (target - 4 d0)/a."""
    cls = _require(f, DOUBLE_POLE)
    target = Fraction(target)
    a, b, d0, g = cls.a, cls.b, cls.d0, cls.g
    t = (target - 4 * d0) / a
    if t < 0:
        side = "above" if a > 0 else "below"
        raise OutOfRange(f"target {target} is not {side} 4*d0 = {4 * d0}")
    center = -b / (2 * a)
    avoid = {g.pole} if g.pole is not None else set()
    us = four_squares_rat(t)
    xs = [_choose_sign(u, center, avoid) for u in us]
    if any(x is None for x in xs):
        us = four_positive_squares_rat(t)
        if us is None:
            raise OutOfRange(f"target {target} is not reachable by four values")
        xs = [_choose_sign(u, center, avoid) for u in us]
    return Certificate(
        function=format_function(f),
        mode="positive",
        target=target,
        terms=[(1, g(x)) for x in xs],
        engine_n=4,
    )


def _choose_sign(u, center, avoid):
    for x in (center + u, center - u):
        if x not in avoid:
            return x
    return None


def caseB_ewp_rep(f, target):
    """f(u) - f(v) = target with u - v = k, solved linearly."""
    cls = _require(f, DOUBLE_POLE)
    target = Fraction(target)
    a, b, g = cls.a, cls.b, cls.g
    avoid = {g.pole} if g.pole is not None else set()
    for k in range(1, SHIFT_RETRIES + 1):
        total = (target / k - b) / a
        u, v = (total + k) / 2, (total - k) / 2
        if u not in avoid and v not in avoid:
            return Certificate(
                function=format_function(f),
                mode="ewp",
                target=target,
                terms=[(1, g(u)), (-1, g(v))],
                engine_n=1,
            )
    raise SearchExhausted("could not avoid the pole of the normalizing map")


def caseB_obstruction(f):
    """f is bounded on one side by d0, so it is not a base."""
    cls = _require(f, DOUBLE_POLE)
    kind = "real-bounded-below" if cls.a > 0 else "real-bounded-above"
    return Certificate(
        function=format_function(f),
        mode="obstruction",
        obstruction=Obstruction(kind, bound=cls.d0),
    )


def caseC_obstruction(f):
    """f has no pole on Q_p for an inert p, so it is p-adically bounded."""
    cls = _require(f, NO_POLE)
    p = inert_prime_witness(cls.discriminant)
    supporting = []
    if real_pole_profile(f)[0] == 0:
        supporting.append(Obstruction("no-real-pole"))
    return Certificate(
        function=format_function(f),
        mode="obstruction",
        obstruction=Obstruction("padic-bounded", prime=p, discriminant=cls.discriminant),
        supporting=supporting,
    )


def random_deg2(rng, height=9):
    """A random degree-2 rational function, spread over all three cases."""
    def coef():
        return Fraction(rng.randint(-height, height), rng.randint(1, 3))

    def nonzero():
        c = coef()
        while c == 0:
            c = coef()
        return c

    while True:
        kind = rng.randrange(5)
        if kind == 0:
            den = Poly((1,))
        elif kind == 1:
            den = Poly((coef(), 1))
        elif kind == 2:
            den = Poly.from_roots([coef(), coef()])
        elif kind == 3:
            den = Poly.from_roots([coef(), coef()]) + Poly((nonzero(),))
        else:
            r = coef()
            den = Poly.from_roots([r, r])
        top = 2 if den.degree < 2 else rng.randint(0, 2)
        num = Poly([coef() for _ in range(top)] + [nonzero()])
        f = RationalFunction(num, den)
        if f.degree == 2:
            return f


def make_rng(seed):
    return random.Random(seed)
