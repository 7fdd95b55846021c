"""Laurent polynomials, rational functions and fractional linear maps over Q."""

from __future__ import annotations

from fractions import Fraction

from .errors import DivisionByZeroFunction, NotLaurent, PoleHit, ZeroArgument
from .poly import Poly, poly_gcd


class RationalFunction:
    """P/Q in lowest terms with Q monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, Poly) else Poly.const(num)
        den = Poly((1,)) if den is None else den if isinstance(den, Poly) else Poly.const(den)
        if den.is_zero():
            raise DivisionByZeroFunction("denominator is the zero polynomial")
        if num.is_zero():
            self.num, self.den = Poly(), Poly((1,))
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        lc = den.lead
        self.num = num * (1 / lc)
        self.den = den * (1 / lc)

    @classmethod
    def x(cls):
        return cls(Poly.x())

    @classmethod
    def const(cls, c):
        return cls(Poly.const(c))

    @property
    def degree(self):
        return max(self.num.degree, self.den.degree, 0)

    def is_polynomial(self):
        return self.den.degree == 0

    def is_constant(self):
        return self.num.degree <= 0 and self.den.degree == 0

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalFunction.const(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        from .parser import format_function

        return f"RationalFunction({format_function(self)!r})"

    def __call__(self, x):
        q = self.den(x)
        if q == 0:
            raise PoleHit(f"{x} is a pole")
        return self.num(x) / q

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __add__(self, other):
        other = _lift(other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _lift(other)
        if other.num.is_zero():
            raise DivisionByZeroFunction("division by the zero function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _lift(other) / self

    def __pow__(self, k):
        if k < 0:
            return RationalFunction.const(1) / (self ** -k)
        return RationalFunction(self.num ** k, self.den ** k)


def _lift(f):
    return f if isinstance(f, RationalFunction) else RationalFunction.const(f)


def ratfunc_eval(f, x):
    return f(Fraction(x))


class LaurentPolynomial:
    """Finite sum of a_s x^s, s ranging over Z; zero coefficients are never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = {int(s): Fraction(a) for s, a in dict(terms).items() if a != 0}

    @property
    def support(self):
        """Non-zero exponents carrying a coefficient."""
        return frozenset(s for s in self.terms if s != 0)

    @property
    def constant(self):
        return self.terms.get(0, Fraction(0))

    def is_constant(self):
        return not self.support

    def is_odd(self):
        return bool(self.terms) and all(s % 2 for s in self.terms)

    def __eq__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        body = ", ".join(f"{s}: {a}" for s, a in sorted(self.terms.items(), reverse=True))
        return f"LaurentPolynomial({{{body}}})"

    def __call__(self, x):
        x = Fraction(x)
        if x == 0 and any(s < 0 for s in self.terms):
            raise ZeroArgument("negative exponent evaluated at 0")
        return sum((a * x**s for s, a in self.terms.items()), Fraction(0))

    def to_rational_function(self):
        low = min(min(self.terms, default=0), 0)
        num = Poly.const(0)
        for s, a in self.terms.items():
            num = num + Poly.monomial(s - low, a)
        return RationalFunction(num, Poly.monomial(-low))


def laurent_eval(f, x):
    return f(x)


def laurent_of(f):
    """View a rational function with denominator x^k as a Laurent polynomial."""
    k = f.den.degree
    if f.den != Poly.monomial(k):
        raise NotLaurent("denominator has a root other than 0")
    return LaurentPolynomial({i - k: c for i, c in enumerate(f.num.coeffs)})


class MobiusTransform:
    """x -> (a x + b) / (c x + d)."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        a, b, c, d = map(Fraction, (a, b, c, d))
        if a * d - b * c == 0:
            raise ValueError("degenerate fractional linear transformation")
        self.a, self.b, self.c, self.d = a, b, c, d

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    def __repr__(self):
        return f"MobiusTransform({self.a}, {self.b}, {self.c}, {self.d})"

    def _normalized(self):
        first = next(v for v in (self.a, self.b, self.c, self.d) if v)
        return tuple(v / first for v in (self.a, self.b, self.c, self.d))

    def __eq__(self, other):
        if not isinstance(other, MobiusTransform):
            return NotImplemented
        return self._normalized() == other._normalized()

    def __hash__(self):
        return hash(self._normalized())

    @property
    def pole(self):
        """Finite argument sent to infinity, or None when infinity is fixed."""
        return None if self.c == 0 else -self.d / self.c

    def __call__(self, x):
        den = self.c * x + self.d
        if den == 0:
            raise PoleHit(f"{x} is the pole of the transformation")
        return (self.a * x + self.b) / den

    def image_of_infinity(self):
        return None if self.c == 0 else self.a / self.c

    def as_rational_function(self):
        return RationalFunction(Poly((self.b, self.a)), Poly((self.d, self.c)))


def mobius_compose(f, g):
    """f o g in lowest terms, by homogenizing P and Q to a common degree."""
    n = max(f.num.degree, f.den.degree, 0)
    top = Poly((g.b, g.a))
    bottom = Poly((g.d, g.c))
    tops = [Poly((1,))]
    bottoms = [Poly((1,))]
    for _ in range(n):
        tops.append(tops[-1] * top)
        bottoms.append(bottoms[-1] * bottom)

    def homogenize(p):
        acc = Poly()
        for i, coef in enumerate(p.coeffs):
            if coef:
                acc = acc + tops[i] * bottoms[n - i] * coef
        return acc

    return RationalFunction(homogenize(f.num), homogenize(f.den))
