"""Dense univariate polynomials over Q with exact Fraction coefficients.

Coefficients are stored low degree first.  The zero polynomial has degree -1.
Besides ring arithmetic this module carries the exact real-root machinery
(Sturm chains, square-free decomposition) and a bridge to sympy for
factorization over Q.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [Fraction(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots):
        p = cls((1,))
        for r in roots:
            p = p * cls((-Fraction(r), 1))
        return p

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __add__(self, other):
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly((1,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        inv = 1 / other.lead
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - dq - 1, -1, -1):
            q = rem[k + dq] * inv
            quot[k] = q
            if q:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= q * b
        return Poly(quot), Poly(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if self.is_zero():
            return self
        return self * (1 / self.lead)

    def derivative(self):
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def reversed(self, n=None):
        """x^n p(1/x), with n defaulting to the degree."""
        n = self.degree if n is None else n
        return Poly(self.coeff(n - i) for i in range(n + 1))

    def integer_coeffs(self):
        """Primitive integer multiple with positive leading coefficient."""
        from math import gcd, lcm

        if self.is_zero():
            return []
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for a in ints:
            g = gcd(g, a)
        ints = [a // g for a in ints]
        if ints[-1] < 0:
            ints = [-a for a in ints]
        return ints


def _lift(p):
    return p if isinstance(p, Poly) else Poly.const(p)


def poly_gcd(a, b):
    """Monic gcd; gcd(0, 0) is 0."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_decomposition(p):
    """Yun's algorithm: [(g_i, i)] with p = lc * prod g_i^i, each g_i squarefree, monic."""
    if p.degree <= 0:
        return []
    p = p.monic()
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p // a
    c = dp // a
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        b = b // a
        c = d // a
        if a.degree > 0:
            out.append((a, i))
        d = c - b.derivative()
        i += 1
    return out


def squarefree_part(p):
    if p.degree <= 0:
        return Poly((1,))
    return (p // poly_gcd(p, p.derivative())).monic()


def sturm_chain(p):
    chain = [p, p.derivative()]
    while not chain[-1].is_zero():
        chain.append(-(chain[-2] % chain[-1]))
    return chain[:-1]


def _sign(v):
    return (v > 0) - (v < 0)


def _variations(signs):
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p, lo=None, hi=None):
    """Number of distinct real roots of p in (lo, hi]; None bounds mean -inf/+inf."""
    if p.is_zero():
        raise ValueError("the zero polynomial has infinitely many roots")
    if p.degree <= 0:
        return 0
    chain = sturm_chain(p)

    def at(x):
        if x is None:
            return None
        return _variations([_sign(q(x)) for q in chain])

    v_lo = at(lo)
    if v_lo is None:
        v_lo = _variations([_sign(q.lead) * (-1) ** q.degree for q in chain])
    v_hi = at(hi)
    if v_hi is None:
        v_hi = _variations([_sign(q.lead) for q in chain])
    return v_lo - v_hi


def nonnegative_on_reals(p):
    """True iff p(x) >= 0 for every real x."""
    if p.is_zero():
        return True
    for g, k in squarefree_decomposition(p):
        if k % 2 and count_real_roots(g) > 0:
            return False
    return p.lead > 0


@lru_cache(maxsize=4096)
def _factor_cached(coeffs):
    import sympy

    x = sympy.Symbol("x")
    sp = sympy.Poly(
        [sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)],
        x,
        domain="QQ",
    )
    _, factors = sp.factor_list()
    out = []
    for fac, mult in factors:
        cs = [Fraction(int(r.p), int(r.q)) for r in reversed(fac.all_coeffs())]
        out.append((Poly(cs).monic(), mult))
    out.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    return tuple(out)


def factor_over_q(p):
    """Irreducible monic factors of p over Q with multiplicities."""
    if p.degree <= 0:
        return []
    return list(_factor_cached(p.coeffs))


def rational_roots(p):
    """[(root, multiplicity)] sorted by root."""
    roots = [(-g.coeff(0), k) for g, k in factor_over_q(p) if g.degree == 1]
    return sorted(roots)


def matrix_rank(rows):
    """Exact rank of a matrix of Fractions by Gaussian elimination."""
    m = [[Fraction(v) for v in row] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        for r in range(rank + 1, len(m)):
            if m[r][col]:
                f = m[r][col] * inv
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank
