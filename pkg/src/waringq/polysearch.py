"""Best-effort search for unsigned representations by polynomials of degree >= 3.

Nothing here is complete: a failed search is only "not found within budget",
never evidence that a representation does not exist.

Two strategies are combined.  Direct enumeration sums values f(x) over a
pool of small-height rationals (meet in the middle on pair sums).  The
power-sum strategy picks a target vector (c_1, ..., c_d) compatible with the
target, fixes m - d coordinates pseudorandomly and recovers the remaining d
as the roots of the polynomial whose elementary symmetric values follow from
the residual power sums by Newton's identities, accepting when it splits
over Q.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement

from .certificate import Certificate
from .errors import DimensionMismatch
from .numtheory import is_square_rational, rational_sqrt
from .parser import format_function
from .poly import Poly, matrix_rank, rational_roots

DEFAULT_BUDGET = 2000
TRIALS_PER_ROUND = 32
ENUMERATION_ROUNDS = 4


@dataclass(frozen=True)
class PowerSumTarget:
    d: int
    c: tuple
    m: int

    def __post_init__(self):
        if self.m < self.d or len(self.c) != self.d:
            raise DimensionMismatch("need m >= d and exactly d power-sum targets")


@dataclass(frozen=True)
class LinearFormSet:
    forms: tuple = ()
    offsets: tuple = field(default=())


def newton_ps_to_elem(c):
    """Elementary symmetric values e_1..e_d from power sums p_1..p_d."""
    c = [Fraction(v) for v in c]
    e = [Fraction(1)]
    for k in range(1, len(c) + 1):
        acc = sum(((-1) ** (i - 1) * e[k - i] * c[i - 1] for i in range(1, k + 1)), Fraction(0))
        e.append(acc / k)
    return e[1:]


def companion(e):
    """Monic polynomial with roots whose elementary symmetric values are e."""
    d = len(e)
    coeffs = [Fraction(0)] * (d + 1)
    coeffs[d] = Fraction(1)
    for k, ek in enumerate(e, start=1):
        coeffs[d - k] = (-1) ** k * ek
    return Poly(coeffs)


def split_roots(p):
    """All roots of p with multiplicity if p splits over Q, else None."""
    d = p.degree
    if d == 1:
        return [-p.coeff(0) / p.coeff(1)]
    if d == 2:
        a, b, c = p.coeff(2), p.coeff(1), p.coeff(0)
        disc = b * b - 4 * a * c
        if disc < 0 or not is_square_rational(disc):
            return None
        r = rational_sqrt(disc)
        return [(-b + r) / (2 * a), (-b - r) / (2 * a)]
    roots = []
    for r, k in rational_roots(p):
        roots.extend([r] * k)
    return roots if len(roots) == d else None


def _random_rational(rng, height):
    return Fraction(rng.randint(-height, height), rng.randint(1, height))


def power_sum_point_search(target, budget=DEFAULT_BUDGET, seed=0):
    """x in Q^m with sum x_i^j == c_j for j = 1..d, or None."""
    d, m = target.d, target.m
    c = [Fraction(v) for v in target.c]
    rng = random.Random(seed)
    free = m - d
    trials = 1 if free == 0 else budget
    for trial in range(trials):
        height = 2 ** min(1 + trial // TRIALS_PER_ROUND, 16)
        fixed = [_random_rational(rng, height) for _ in range(free)]
        residual = [c[j - 1] - sum((y**j for y in fixed), Fraction(0)) for j in range(1, d + 1)]
        roots = split_roots(companion(newton_ps_to_elem(residual)))
        if roots is None:
            continue
        point = tuple(fixed + sorted(roots, reverse=True))
        if all(sum(x**j for x in point) == c[j - 1] for j in range(1, d + 1)):
            return point
    return None


def jacobian_rank(a, d, forms=None):
    """Rank of the Vandermonde rows (a_i^j), j < d, stacked over the linear-form rows."""
    a = [Fraction(v) for v in a]
    m = len(a)
    rows = [list(r) for r in (forms.forms if isinstance(forms, LinearFormSet) else forms or ())]
    if any(len(r) != m for r in rows) or m < d + len(rows):
        raise DimensionMismatch(f"need m >= d + r with rows of length m = {m}")
    vandermonde = [[x**j for x in a] for j in range(d)]
    return matrix_rank(vandermonde + rows)


def _pool(rnd):
    height = 2**rnd
    return sorted({Fraction(p, q) for q in range(1, rnd + 1) for p in range(-height, height + 1)})


def _enumerate(f, target, max_terms):
    seen = set()
    for rnd in range(1, ENUMERATION_ROUNDS + 1):
        pool = [x for x in _pool(rnd) if x not in seen]
        seen.update(pool)
        pool = sorted(seen)
        values = {}
        for x in pool:
            values.setdefault(f(x), x)
        if target in values:
            return [values[target]]
        pairs = {}
        for x, y in combinations_with_replacement(pool, 2):
            pairs.setdefault(f(x) + f(y), (x, y))
        if target in pairs and max_terms >= 2:
            return list(pairs[target])
        if max_terms >= 3:
            for v, x in values.items():
                hit = pairs.get(target - v)
                if hit:
                    return [x, *hit]
        if max_terms >= 4:
            for v, xy in pairs.items():
                hit = pairs.get(target - v)
                if hit:
                    return [*xy, *hit]
    return None


def wp_search_poly(f, target, budget=DEFAULT_BUDGET, seed=0, m=None):
    """Unsigned certificate sum f(x_i) == target, or None when not found within budget."""
    if not f.is_polynomial() or f.degree < 3:
        raise ValueError("wp_search_poly needs a polynomial of degree >= 3")
    target = Fraction(target)
    p = f.num
    d = p.degree
    m = d + 2 if m is None else m
    mode = "wp" if d % 2 else "positive"

    def certificate(points):
        return Certificate(
            function=format_function(f),
            mode=mode,
            target=target,
            terms=[(1, x) for x in points],
            engine_n=len(points),
        )

    found = _enumerate(p, target, min(m, 4))
    if found is not None:
        return certificate(found)
    # power-sum route: c_1..c_{d-1} from a random seed configuration, c_d from the target
    rng = random.Random(seed)
    rounds = max(1, budget // TRIALS_PER_ROUND)
    for rnd in range(rounds):
        height = 2 ** (1 + rnd % 8)
        anchor = [_random_rational(rng, height) for _ in range(m)]
        c = [sum(x**j for x in anchor) for j in range(1, d)]
        rest = target - m * p.coeff(0) - sum(p.coeff(j) * c[j - 1] for j in range(1, d))
        c.append(rest / p.coeff(d))
        point = power_sum_point_search(PowerSumTarget(d, tuple(c), m), TRIALS_PER_ROUND, rng.randrange(2**32))
        if point is not None and sum(p(x) for x in point) == target:
            return certificate(list(point))
    return None
