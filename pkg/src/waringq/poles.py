"""Pole profiles over Q, R and Q_p, and the necessary-condition verdicts they imply.

Only necessary conditions are checked here: a function whose values are
bounded (in the real or some p-adic metric) cannot have every rational as a
bounded signed sum of values, and a function whose real poles are a single
even-order pole has values bounded on one side.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .certificate import Certificate, Obstruction
from .errors import InvalidPrime, NotFound, SquareDiscriminant
from .numtheory import is_padic_square, is_prime, is_square_rational, legendre_rational, primes_up_to
from .parser import format_function
from .poly import count_real_roots, factor_over_q, rational_roots, squarefree_decomposition

INFINITY = "inf"
PRIME_SEARCH_BOUND = 10_000
TESTED_PRIMES = tuple(primes_up_to(100))

IMPOSSIBLE = "Impossible"
PASS = "NecessaryConditionsPass"
UNKNOWN = "Unknown"


@dataclass
class PoleProfile:
    rational_poles: list
    real_pole_count: int
    has_odd_order_real_pole: bool
    real_analysis_exact: bool = True


@dataclass
class ObstructionReport:
    wp_verdict: str
    ewp_verdict: str
    witnesses: list = field(default_factory=list)

    def certificates(self, f):
        text = format_function(f)
        return [Certificate(function=text, mode="obstruction", obstruction=w) for w in self.witnesses]


def _pole_at_infinity(f):
    excess = f.num.degree - f.den.degree
    return excess if excess > 0 else 0


def rational_pole_profile(f):
    """[(location, order)] over QP^1, finite poles ascending, infinity last."""
    poles = [(r, k) for r, k in rational_roots(f.den)] if f.den.degree > 0 else []
    inf = _pole_at_infinity(f)
    if inf:
        poles.append((INFINITY, inf))
    return poles


def real_pole_profile(f):
    """(distinct real poles on RP^1, whether one of them has odd order)."""
    count = 0
    odd = False
    inf = _pole_at_infinity(f)
    if inf:
        count, odd = 1, inf % 2 == 1
    for g, k in squarefree_decomposition(f.den):
        r = count_real_roots(g)
        count += r
        odd = odd or (r > 0 and k % 2 == 1)
    return count, odd


def pole_profile(f):
    count, odd = real_pole_profile(f)
    return PoleProfile(rational_pole_profile(f), count, odd, True)


def quadratic_discriminant(g):
    return g.coeff(1) ** 2 - 4 * g.coeff(0) * g.coeff(2)


def padic_pole_exists(f, p):
    """'Yes', 'No' or 'Unknown': does f have a pole on Q_p P^1?"""
    if not is_prime(p):
        raise InvalidPrime(f"{p} is not prime")
    if _pole_at_infinity(f):
        return "Yes"
    unknown = False
    for g, _ in factor_over_q(f.den):
        if g.degree == 1:
            return "Yes"
        if g.degree == 2:
            if is_padic_square(quadratic_discriminant(g), p):
                return "Yes"
        else:
            unknown = True
    return "Unknown" if unknown else "No"


def padic_root_witness(g, p, max_k=12):
    """For a quadratic with a root in Q_p: (r, k, reversed) with a Hensel-liftable root mod p^k.

    ``reversed`` marks a root of x^2 g(1/x), i.e. a root of g outside Z_p.
    Hensel applies because v_p(G(r)) > 2 v_p(G'(r)), G the primitive integer form.
    """
    from .numtheory import valuation

    ints = g.integer_coeffs()
    for rev in (False, True):
        a, b, c = (ints[2], ints[1], ints[0]) if not rev else (ints[0], ints[1], ints[2])
        for k in range(1, max_k + 1):
            mod = p**k
            if mod > 10**6:
                break
            for r in range(mod):
                val = a * r * r + b * r + c
                der = 2 * a * r + b
                if der == 0:
                    continue
                vd = valuation(der, p)
                if val == 0 or valuation(val, p) > 2 * vd:
                    if 2 * vd < k:
                        return r, k, rev
    return None


def inert_prime_witness(d, bound=PRIME_SEARCH_BOUND):
    """Smallest odd prime p <= bound, prime to d, with (d|p) = -1."""
    d = Fraction(d)
    if is_square_rational(d):
        raise SquareDiscriminant(f"{d} is a square in Q")
    for p in primes_up_to(bound):
        if p == 2 or d.numerator % p == 0 or d.denominator % p == 0:
            continue
        if legendre_rational(d, p) == -1:
            return p
    raise NotFound(f"no inert prime up to {bound} for {d}")


def _candidate_primes(f):
    """Inert witnesses of the quadratic factors first, then the fixed small primes."""
    first = []
    for g, _ in factor_over_q(f.den):
        if g.degree == 2:
            d = quadratic_discriminant(g)
            if not is_square_rational(d):
                try:
                    first.append(inert_prime_witness(d))
                except NotFound:
                    pass
    return list(dict.fromkeys(first + list(TESTED_PRIMES)))


def obstruction_report(f):
    witnesses = []
    count, odd = real_pole_profile(f)
    ewp = PASS
    if count == 0:
        ewp = IMPOSSIBLE
        witnesses.append(Obstruction("no-real-pole"))
    padic_unknown = False
    if not _pole_at_infinity(f):
        for p in _candidate_primes(f):
            answer = padic_pole_exists(f, p)
            if answer == "No":
                ewp = IMPOSSIBLE
                disc = None
                factors = factor_over_q(f.den)
                if len(factors) == 1 and factors[0][0].degree == 2:
                    disc = quadratic_discriminant(factors[0][0])
                witnesses.append(Obstruction("padic-bounded", prime=p, discriminant=disc))
                break
            if answer == "Unknown":
                padic_unknown = True
    if ewp == PASS and padic_unknown:
        ewp = UNKNOWN
    if ewp == IMPOSSIBLE:
        wp = IMPOSSIBLE
    elif count < 2 and not odd:
        wp = IMPOSSIBLE
        witnesses.append(Obstruction("pole-profile"))
    else:
        wp = UNKNOWN if ewp == UNKNOWN else PASS
    return ObstructionReport(wp, ewp, witnesses)
