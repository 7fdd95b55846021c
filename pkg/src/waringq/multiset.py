"""Balanced signed multisets of base points.

A ``SignedMultiset`` is the formal difference of k "plus" points and k "minus"
points.  Evaluating it at an exponent s gives the power sum
``sum(x**s for x in plus) - sum(y**s for y in minus)``; with that reading,
addition and the pairwise product below are ring operations pointwise in s.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction


class SignedMultiset:
    __slots__ = ("plus", "minus")

    def __init__(self, plus=(), minus=()):
        plus = tuple(Fraction(x) for x in plus)
        minus = tuple(Fraction(y) for y in minus)
        if len(plus) != len(minus):
            raise ValueError(f"unbalanced: {len(plus)} plus vs {len(minus)} minus points")
        if any(x == 0 for x in plus + minus):
            raise ValueError("base points must be non-zero")
        self.plus = plus
        self.minus = minus

    @classmethod
    def empty(cls):
        return cls()

    @property
    def size(self):
        """Points per sign (the k of a k-plus/k-minus sum)."""
        return len(self.plus)

    def __len__(self):
        return len(self.plus) + len(self.minus)

    def __eq__(self, other):
        if not isinstance(other, SignedMultiset):
            return NotImplemented
        return Counter(self.plus) == Counter(other.plus) and Counter(self.minus) == Counter(other.minus)

    def __hash__(self):
        return hash((tuple(sorted(self.plus)), tuple(sorted(self.minus))))

    def __repr__(self):
        fmt = lambda pts: "{" + ", ".join(str(p) for p in pts) + "}"
        return f"+{fmt(self.plus)}-{fmt(self.minus)}"

    def __add__(self, other):
        return SignedMultiset(self.plus + other.plus, self.minus + other.minus)

    def __mul__(self, other):
        # (sum x - sum y)(sum w - sum z) = (xw + yz) - (xz + yw)
        plus = [x * w for x in self.plus for w in other.plus]
        plus += [y * z for y in self.minus for z in other.minus]
        minus = [x * z for x in self.plus for z in other.minus]
        minus += [y * w for y in self.minus for w in other.plus]
        return SignedMultiset(plus, minus)

    def reciprocal(self):
        return SignedMultiset((1 / x for x in self.plus), (1 / y for y in self.minus))

    def power_sum(self, s):
        if s == 0:
            raise ValueError("exponent must be non-zero")
        return sum((x**s for x in self.plus), Fraction(0)) - sum((y**s for y in self.minus), Fraction(0))

    def signed_terms(self):
        return [(1, x) for x in self.plus] + [(-1, y) for y in self.minus]


def sms_add(z1, z2):
    return z1 + z2


def sms_mul(z1, z2):
    return z1 * z2


def sms_reciprocal(z):
    return z.reciprocal()


def power_sum(z, s):
    return z.power_sum(s)
