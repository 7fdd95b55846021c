"""Mode dispatch: pick the strongest applicable construction for f and a target."""

from __future__ import annotations

from fractions import Fraction

from . import deg2
from .errors import NotFound, NotLaurent, OutOfRange
from .ewp import ewp_represent, wp_represent_odd
from .functions import laurent_of
from .polysearch import DEFAULT_BUDGET, wp_search_poly
from .poles import IMPOSSIBLE, obstruction_report

AUTO_ORDER = ("wp", "positive", "ewp")


class Unrepresented(NotFound):
    """No certificate was produced; ``obstruction`` holds one when an obstruction applies."""

    def __init__(self, message, obstruction=None):
        super().__init__(message)
        self.obstruction = obstruction


class _Context:
    def __init__(self, f):
        self.f = f
        try:
            self.laurent = laurent_of(f)
        except NotLaurent:
            self.laurent = None
        if self.laurent is not None and self.laurent.is_constant():
            self.laurent = None
        self.cls = deg2.classify_deg2(f) if f.degree == 2 else None
        self.report = obstruction_report(f)

    @property
    def case(self):
        return self.cls.case if self.cls else None


def _attempt(ctx, mode, target, seed, budget):
    f = ctx.f
    if mode == "wp":
        if ctx.laurent is not None and ctx.laurent.is_odd():
            return wp_represent_odd(ctx.laurent, target)
        if ctx.case == deg2.TWO_POLES:
            return deg2.caseA_wp_rep(f, target)
        if f.is_polynomial() and f.degree >= 3 and f.degree % 2:
            return wp_search_poly(f, target, budget, seed)
        return None
    if mode == "positive":
        if ctx.case == deg2.DOUBLE_POLE:
            try:
                return deg2.caseB_positive_rep(f, target)
            except OutOfRange:
                return None
        if f.is_polynomial() and f.degree >= 3 and f.degree % 2 == 0:
            return wp_search_poly(f, target, budget, seed)
        return None
    if mode == "ewp":
        if ctx.laurent is not None:
            return ewp_represent(ctx.laurent, target)
        if ctx.case == deg2.TWO_POLES:
            return deg2.caseA_ewp_rep(f, target)
        if ctx.case == deg2.DOUBLE_POLE:
            return deg2.caseB_ewp_rep(f, target)
        return None
    raise ValueError(f"unknown mode {mode!r}")


def _obstruction_for(ctx, mode):
    if mode in ("wp", "positive", "auto") and ctx.case == deg2.DOUBLE_POLE:
        return deg2.caseB_obstruction(ctx.f)
    if ctx.case == deg2.NO_POLE:
        return deg2.caseC_obstruction(ctx.f)
    impossible = ctx.report.ewp_verdict == IMPOSSIBLE or (mode == "wp" and ctx.report.wp_verdict == IMPOSSIBLE)
    if impossible and ctx.report.witnesses:
        return ctx.report.certificates(ctx.f)[0]
    return None


def represent(f, target, mode="auto", seed=0, budget=DEFAULT_BUDGET):
    """Certificate for target as a bounded sum of values of f, in the requested mode.

    Raises Unrepresented when nothing was found; its ``obstruction`` carries an
    obstruction certificate if one applies.
    """
    target = Fraction(target)
    ctx = _Context(f)
    modes = AUTO_ORDER if mode == "auto" else (mode,)
    for m in modes:
        if mode == "auto":
            if ctx.report.ewp_verdict == IMPOSSIBLE:
                break
            if m == "wp" and ctx.report.wp_verdict == IMPOSSIBLE:
                continue
        cert = _attempt(ctx, m, target, seed, budget)
        if cert is not None:
            return cert
    raise Unrepresented(f"no {mode} representation found", _obstruction_for(ctx, mode))
