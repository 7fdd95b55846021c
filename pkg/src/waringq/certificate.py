"""Certificates: JSON interchange and exact re-verification.

A certificate either lists signed evaluation points whose values sum to a
target, or carries an obstruction witness.  ``verify_certificate`` re-derives
everything from the serialized text alone: the function is re-parsed, values
are recomputed as P(x)/Q(x), and obstruction witnesses are rechecked with
Sturm counts and Euler's criterion.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import WaringError
from .numtheory import is_prime, valuation
from .parser import format_rational, parse_function
from .poly import count_real_roots, factor_over_q, nonnegative_on_reals, squarefree_decomposition

VERSION = 1
REPRESENTATION_MODES = ("wp", "ewp", "positive")
MODES = REPRESENTATION_MODES + ("obstruction",)
OBSTRUCTION_KINDS = (
    "real-bounded-below",
    "real-bounded-above",
    "real-bounded",
    "no-real-pole",
    "padic-bounded",
    "pole-profile",
)


class MalformedCertificate(WaringError, ValueError):
    pass


@dataclass(frozen=True)
class Obstruction:
    kind: str
    prime: int | None = None
    discriminant: Fraction | None = None
    bound: Fraction | None = None

    def to_dict(self):
        out = {"kind": self.kind}
        if self.prime is not None:
            out["prime"] = self.prime
        if self.discriminant is not None:
            out["discriminant"] = format_rational(self.discriminant)
        if self.bound is not None:
            out["bound"] = format_rational(self.bound)
        return out

    @classmethod
    def from_dict(cls, d):
        if not isinstance(d, dict) or d.get("kind") not in OBSTRUCTION_KINDS:
            raise MalformedCertificate(f"bad obstruction record: {d!r}")
        prime = d.get("prime")
        if prime is not None and (not isinstance(prime, int) or isinstance(prime, bool)):
            raise MalformedCertificate("prime must be an integer")
        return cls(
            kind=d["kind"],
            prime=prime,
            discriminant=_opt_rational(d.get("discriminant")),
            bound=_opt_rational(d.get("bound")),
        )

    def describe(self):
        if self.kind == "padic-bounded":
            return f"p={self.prime} inert"
        if self.kind in ("no-real-pole", "real-bounded"):
            return "no real pole"
        if self.kind == "real-bounded-below":
            return f"f >= {format_rational(self.bound)}"
        if self.kind == "real-bounded-above":
            return f"f <= {format_rational(self.bound)}"
        return "single even-order real pole" if self.kind == "pole-profile" else self.kind


@dataclass
class Certificate:
    function: str
    mode: str
    terms: list = field(default_factory=list)
    target: Fraction | None = None
    obstruction: Obstruction | None = None
    engine_n: int = 0
    supporting: list = field(default_factory=list)
    version: int = VERSION

    @property
    def points(self):
        return [x for _, x in self.terms]

    def to_dict(self):
        out = {"version": self.version, "function": self.function, "mode": self.mode}
        if self.target is not None:
            out["target"] = format_rational(self.target)
        out["terms"] = [{"sign": s, "x": format_rational(x)} for s, x in self.terms]
        out["obstruction"] = self.obstruction.to_dict() if self.obstruction else None
        if self.supporting:
            out["supporting"] = [o.to_dict() for o in self.supporting]
        out["engine_n"] = self.engine_n
        return out

    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, d):
        if not isinstance(d, dict):
            raise MalformedCertificate("certificate must be a JSON object")
        try:
            version = d["version"]
            function = d["function"]
            mode = d["mode"]
            raw_terms = d["terms"]
            engine_n = d["engine_n"]
        except KeyError as exc:
            raise MalformedCertificate(f"missing field {exc}") from None
        if version != VERSION:
            raise MalformedCertificate(f"unsupported version {version!r}")
        if not isinstance(function, str) or mode not in MODES:
            raise MalformedCertificate("bad function or mode")
        if not isinstance(engine_n, int) or isinstance(engine_n, bool) or not isinstance(raw_terms, list):
            raise MalformedCertificate("bad engine_n or terms")
        terms = []
        for t in raw_terms:
            if not isinstance(t, dict) or t.get("sign") not in (1, -1) or isinstance(t.get("sign"), bool):
                raise MalformedCertificate(f"bad term {t!r}")
            terms.append((t["sign"], _rational(t.get("x"))))
        obstruction = d.get("obstruction")
        supporting = d.get("supporting", [])
        if not isinstance(supporting, list):
            raise MalformedCertificate("supporting must be a list")
        return cls(
            function=function,
            mode=mode,
            terms=terms,
            target=_opt_rational(d.get("target")),
            obstruction=None if obstruction is None else Obstruction.from_dict(obstruction),
            engine_n=engine_n,
            supporting=[Obstruction.from_dict(o) for o in supporting],
            version=version,
        )

    @classmethod
    def from_json(cls, text):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedCertificate(f"invalid JSON: {exc}") from None
        return cls.from_dict(data)


def _rational(s):
    if not isinstance(s, str):
        raise MalformedCertificate(f"rationals are serialized as strings, got {s!r}")
    try:
        num, _, den = s.strip().partition("/")
        value = Fraction(int(num), int(den)) if den else Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise MalformedCertificate(f"bad rational {s!r}") from None
    return value


def _opt_rational(s):
    return None if s is None else _rational(s)


@dataclass(frozen=True)
class Verdict:
    status: str
    reason: str | None = None

    def __bool__(self):
        return self.status == "Verified"


VERIFIED = Verdict("Verified")


def _refuted(reason):
    return Verdict("Refuted", reason)


def verify_certificate(cert):
    """Re-check a Certificate (or its dict / JSON text) with exact arithmetic."""
    try:
        if isinstance(cert, str):
            cert = Certificate.from_json(cert)
        elif isinstance(cert, dict):
            cert = Certificate.from_dict(cert)
        f = parse_function(cert.function)
    except WaringError as exc:
        return Verdict("MalformedCertificate", str(exc))
    if cert.mode in REPRESENTATION_MODES:
        if cert.target is None or cert.obstruction is not None or not cert.terms:
            return Verdict("MalformedCertificate", "representation needs a target and terms, no obstruction")
        return _verify_representation(f, cert)
    if cert.terms or cert.obstruction is None or cert.target is not None:
        return Verdict("MalformedCertificate", "obstruction needs a witness and no terms or target")
    for ob in [cert.obstruction, *cert.supporting]:
        reason = _check_obstruction(f, ob)
        if reason:
            return _refuted(reason)
    return VERIFIED


def _verify_representation(f, cert):
    signs = [s for s, _ in cert.terms]
    n_plus = signs.count(1)
    if cert.mode in ("wp", "positive"):
        if n_plus != len(signs):
            return _refuted("sign discipline: negative term in an unsigned certificate")
        if cert.engine_n != len(signs):
            return _refuted("engine_n does not match the number of terms")
    else:
        if 2 * n_plus != len(signs):
            return _refuted("sign discipline: unbalanced signed certificate")
        if cert.engine_n != n_plus:
            return _refuted("engine_n does not match the number of terms per sign")
    total = Fraction(0)
    for i, (s, x) in enumerate(cert.terms):
        q = f.den(x)
        if q == 0:
            return _refuted(f"term {i}: x = {x} is a pole")
        total += s * f.num(x) / q
    if total != cert.target:
        return _refuted(f"sum is {format_rational(total)}, not {format_rational(cert.target)}")
    return VERIFIED


def _is_nonsquare_in_qp(d, p):
    # Euler's criterion on the unit part; independent of the analyzer's helper
    a, b = d.numerator, d.denominator
    v = valuation(a, p) - valuation(b, p)
    if v % 2:
        return True
    a //= p ** valuation(a, p)
    b //= p ** valuation(b, p)
    if p == 2:
        return (a * b) % 8 != 1
    return pow((a * b) % p, (p - 1) // 2, p) == p - 1


def _check_obstruction(f, ob):
    num, den = f.num, f.den
    if ob.kind in ("real-bounded-below", "real-bounded-above"):
        if ob.bound is None:
            return "bound missing"
        g = f - ob.bound if ob.kind == "real-bounded-below" else ob.bound - f
        if not nonnegative_on_reals(g.num * g.den):
            return f"f is not {'>=' if ob.kind.endswith('below') else '<='} {format_rational(ob.bound)} on R"
        return None
    if ob.kind in ("no-real-pole", "real-bounded"):
        if num.degree > den.degree:
            return "f has a pole at infinity"
        if den.degree > 0 and count_real_roots(den) > 0:
            return "denominator has a real root"
        return None
    if ob.kind == "padic-bounded":
        p = ob.prime
        if p is None or not is_prime(p):
            return f"{p} is not a prime"
        if num.degree > den.degree:
            return "f has a pole at infinity"
        discs = []
        for g, _ in factor_over_q(den):
            if g.degree != 2:
                return f"denominator factor of degree {g.degree} is not certified"
            d = g.coeff(1) ** 2 - 4 * g.coeff(0)
            if not _is_nonsquare_in_qp(d, p):
                return f"discriminant {format_rational(d)} is a square in Q_{p}"
            discs.append(d)
        if ob.discriminant is not None and ob.discriminant not in discs:
            return "recorded discriminant does not match the denominator"
        return None
    if ob.kind == "pole-profile":
        count, odd = 0, False
        excess = num.degree - den.degree
        if excess > 0:
            count, odd = 1, excess % 2 == 1
        for g, k in squarefree_decomposition(den):
            r = count_real_roots(g)
            count += r
            odd = odd or (r > 0 and k % 2 == 1)
        if count >= 2 or odd:
            return "f has two real poles or an odd-order real pole"
        return None
    return f"unknown obstruction kind {ob.kind!r}"
