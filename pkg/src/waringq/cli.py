"""Command-line interface.

Exit codes: 0 success / Verified, 1 Refuted / not found, 2 usage or parse
error, 3 internal budget exhaustion.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from fractions import Fraction

from . import deg2
from .certificate import Certificate, MalformedCertificate, verify_certificate
from .errors import ExpressionSyntaxError, NotLaurent, OutOfRange, SearchExhausted, WaringError
from .foursquare import four_squares_rat
from .functions import laurent_of
from .parser import format_function, format_rational, parse_function
from .poles import obstruction_report, pole_profile
from .polysearch import DEFAULT_BUDGET
from .solver import Unrepresented, represent

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def _rational_arg(text):
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _error(message):
    print(message, file=sys.stderr)


def _analysis(f):
    report = obstruction_report(f)
    profile = pole_profile(f)
    try:
        laurent = laurent_of(f)
    except NotLaurent:
        laurent = None
    out = {
        "function": format_function(f),
        "degree": f.degree,
        "laurent": laurent is not None,
        "odd": bool(laurent and laurent.is_odd()),
        "rational_poles": [
            {"at": loc if isinstance(loc, str) else format_rational(loc), "order": k}
            for loc, k in profile.rational_poles
        ],
        "real_pole_count": profile.real_pole_count,
        "has_odd_order_real_pole": profile.has_odd_order_real_pole,
        "wp_verdict": report.wp_verdict,
        "ewp_verdict": report.ewp_verdict,
        "witnesses": [w.to_dict() for w in report.witnesses],
    }
    if f.degree == 2:
        cls = deg2.classify_deg2(f)
        out["classification"] = cls.case
        if cls.discriminant is not None:
            out["discriminant"] = format_rational(cls.discriminant)
    return out, report


def cmd_analyze(args):
    f = parse_function(args.expr)
    info, report = _analysis(f)
    if args.json:
        print(json.dumps(info, indent=2))
        return EXIT_OK
    print(f"function: {info['function']}")
    print(f"degree: {info['degree']}")
    if "classification" in info:
        extra = f" (D = {info['discriminant']})" if "discriminant" in info else ""
        print(f"class: {info['classification']}{extra}")
    print(f"real poles: {info['real_pole_count']}" + (" (one of odd order)" if info["has_odd_order_real_pole"] else ""))
    ewp_why = "; ".join(w.describe() for w in report.witnesses if w.kind != "pole-profile")
    wp_why = "; ".join(w.describe() for w in report.witnesses)
    print(f"WP: {report.wp_verdict}" + (f" ({wp_why})" if wp_why and report.wp_verdict == "Impossible" else ""))
    print(f"EWP: {report.ewp_verdict}" + (f" ({ewp_why})" if ewp_why and report.ewp_verdict == "Impossible" else ""))
    return EXIT_OK


def _emit(cert, output):
    verdict = verify_certificate(cert.to_json())
    if not verdict:
        _error(f"internal error: produced certificate failed verification: {verdict.reason}")
        return False
    text = cert.to_json()
    if output:
        with open(output, "w") as fh:
            fh.write(text + "\n")
        _error(f"wrote {cert.mode} certificate with {len(cert.terms)} terms to {output}")
    else:
        print(text)
    return True


def cmd_represent(args):
    f = parse_function(args.expr)
    try:
        cert = represent(f, args.target, args.mode, args.seed, args.budget)
    except Unrepresented as exc:
        _error(f"not found: {exc}")
        if exc.obstruction is not None:
            _error("emitting obstruction certificate")
            _emit(exc.obstruction, args.output)
        return EXIT_FAIL
    except OutOfRange as exc:
        _error(f"out of range: {exc}")
        return EXIT_FAIL
    return EXIT_OK if _emit(cert, args.output) else EXIT_BUDGET


def cmd_verify(args):
    try:
        with open(args.file) as fh:
            text = fh.read()
    except OSError as exc:
        _error(str(exc))
        return EXIT_USAGE
    verdict = verify_certificate(text)
    print(verdict.status + (f": {verdict.reason}" if verdict.reason else ""))
    if verdict.status == "Verified":
        return EXIT_OK
    return EXIT_FAIL if verdict.status == "Refuted" else EXIT_USAGE


def scan_degree2(count, seed):
    """Classify a random corpus and certify one target per function."""
    rng = deg2.make_rng(seed)
    cases = Counter()
    checked = verified = 0
    for _ in range(count):
        f = deg2.random_deg2(rng)
        cls = deg2.classify_deg2(f)
        cases[cls.case] += 1
        target = Fraction(rng.randint(-50, 50), rng.randint(1, 5))
        if cls.case == deg2.TWO_POLES:
            certs = [deg2.caseA_wp_rep(f, target)]
        elif cls.case == deg2.DOUBLE_POLE:
            certs = [deg2.caseB_ewp_rep(f, target), deg2.caseB_obstruction(f)]
            try:
                certs.append(deg2.caseB_positive_rep(f, target))
            except OutOfRange:
                pass
        else:
            certs = [deg2.caseC_obstruction(f)]
        for c in certs:
            checked += 1
            verified += bool(verify_certificate(c.to_json()))
    return {"count": count, "seed": seed, "cases": dict(cases), "certificates": checked, "verified": verified}


def cmd_scan(args):
    stats = scan_degree2(args.count, args.seed)
    if args.json:
        print(json.dumps(stats, indent=2))
    else:
        for case in (deg2.TWO_POLES, deg2.DOUBLE_POLE, deg2.NO_POLE):
            print(f"{case}: {stats['cases'].get(case, 0)}")
        print(f"certificates verified: {stats['verified']}/{stats['certificates']}")
    return EXIT_OK if stats["verified"] == stats["certificates"] else EXIT_FAIL


def cmd_foursquares(args):
    if args.value < 0:
        _error("value must be non-negative")
        return EXIT_USAGE
    print(" ".join(format_rational(c) for c in four_squares_rat(args.value)))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="waringq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="pole profile and necessary-condition verdicts")
    p.add_argument("expr")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("represent", help="certificate for a target value")
    p.add_argument("expr")
    p.add_argument("--target", type=_rational_arg, required=True)
    p.add_argument("--mode", choices=("auto", "wp", "ewp", "positive"), default="auto")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_represent)

    p = sub.add_parser("verify", help="re-check a certificate file")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="classify a random corpus")
    p.add_argument("--degree", type=int, choices=(2,), default=2)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("foursquares", help="four-square decomposition of a rational")
    p.add_argument("value", type=_rational_arg)
    p.set_defaults(func=cmd_foursquares)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (ExpressionSyntaxError, MalformedCertificate) as exc:
        _error(f"parse error: {exc}")
        return EXIT_USAGE
    except SearchExhausted as exc:
        _error(f"budget exhausted: {exc}")
        return EXIT_BUDGET
    except WaringError as exc:
        _error(f"error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())


__all__ = ["main", "build_parser", "scan_degree2", "Certificate"]
