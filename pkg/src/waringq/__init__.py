"""Certificate-producing solver for Waring-type problems over the rationals."""

from .certificate import Certificate, Obstruction, Verdict, verify_certificate
from .errors import WaringError
from .functions import LaurentPolynomial, MobiusTransform, RationalFunction, laurent_of, mobius_compose
from .multiset import SignedMultiset
from .parser import format_function, parse_function
from .solver import Unrepresented, represent

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "Obstruction",
    "Unrepresented",
    "Verdict",
    "LaurentPolynomial",
    "MobiusTransform",
    "RationalFunction",
    "SignedMultiset",
    "WaringError",
    "format_function",
    "laurent_of",
    "mobius_compose",
    "parse_function",
    "represent",
    "verify_certificate",
]
