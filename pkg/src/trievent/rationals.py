"""Reading and writing exact rationals at the package boundary.

Internally everything is :class:`fractions.Fraction`.  Text form is
``p/q`` in lowest terms, or a bare integer when the denominator is 1,
which is exactly what ``str(Fraction(...))`` produces.  JSON form is
``{"num": p, "den": q}`` with a positive denominator and gcd 1.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError

_RATIONAL = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Fraction from ``p/q`` or integer text; rejects anything else."""
    text = text.strip()
    if not _RATIONAL.match(text):
        raise ParseError(f"not a rational (expected p/q or an integer): {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in rational: {text!r}") from None


def rational_json(value: Fraction) -> dict:
    """JSON object form, lowest terms, positive denominator."""
    return {"num": value.numerator, "den": value.denominator}


def rational_from_json(obj) -> Fraction:
    if not isinstance(obj, dict) or set(obj) != {"num", "den"}:
        raise ParseError(f"not a rational object: {obj!r}")
    return Fraction(obj["num"], obj["den"])
