"""Parsing and formatting of exact rationals.

Rationals travel through JSON as strings ("3", "-1/2") so that no value is
ever routed through a binary float.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational as _RationalABC

from .errors import InvalidSpec

_RATIONAL = re.compile(r"[+-]?\d+(/\d+)?")


def to_fraction(value) -> Fraction:
    """Coerce ints, Fractions and integer or "p/q" strings to a Fraction.

    Floats are rejected: they would silently smuggle rounding error into
    sign-critical computations.
    """
    if isinstance(value, bool):
        raise InvalidSpec(f"not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip().replace("−", "-")
        if not _RATIONAL.fullmatch(text):
            raise InvalidSpec(f"not a rational: {value!r} (expected an integer or p/q)")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidSpec(f"not a rational: {value!r}") from exc
    raise InvalidSpec(f"not a rational: {value!r}")


def format_fraction(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
