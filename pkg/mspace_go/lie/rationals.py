"""
Exact rational values and their wire format.

Rationals travel as decimal-free strings "p/q" (or "n" for integers). Floats
and decimal/exponent strings are rejected: every value entering the library
must be exact.
"""

import re
from fractions import Fraction
from typing import Annotated, Any, Iterable, List, Sequence

from pydantic import PlainSerializer, PlainValidator

_RATIONAL_RE = re.compile(r"^\s*[+-]?[0-9]+(\s*/\s*[0-9]+)?\s*$", re.ASCII)


def parse_rational(value: Any) -> Fraction:
    """
    Parse an exact rational from a wire value.

    Accepts Fraction, int (not bool) and strings "p/q" / "n".

    Raises:
        ValueError: for floats, decimal strings, zero denominators and junk
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"Boolean is not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise ValueError(f"Floats are not exact, write the value as 'p/q': {value!r}")
    if isinstance(value, str):
        if not _RATIONAL_RE.match(value):
            raise ValueError(f"Rational must be 'p/q' or an integer, got '{value}'")
        try:
            return Fraction(value.replace(" ", ""))
        except ZeroDivisionError:
            raise ValueError(f"Zero denominator in '{value}'") from None
    raise ValueError(f"Cannot read a rational from {type(value).__name__}: {value!r}")


def format_rational(value: Fraction) -> str:
    """Wire form: '3/2', '-1', '0'."""
    return str(Fraction(value))


Rational = Annotated[
    Fraction,
    PlainValidator(parse_rational),
    PlainSerializer(format_rational, return_type=str),
]
"""Pydantic field type for exact rationals with string serialization."""


def as_fractions(values: Iterable[Any]) -> List[Fraction]:
    return [parse_rational(v) for v in values]


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(u, v)), Fraction(0))
