"""
Tests for the exact rational wire format.

Validates:
- Accepted forms: Fraction, int, "p/q", "n"
- Rejected forms: float, bool, decimals, zero denominators
- Pydantic round trip through the Rational field type
"""

from fractions import Fraction

import pytest
from pydantic import BaseModel, ValidationError

from mspace_go.lie.rationals import Rational, format_rational, parse_rational


class TestParseRational:
    """Test parse_rational on accepted and rejected inputs."""

    @pytest.mark.parametrize(
        "value,expected",
        [
            ("3/2", Fraction(3, 2)),
            ("-1/4", Fraction(-1, 4)),
            ("6/4", Fraction(3, 2)),
            (" 7 ", Fraction(7)),
            (5, Fraction(5)),
            (Fraction(2, 3), Fraction(2, 3)),
        ],
    )
    def test_accepts_exact_forms(self, value, expected):
        """Test that exact inputs parse to the expected Fraction."""
        assert parse_rational(value) == expected

    @pytest.mark.parametrize("value", [0.5, "0.5", "1e3", "abc", "1/2/3", True, None])
    def test_rejects_inexact_or_junk(self, value):
        """Test that floats, decimals, booleans and junk are rejected."""
        with pytest.raises(ValueError):
            parse_rational(value)

    @pytest.mark.parametrize("value", ["١/٢", "３", "1/２"])
    def test_rejects_non_ascii_digits(self, value):
        """Test that only ASCII digits and spaces are accepted."""
        with pytest.raises(ValueError, match="must be 'p/q'"):
            parse_rational(value)

    def test_zero_denominator(self):
        """Test that a zero denominator is a ValueError, not a ZeroDivisionError."""
        with pytest.raises(ValueError, match="Zero denominator"):
            parse_rational("3/0")


class TestFormatRational:
    """Test the wire form of rationals."""

    def test_format(self):
        assert format_rational(Fraction(3, 2)) == "3/2"
        assert format_rational(Fraction(-4, 2)) == "-2"
        assert format_rational(Fraction(0)) == "0"


class TestRationalField:
    """Test the Rational pydantic field type."""

    class Holder(BaseModel):
        value: Rational

    def test_validates_and_serializes(self):
        """Test that the field parses strings and dumps them back as strings."""
        h = self.Holder(value="10/4")
        assert h.value == Fraction(5, 2)
        assert h.model_dump() == {"value": "5/2"}

    def test_float_is_validation_error(self):
        with pytest.raises(ValidationError):
            self.Holder(value=0.25)
