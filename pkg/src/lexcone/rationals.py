"""Helpers for exact rationals serialised as strings.

All arithmetic in the package uses :class:`fractions.Fraction`; floats are
never accepted.  On the wire a rational is the string ``"p/q"`` or ``"p"``.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

RationalLike = Rational | int | str


def as_fraction(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to Fraction.

    Floats are rejected: the library is exact end to end.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational value")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational string: {value!r}") from exc
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def format_rational(value: Rational) -> str:
    """Render a rational as ``"p"`` or ``"p/q"`` (canonical reduced form)."""
    q = as_fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
