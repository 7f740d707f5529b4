"""Exact rational helpers.

Values are plain :class:`fractions.Fraction` instances: immutable, always
reduced, denominator positive, ordered like the reals.  This module only adds
construction with a clear error, a ``p/q`` wire form and a display decimal.
"""

from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction
from numbers import Rational

ExactRational = Fraction

__all__ = ["ExactRational", "rat", "as_rational", "to_pq", "from_pq", "to_decimal"]


def rat(num: int, den: int = 1) -> Fraction:
    """Build a reduced rational ``num/den``; raises ZeroDivisionError if den == 0."""
    if den == 0:
        raise ZeroDivisionError(f"rat({num}, 0): zero denominator")
    return Fraction(num, den)


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return from_pq(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def to_pq(x) -> str:
    """Serialize as ``"p/q"``; integers keep an explicit ``/1``."""
    x = as_rational(x)
    return f"{x.numerator}/{x.denominator}"


def from_pq(s: str) -> Fraction:
    s = s.strip()
    num, sep, den = s.partition("/")
    try:
        return rat(int(num), int(den) if sep else 1)
    except ValueError:
        raise ValueError(f"malformed rational {s!r}") from None


def to_decimal(x, digits: int = 12) -> str:
    """Display-only decimal rendering with ``digits`` significant digits."""
    x = as_rational(x)
    with localcontext() as ctx:
        ctx.prec = digits
        d = Decimal(x.numerator) / Decimal(x.denominator)
    s = format(d.normalize(), "f")
    if "." not in s:
        s += ".0"
    return s
