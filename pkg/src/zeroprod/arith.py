"""Exact natural-number and rational arithmetic.

Every probability and bound in this package is an exact reduced fraction;
nothing downstream ever rounds.  Python integers are already arbitrary
precision, so naturals are plain ``int`` values (validated nonnegative) and
rationals are ``fractions.Fraction`` (reduced at construction, structural
equality).  Ring orders near 2**64 square comfortably within ``int``.
"""

from __future__ import annotations

import math
from fractions import Fraction

from zeroprod.errors import InvalidInputError, ZeroDenominatorError

Rational = Fraction


def as_natural(value, name: str = "value") -> int:
    """Validate and return ``value`` as a nonnegative int."""
    if not isinstance(value, int) or isinstance(value, bool):
        raise InvalidInputError(f"{name} must be an integer, got {value!r}")
    if value < 0:
        raise InvalidInputError(f"{name} must be nonnegative, got {value}")
    return value


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two naturals, with gcd(0, b) = b."""
    return math.gcd(as_natural(a, "a"), as_natural(b, "b"))


def rat_make(num: int, den: int) -> Rational:
    """Build the reduced fraction num/den.  den must be >= 1."""
    as_natural(num, "numerator")
    if as_natural(den, "denominator") == 0:
        raise ZeroDenominatorError("denominator must be >= 1")
    return Fraction(num, den)


def rat_mul(a: Rational, b: Rational) -> Rational:
    """Exact reduced product of two rationals."""
    return a * b


def rat_cmp(a: Rational, b: Rational) -> int:
    """Total order by cross-multiplication: -1, 0, or +1."""
    if a < b:
        return -1
    if a > b:
        return 1
    return 0


def rat_str(q: Rational) -> str:
    """Canonical "num/den" text, denominator always present."""
    return f"{q.numerator}/{q.denominator}"


def rat_parse(text: str) -> Rational:
    """Inverse of :func:`rat_str`; also accepts a bare integer."""
    text = text.strip()
    if "/" in text:
        num_s, den_s = text.split("/", 1)
        return rat_make(int(num_s), int(den_s))
    return rat_make(int(text), 1)


def rat_decimal(q: Rational, digits: int = 6) -> str:
    """Fixed-point decimal rendering with ``digits`` fractional digits.

    Rounds half up via integer arithmetic, so the result is deterministic
    across platforms and never passes through floating point.
    """
    if digits < 0:
        raise InvalidInputError("digits must be nonnegative")
    if q < 0:
        raise InvalidInputError("negative rationals are not rendered here")
    scale = 10**digits
    scaled = (2 * q.numerator * scale + q.denominator) // (2 * q.denominator)
    whole, frac = divmod(scaled, scale)
    if digits == 0:
        return str(whole)
    return f"{whole}.{frac:0{digits}d}"


def sqrt_decimal(q: Rational, digits: int = 6) -> str:
    """Fixed-point decimal of sqrt(q), truncated to ``digits`` digits.

    Used for standard-error reporting; exact integer square root keeps the
    rendering byte-stable everywhere.
    """
    if q < 0:
        raise InvalidInputError("square root of a negative rational")
    scale = 10**digits
    # floor(sqrt(a/b) * 10^d) = isqrt(a*b*10^(2d)) // b
    val = math.isqrt(q.numerator * q.denominator * scale * scale) // q.denominator
    whole, frac = divmod(val, scale)
    if digits == 0:
        return str(whole)
    return f"{whole}.{frac:0{digits}d}"
