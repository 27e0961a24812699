"""Exact rational scalars: parsing, serialization strings, decimal rendering.

Arbitrary-precision rationals are ``fractions.Fraction`` throughout the
package (reduced, positive denominator, zero is 0/1, which is exactly the
canonical form we need). This module holds the conversions the CLI and the
serializers share.
"""

from __future__ import annotations

from fractions import Fraction

BigRat = Fraction

__all__ = ["BigRat", "parse_rational", "rational_str", "decimal_str"]


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or a plain integer literal into an exact rational.

    Floating-point syntax is rejected on purpose: all inputs stay exact.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty rational literal")
    if "/" in s:
        num_s, den_s = s.split("/", 1)
        num = int(num_s)
        den = int(den_s)
        if den == 0:
            raise ValueError(f"zero denominator in rational literal {text!r}")
        return Fraction(num, den)
    return Fraction(int(s))


def rational_str(x: Fraction) -> str:
    """Serialize as ``num/den`` with the denominator always explicit."""
    return f"{x.numerator}/{x.denominator}"


def decimal_str(x: Fraction, digits: int) -> str:
    """Fixed-point decimal with ``digits`` places, correctly rounded.

    Rounding is half-to-even on the exact scaled value, so the printed
    string is the correctly rounded decimal of the rational input.
    """
    if digits < 0:
        raise ValueError("digits must be >= 0")
    neg = x < 0
    if neg:
        x = -x
    scaled = x * 10**digits
    q, r = divmod(scaled.numerator, scaled.denominator)
    d = scaled.denominator
    if 2 * r > d or (2 * r == d and q % 2 == 1):
        q += 1
    s = str(q)
    if digits:
        s = s.rjust(digits + 1, "0")
        s = s[:-digits] + "." + s[-digits:]
    return "-" + s if (neg and q) else s
