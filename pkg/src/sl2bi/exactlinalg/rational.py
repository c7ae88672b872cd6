"""Text form of rationals: ``"p/q"``, or ``"p"`` when ``q == 1``."""
import re
from fractions import Fraction

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text):
    """Parse ``"p/q"`` or ``"p"`` into a Fraction.

    >>> parse_rational("-3/2")
    Fraction(-3, 2)
    """
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"not a rational: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(x):
    return str(Fraction(x))


def as_rational(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")
