""" Exact-arithmetic helpers shared by the solvers and generators.

Every rate in aegis is an integer number of base units and every ratio
is a Fraction; these helpers keep it that way.

"""
from decimal import Decimal, ROUND_HALF_UP
from fractions import Fraction
import math
import numbers


def as_fraction(value):
    """Convert ints, Fractions, Decimals, numeric strings or floats to a
    Fraction.  Floats go through their shortest repr, so 0.9 becomes 9/10
    rather than its binary expansion.

    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rates")
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, (Decimal, str)):
        return Fraction(value)
    raise TypeError("cannot convert %r to an exact fraction" % (value,))


def round_half_up(value):
    """Round a non-negative exact quantity to the nearest integer, halves up."""
    value = as_fraction(value)
    return math.floor(value + Fraction(1, 2))


def ceil_div(a, b):
    """Integer ceiling of a / b for a >= 0, b > 0."""
    return -(-a // b)


def format_fraction(value, places=6):
    """Fixed-point text for an exact quantity.

    The rounding is done in Decimal so the text depends only on the
    value, never on float formatting.
    """
    value = as_fraction(value)
    quantum = Decimal(1).scaleb(-places)
    dec = Decimal(value.numerator) / Decimal(value.denominator)
    return str(dec.quantize(quantum, rounding=ROUND_HALF_UP))


def is_integral_rate(value):
    """True for non-negative integers (bools excluded)."""
    return (isinstance(value, numbers.Integral) and not isinstance(value, bool)
            and value >= 0)
