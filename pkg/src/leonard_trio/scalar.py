"""Scalar field used throughout the package.

Exact mode uses ``gmpy2.mpq`` when gmpy2 is importable and falls back to
``fractions.Fraction`` otherwise (or when ``LEONARD_TRIO_SCALAR=fraction``).
Float mode uses ``mpmath.mpf`` at a caller-chosen binary precision and is
only meant for limit-convergence studies.
"""
from __future__ import annotations

import os
import re
from contextlib import contextmanager
from fractions import Fraction

import mpmath

_FORCE_FRACTION = os.environ.get("LEONARD_TRIO_SCALAR", "").lower() == "fraction"

try:
    if _FORCE_FRACTION:
        raise ImportError
    import gmpy2

    Rational = gmpy2.mpq
    SCALAR_BACKEND = "gmpy2"
    _RATIONAL_TYPES = (type(gmpy2.mpq(1, 2)), Fraction)
except ImportError:  # pragma: no cover - depends on environment
    gmpy2 = None
    Rational = Fraction
    SCALAR_BACKEND = "fractions"
    _RATIONAL_TYPES = (Fraction,)

_LITERAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def Q(value, den=None):
    """Build an exact rational from an int, a ratio, a rational or a "p/q" string."""
    if den is not None:
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        return Rational(int(value), int(den))
    if isinstance(value, str):
        m = _LITERAL.match(value)
        if not m:
            raise ValueError(f"not a rational literal: {value!r}")
        num, d = m.group(1), m.group(2)
        if d is not None and int(d) == 0:
            raise ValueError(f"zero denominator in {value!r}")
        return Rational(int(num), int(d) if d else 1)
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return Rational(value)
    if isinstance(value, _RATIONAL_TYPES):
        return Rational(int(value.numerator), int(value.denominator))
    if isinstance(value, float):
        raise TypeError("refusing to convert a binary float to an exact rational")
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def coerce(x):
    """Promote plain ints to exact rationals; leave other field elements alone."""
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Rational(x)
    if isinstance(x, str):
        return Q(x)
    return x


def is_rational(x) -> bool:
    return isinstance(x, _RATIONAL_TYPES) or isinstance(x, int)


def is_exact_zero(x) -> bool:
    return x == 0


def fmt(x) -> str:
    """Canonical text form: "p/q" in lowest terms, "p" for integers, decimals for floats."""
    if isinstance(x, mpmath.mpf):
        return mpmath.nstr(x, max(15, int(mpmath.mp.dps)), min_fixed=-4, max_fixed=4)
    if isinstance(x, int):
        return str(x)
    num, den = int(x.numerator), int(x.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def to_float(x):
    """Convert an exact rational (or int) to ``mpmath.mpf`` at the current precision."""
    if isinstance(x, mpmath.mpf):
        return x
    if isinstance(x, int):
        return mpmath.mpf(x)
    return mpmath.mpf(int(x.numerator)) / int(x.denominator)


def magnitude(x):
    """Absolute value usable for max-residual bookkeeping in either mode."""
    return abs(x)


@contextmanager
def float_precision(bits: int):
    """Run a block with mpmath working precision set to ``bits``."""
    with mpmath.workprec(bits):
        yield
