"""Exact scalar arithmetic: arbitrary-precision rationals and counting helpers.

Every scalar in this package is a `fractions.Fraction` (canonical reduced
form, positive denominator, exact arithmetic).  `Rat` is the package-wide
alias for it.  Rationals cross file formats and the CLI boundary as
"num/den" strings, never as decimals.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

Rat = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

_RAT_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def binomial(n: int, k: int) -> int:
    """C(n, k) as an exact integer; 0 outside the range 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"binomial: n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial: n must be nonnegative, got {n}")
    return math.factorial(n)


def rat_from_str(text: str) -> Fraction:
    """Parse "num/den" (or a bare integer).  Decimals are rejected."""
    m = _RAT_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not a rational string: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def rat_to_str(value: Fraction) -> str:
    """Canonical "num/den" rendering; the sign sits on the numerator."""
    return f"{value.numerator}/{value.denominator}"


def rat_to_decimal_str(value: Fraction, places: int = 9) -> str:
    """Deterministic fixed-point rendering (truncated toward zero, lossy)."""
    sign = "-" if value < 0 else ""
    scaled = abs(value.numerator) * 10**places // value.denominator
    whole, frac = divmod(scaled, 10**places)
    return f"{sign}{whole}.{frac:0{places}d}"
