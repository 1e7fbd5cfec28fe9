"""Exact rational coefficient backend.

All coefficients in the package are arbitrary-precision rationals; no floating
point is used anywhere.  By default the gmpy2 ``mpq`` type is used when it is
importable (it is a drop-in replacement and considerably faster); setting the
environment variable ``NCIDEAL_RATIONALS=fraction`` forces the pure-stdlib
``fractions.Fraction`` implementation, ``NCIDEAL_RATIONALS=gmpy2`` requires
gmpy2.  See benchmarks/bench_backends.py for a comparison of the two.
"""

import math
import os
from fractions import Fraction

_choice = os.environ.get("NCIDEAL_RATIONALS", "auto").lower()

if _choice in ("auto", "gmpy2"):
    try:
        from gmpy2 import mpq as QQ

        BACKEND = "gmpy2"
    except ImportError:
        if _choice == "gmpy2":
            raise
        QQ = Fraction
        BACKEND = "fraction"
elif _choice == "fraction":
    QQ = Fraction
    BACKEND = "fraction"
else:
    raise RuntimeError(f"unknown NCIDEAL_RATIONALS backend {_choice!r}")

ZERO = QQ(0)
ONE = QQ(1)


def rat(num, den=1):
    """Exact rational num/den."""
    return QQ(num, den)


def rat_from_str(s):
    """Parse '7', '-7' or '3/2' into a rational."""
    s = s.strip()
    if "/" in s:
        num, den = s.split("/", 1)
        return QQ(int(num), int(den))
    return QQ(int(s))


def rat_str(q):
    """Canonical text form, e.g. '3/2' or '-4'."""
    num, den = q.numerator, q.denominator
    if den == 1:
        return str(num)
    return f"{num}/{den}"


def rat_sqrt(q):
    """Exact square root of a nonnegative rational, or None if irrational."""
    num, den = int(q.numerator), int(q.denominator)
    if num < 0:
        return None
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return QQ(rn, rd)
