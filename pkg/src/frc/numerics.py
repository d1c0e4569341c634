"""Extended-precision scalars and the generic numeric algorithms built on them.

Every quantity in the package is an ``mpf`` owned by :data:`ctx`, a private
mpmath context pinned at :data:`WORK_DPS` significant digits.  Using a private
context keeps the working precision independent of whatever the caller has
done to ``mpmath.mp``.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Callable, Union

import mpmath

from .errors import BracketError, DegenerateInputError, DomainError

WORK_DPS = 50
DEFAULT_TOL_EXP = -30

ctx = mpmath.MPContext()
ctx.dps = WORK_DPS

Real = mpmath.mpf
RealLike = Union[int, float, str, Decimal, Fraction, "mpmath.mpf"]

pi = ctx.pi


def real(x: RealLike) -> mpmath.mpf:
    """Convert ``x`` to a working-precision real.

    Strings and :class:`~decimal.Decimal` values go through their decimal
    representation so no binary float rounding happens first.
    """
    if isinstance(x, Decimal):
        return ctx.mpf(str(x))
    if isinstance(x, Fraction):
        return ctx.mpf(x.numerator) / x.denominator
    return ctx.mpf(x)


DEFAULT_TOL = ctx.mpf(10) ** DEFAULT_TOL_EXP


@dataclass(frozen=True)
class Bracket:
    lo: mpmath.mpf
    hi: mpmath.mpf

    def __post_init__(self):
        lo, hi = real(self.lo), real(self.hi)
        if not lo < hi:
            raise DomainError(f"bracket requires lo < hi, got [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)


def solve_quadratic_stable(a: RealLike, b: RealLike, c: RealLike):
    """Real roots of ``a x^2 + b x + c = 0`` ordered (larger, smaller).

    The larger-magnitude root comes from the sign-adjusted formula and the
    other from ``r1 * r2 = c / a``, so neither suffers cancellation.
    """
    a, b, c = real(a), real(b), real(c)
    if a == 0:
        raise DegenerateInputError("leading coefficient is zero; not a quadratic")
    disc = b * b - 4 * a * c
    if disc < 0:
        raise DomainError(f"negative discriminant {ctx.nstr(disc, 10)}; roots are complex")
    sign = 1 if b >= 0 else -1
    q = -(b + sign * ctx.sqrt(disc)) / 2
    if q == 0:
        # b == 0 and c == 0
        return ctx.mpf(0), ctx.mpf(0)
    r1 = q / a
    r2 = c / q
    return (r1, r2) if r1 >= r2 else (r2, r1)


def invert_monotone(
    f: Callable[[mpmath.mpf], mpmath.mpf],
    y: RealLike,
    bracket: Bracket,
    tol: RealLike = DEFAULT_TOL,
    *,
    max_iter: int = 2000,
) -> mpmath.mpf:
    """Solve ``f(x) = y`` for strictly monotone ``f`` on ``bracket``.

    Bisection shrinks the bracket until the secant step becomes reliable;
    secant (Illinois-safeguarded: any step leaving the bracket falls back to
    bisection) then polishes until ``|f(x) - y| <= tol``.
    """
    y, tol = real(y), real(tol)
    lo, hi = bracket.lo, bracket.hi
    flo, fhi = f(lo) - y, f(hi) - y
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise BracketError(
            f"target {ctx.nstr(y, 15)} not straddled by f on [{ctx.nstr(lo, 15)}, {ctx.nstr(hi, 15)}]"
        )

    # coarse bisection: 40 halvings leave the bracket ~1e-12 of its width
    for _ in range(40):
        mid = (lo + hi) / 2
        fm = f(mid) - y
        if abs(fm) <= tol:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm

    side = 0
    for _ in range(max_iter):
        x = hi - fhi * (hi - lo) / (fhi - flo)
        if not lo < x < hi:
            x = (lo + hi) / 2
        fx = f(x) - y
        if abs(fx) <= tol:
            return x
        if (fx > 0) == (flo > 0):
            lo, flo = x, fx
            if side == -1:
                fhi /= 2
            side = -1
        else:
            hi, fhi = x, fx
            if side == 1:
                flo /= 2
            side = 1
        if hi - lo <= ctx.eps * max(abs(lo), abs(hi), 1):
            return x
    raise ArithmeticError("invert_monotone did not converge")  # pragma: no cover


def to_fraction(x: RealLike) -> Fraction:
    """Exact rational value of ``x`` (binary mpf values convert exactly)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Decimal)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(Decimal(x))
    if isinstance(x, float):
        return Fraction(x)
    x = real(x)
    if not ctx.isfinite(x):
        raise DomainError(f"cannot round non-finite value {x}")
    sign, man, exp, _ = x._mpf_
    # man_exp drops the sign, so read the raw tuple
    return (-1) ** sign * Fraction(man) * Fraction(2) ** exp


def round_decimal(x: RealLike, places: int) -> str:
    """Round half-to-even to exactly ``places`` fractional digits."""
    if places < 0:
        raise DomainError("places must be >= 0")
    frac = to_fraction(x)
    n = round(frac * 10**places)  # Fraction.__round__ is half-even
    sign = "-" if n < 0 else ""
    digits = str(abs(n))
    if places == 0:
        return sign + digits
    digits = digits.rjust(places + 1, "0")
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def format_sig(x: RealLike, sig: int) -> str:
    """Plain-notation decimal string with ``sig`` significant digits."""
    x = real(x)
    if x == 0:
        return "0"
    frac = to_fraction(x)
    # exponent of the leading digit
    lead = int(ctx.floor(ctx.log10(abs(x))))
    places = sig - 1 - lead
    if places <= 0:
        q = 10 ** (-places)
        return str(round(frac / q) * q)
    s = round_decimal(frac, places)
    # log10 can land one below the true leading digit at exact powers of ten
    if len(s.lstrip("-").replace(".", "").lstrip("0")) > sig:
        s = round_decimal(frac, places - 1)
    return s
