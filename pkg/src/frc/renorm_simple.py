"""Finite charge renormalization with the logarithmic Z3 factor.

The cutoff ratio Lambda/m is tied to nb by equating the QED factor
``1 - (alpha/3pi) ln(Lambda^2/m^2)`` with the squared GT factor
``alpha(NB_PHYSICAL) / alpha(nb)``.  At ``nb == NB_PHYSICAL`` the cutoff is
exactly the electron mass.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath

from .alpha import alpha
from .errors import DomainError
from .numerics import RealLike, ctx, real

NB_PHYSICAL = 29


@dataclass(frozen=True)
class SimpleRenorm:
    nb: int
    alpha_th: mpmath.mpf
    z3: mpmath.mpf
    lambda_over_m: mpmath.mpf
    alpha_R: mpmath.mpf


def z3_gt(nb: int, nb_physical: int = NB_PHYSICAL) -> mpmath.mpf:
    if nb == nb_physical:
        return ctx.mpf(1)
    return ctx.sqrt(alpha(nb_physical) / alpha(nb))


def alpha_renormalized(alpha_th: RealLike, lambda_over_m: RealLike) -> mpmath.mpf:
    alpha_th, x = real(alpha_th), real(lambda_over_m)
    if alpha_th < 0:
        raise DomainError(f"theoretical alpha must be >= 0, got {alpha_th}")
    if x <= 0:
        raise DomainError(f"cutoff ratio must be positive, got {x}")
    return (1 - alpha_th / (3 * ctx.pi) * ctx.log(x * x)) * alpha_th


def cutoff_simple(nb: int, nb_physical: int = NB_PHYSICAL) -> mpmath.mpf:
    """Lambda/m solving the simple-scheme identification for ``nb``."""
    a = alpha(nb)
    return ctx.exp(3 * ctx.pi / (2 * a) * (1 - z3_gt(nb, nb_physical) ** 2))


def check_consistency(nb: int, nb_physical: int = NB_PHYSICAL) -> mpmath.mpf:
    """Residual of the QED-vs-GT Z3^2 identification at the solved cutoff."""
    a = alpha(nb)
    x = cutoff_simple(nb, nb_physical)
    return (1 - a / (3 * ctx.pi) * ctx.log(x * x)) - z3_gt(nb, nb_physical) ** 2


def apply_z3_charge(e: RealLike, z3: RealLike) -> mpmath.mpf:
    return real(z3) * real(e)


def renorm_simple(nb: int, nb_physical: int = NB_PHYSICAL) -> SimpleRenorm:
    a = alpha(nb)
    x = cutoff_simple(nb, nb_physical)
    return SimpleRenorm(
        nb=nb,
        alpha_th=a,
        z3=z3_gt(nb, nb_physical),
        lambda_over_m=x,
        alpha_R=alpha_renormalized(a, x),
    )
