"""Finite mass counter-term delta_m / m with the charge cutoff reused."""

from __future__ import annotations

from dataclasses import dataclass

import mpmath

from .alpha import alpha
from .errors import DomainError
from .numerics import RealLike, ctx, real


@dataclass(frozen=True)
class MassCounterTerm:
    nb: int
    lambda_over_m: mpmath.mpf
    ratio: mpmath.mpf


def delta_m_ratio(nb: int, lambda_over_m: RealLike) -> mpmath.mpf:
    x = real(lambda_over_m)
    if x <= 0:
        raise DomainError(f"cutoff ratio must be positive, got {x}")
    return alpha(nb) / (2 * ctx.pi) * (ctx.mpf(3) / 2 * ctx.log(x * x) + ctx.mpf(3) / 4)


def mass_counter_term(nb: int, lambda_over_m: RealLike) -> MassCounterTerm:
    x = real(lambda_over_m)
    return MassCounterTerm(nb, x, delta_m_ratio(nb, x))
