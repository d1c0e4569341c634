"""The two-integer fine-structure formula and integer searches over it.

``alpha_full(N, nb) = nb * cos(pi/N) * tan(pi/(N*nb)) / pi``

For fixed ``N`` the value decreases strictly in ``nb`` towards
``cos(pi/N)/N``, which is what makes the bisection-based interval search
below valid.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import mpmath

from .errors import DomainError
from .numerics import RealLike, ctx, real

N_DEFAULT = 137
NB_MAX_DEFAULT = 10**6


@dataclass(frozen=True)
class AlphaPoint:
    N: int
    nb: int
    alpha: mpmath.mpf

    @classmethod
    def at(cls, N: int, nb: int) -> "AlphaPoint":
        return cls(N, nb, alpha_full(N, nb))


@dataclass(frozen=True)
class SearchOutcome:
    matches: tuple[AlphaPoint, ...]
    interval: tuple[mpmath.mpf, mpmath.mpf]

    @property
    def nbs(self) -> list[int]:
        return [p.nb for p in self.matches]


def _check_N(N: int) -> None:
    if int(N) != N or N < 3:
        raise DomainError(f"N must be an integer >= 3, got {N}")


def _check_nb(nb: int) -> None:
    if int(nb) != nb or nb < 1:
        raise DomainError(f"N_b must be an integer >= 1, got {nb}")


@lru_cache(maxsize=64)
def _cos_sector(N: int) -> mpmath.mpf:
    return ctx.cos(ctx.pi / N)


def alpha_full(N: int = N_DEFAULT, nb: int = 29) -> mpmath.mpf:
    _check_N(N)
    _check_nb(nb)
    return nb * _cos_sector(N) * ctx.tan(ctx.pi / (N * nb)) / ctx.pi


def alpha(nb: int) -> mpmath.mpf:
    """Shorthand for ``alpha_full(137, nb)``."""
    return alpha_full(N_DEFAULT, nb)


def alpha_limit(N: int = N_DEFAULT) -> mpmath.mpf:
    """Infimum of ``alpha_full(N, nb)`` over nb, reached as nb grows without bound."""
    _check_N(N)
    return _cos_sector(N) / N


def nearest_nb(N: int, target: RealLike, nb_max: int = NB_MAX_DEFAULT) -> tuple[int, mpmath.mpf]:
    """Return ``(nb, alpha_full(N, nb) - target)`` for the nb in ``[1, nb_max]`` closest to target.

    Ties go to the smaller nb.
    """
    _check_nb(nb_max)
    target = real(target)
    # first index whose value is <= target; the nearest is it or its predecessor
    k = _first_at_or_below(N, target, nb_max)
    candidates = [nb for nb in (k - 1, k) if 1 <= nb <= nb_max]
    best = min(candidates, key=lambda nb: (abs(alpha_full(N, nb) - target), nb))
    return best, alpha_full(N, best) - target


def _first_at_or_below(N: int, y: mpmath.mpf, nb_max: int) -> int:
    """Smallest nb in [1, nb_max] with alpha <= y, or nb_max + 1 if none."""
    lo, hi = 1, nb_max + 1
    while lo < hi:
        mid = (lo + hi) // 2
        if alpha_full(N, mid) <= y:
            hi = mid
        else:
            lo = mid + 1
    return lo


def _last_at_or_above(N: int, y: mpmath.mpf, nb_max: int) -> int:
    """Largest nb in [1, nb_max] with alpha >= y, or 0 if none."""
    lo, hi = 0, nb_max
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if alpha_full(N, mid) >= y:
            lo = mid
        else:
            hi = mid - 1
    return lo


def search_interval(
    N: int,
    lo: RealLike,
    hi: RealLike,
    nb_max: int = NB_MAX_DEFAULT,
) -> SearchOutcome:
    """All nb in ``[1, nb_max]`` whose alpha lies in the closed interval ``[lo, hi]``.

    Uses monotone decrease in nb to bisect for the two boundary indices, so
    the cost is logarithmic in ``nb_max`` plus the number of matches.
    """
    _check_N(N)
    _check_nb(nb_max)
    lo, hi = real(lo), real(hi)
    if lo > hi:
        raise DomainError(f"empty interval: lo={lo} > hi={hi}")
    first = _first_at_or_below(N, hi, nb_max)
    last = _last_at_or_above(N, lo, nb_max)
    points = []
    for nb in range(first, last + 1):
        p = AlphaPoint.at(N, nb)
        if not lo <= p.alpha <= hi:  # boundary re-check by direct evaluation
            raise AssertionError(f"monotone search produced out-of-interval nb={nb}")
        points.append(p)
    return SearchOutcome(tuple(points), (lo, hi))

