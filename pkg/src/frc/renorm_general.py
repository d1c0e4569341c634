"""Generalized finite renormalization with the D/G form of Z3.

Z3^2 = 1 - (alpha_g/3pi) (D(Lambda/m) + G) with ``alpha_g = lam * alpha(nb)``.
The scale ``lam`` is fixed by demanding Lambda/m = 1 at the physical nb;
substituting that into the cutoff relation gives, in ``u = 1/lam``,

    u^2 - u + (alpha_R / 3pi) (ln 2 - 7/6) = 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath

from .alpha import alpha
from .errors import DomainError, NoSolutionError
from .numerics import Bracket, DEFAULT_TOL, RealLike, ctx, invert_monotone, real, solve_quadratic_stable
from .renorm_simple import NB_PHYSICAL

G_VALUE = -ctx.mpf(2) / 3
# value G took before the sign/magnitude correction; kept for comparison only
G_VALUE_ORIGINAL = ctx.mpf(5) / 6

D_BRACKET_HI = ctx.mpf(10) ** 6


@dataclass(frozen=True)
class LambdaRoots:
    physical: mpmath.mpf
    other: mpmath.mpf
    alpha_R: mpmath.mpf

    @property
    def u_roots(self) -> tuple[mpmath.mpf, mpmath.mpf]:
        return 1 / self.physical, 1 / self.other


@dataclass(frozen=True)
class GeneralRenorm:
    nb: int
    lam: mpmath.mpf
    alpha_g: mpmath.mpf
    z3_sq: mpmath.mpf
    lambda_over_m: mpmath.mpf
    C: mpmath.mpf

    @property
    def z3(self) -> mpmath.mpf:
        return ctx.sqrt(self.z3_sq)

    @property
    def alpha_R(self) -> mpmath.mpf:
        return self.z3_sq * self.alpha_g


def D(x: RealLike) -> mpmath.mpf:
    x = real(x)
    if x < 0:
        raise DomainError(f"D is defined for x >= 0, got {x}")
    s = x * x + 1
    return ctx.log(s) + 1 / s - 1


def D_prime(x: RealLike) -> mpmath.mpf:
    x = real(x)
    return 2 * x**3 / (x * x + 1) ** 2


def G() -> mpmath.mpf:
    return +G_VALUE


def C_quantity(alpha_: RealLike, x: RealLike) -> mpmath.mpf:
    a = real(alpha_)
    if a < 0:
        raise DomainError(f"alpha must be >= 0, got {a}")
    return -(a / (3 * ctx.pi)) * (D(x) + G())


def lambda_roots(alpha_R: RealLike | None = None) -> LambdaRoots:
    """Both roots of the scale-factor quadratic; ``physical`` is the one near 1."""
    a = alpha(NB_PHYSICAL) if alpha_R is None else real(alpha_R)
    if not 0 < a < ctx.mpf("0.1"):
        raise DomainError(f"alpha_R must lie in (0, 0.1), got {a}")
    c = a / (3 * ctx.pi) * (ctx.log(2) - ctx.mpf(7) / 6)
    u_big, u_small = solve_quadratic_stable(1, -1, c)
    return LambdaRoots(physical=1 / u_big, other=1 / u_small, alpha_R=a)


def alpha_g(nb: int, lam: RealLike) -> mpmath.mpf:
    return real(lam) * alpha(nb)


def z3_general_sq(nb: int, lam: RealLike, nb_physical: int = NB_PHYSICAL) -> mpmath.mpf:
    lam = real(lam)
    if lam == 0:
        raise DomainError("lambda must be non-zero")
    if nb == nb_physical:
        return 1 / lam
    return alpha(nb_physical) / (lam * alpha(nb))


def cutoff_rhs(nb: int, lam: RealLike, nb_physical: int = NB_PHYSICAL) -> mpmath.mpf:
    """Value D(Lambda/m) must take for the given nb and scale."""
    lam = real(lam)
    return 3 * ctx.pi / (lam * alpha(nb)) * (1 - z3_general_sq(nb, lam, nb_physical)) - G()


def cutoff_general(
    nb: int,
    lam: RealLike | None = None,
    nb_physical: int = NB_PHYSICAL,
    tol: RealLike = DEFAULT_TOL,
) -> mpmath.mpf:
    """Lambda/m for ``nb`` in the generalized scheme, found by inverting D.

    ``lam`` defaults to the physical root at ``alpha(nb_physical)``.  Raises
    :class:`NoSolutionError` when the required D value is negative, since D
    maps [0, inf) onto [0, inf).
    """
    if lam is None:
        lam = lambda_roots(alpha(nb_physical)).physical
    rhs = cutoff_rhs(nb, lam, nb_physical)
    if rhs < 0:
        raise NoSolutionError(
            f"no cutoff for N_b={nb}: D(Lambda/m) would have to equal {ctx.nstr(rhs, 15)} < 0",
            rhs=rhs,
        )
    if rhs == 0:
        return ctx.mpf(0)
    hi = D_BRACKET_HI
    while D(hi) < rhs:
        hi *= hi  # D grows like 2 ln x, so squaring doubles its reach
    return invert_monotone(D, rhs, Bracket(0, hi), tol)


def renorm_general(nb: int, lam: RealLike | None = None, nb_physical: int = NB_PHYSICAL) -> GeneralRenorm:
    if lam is None:
        lam = lambda_roots(alpha(nb_physical)).physical
    lam = real(lam)
    x = cutoff_general(nb, lam, nb_physical)
    ag = alpha_g(nb, lam)
    return GeneralRenorm(
        nb=nb,
        lam=lam,
        alpha_g=ag,
        z3_sq=z3_general_sq(nb, lam, nb_physical),
        lambda_over_m=x,
        C=C_quantity(ag, x),
    )
