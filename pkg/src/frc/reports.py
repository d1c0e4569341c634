"""Structured reports: the 1986 table, the revised prediction, and known misprints."""

from __future__ import annotations

from dataclasses import dataclass

import mpmath

from .alpha import N_DEFAULT, NB_MAX_DEFAULT, alpha, nearest_nb, search_interval
from .codata import ConstantRecord, find_record, interval_of
from .mass import delta_m_ratio
from .numerics import ctx, format_sig, round_decimal
from .renorm_general import cutoff_general, lambda_roots
from .renorm_simple import NB_PHYSICAL

ALPHA_PLACES = 12

# values as printed in the source text, compared against recomputation below
PRINTED_LAMBDA_PHYSICAL = "0.999633635"
PRINTED_LAMBDA_OTHER = "-2728.52"
PRINTED_CUTOFF_20 = "1.000594024"
PRINTED_DELTA_M_29 = "0.00089106"
CUTOFF_RESIDUAL_LIMIT = ctx.mpf("1e-8")


@dataclass(frozen=True)
class TableRow:
    label: str
    nb: int | None
    alpha: mpmath.mpf

    @property
    def alpha_str(self) -> str:
        return round_decimal(self.alpha, ALPHA_PLACES)


def table1(records: list[ConstantRecord], record: str = "alpha_1986") -> list[TableRow]:
    """Bounds, centre, and every in-range nb, ordered by descending alpha."""
    rec = find_record(records, record)
    lo, hi = interval_of(rec, 1)
    rows = [
        TableRow("alpha_Nucmax", None, hi),
        TableRow("alpha_Nuc", None, rec.value_real),
        TableRow("alpha_Nucmin", None, lo),
    ]
    rows += [TableRow(f"alpha({p.nb})", p.nb, p.alpha) for p in search_interval(N_DEFAULT, lo, hi).matches]
    return sorted(rows, key=lambda r: -r.alpha)


@dataclass(frozen=True)
class Prediction:
    record: ConstantRecord
    interval: tuple[mpmath.mpf, mpmath.mpf]
    matches: list[int]
    nb: int
    alpha: mpmath.mpf
    diff: mpmath.mpf

    def lines(self) -> list[str]:
        lo, hi = self.interval
        match_str = ", ".join(str(n) for n in self.matches) or "none"
        return [
            f"record: {self.record.name} = {self.record.concise}",
            f"interval: [{round_decimal(lo, ALPHA_PLACES)}, {round_decimal(hi, ALPHA_PLACES)}]",
            f"matches: {match_str}",
            f"N_b={self.nb}, alpha={round_decimal(self.alpha, ALPHA_PLACES)}, "
            f"|diff|={ctx.nstr(abs(self.diff), 4, min_fixed=1, max_fixed=0)}",
        ]


def prediction(
    records: list[ConstantRecord],
    record: str = "alpha_1999_speculated",
    k=1,
    nb_max: int = NB_MAX_DEFAULT,
) -> Prediction:
    rec = find_record(records, record)
    lo, hi = interval_of(rec, k)
    outcome = search_interval(N_DEFAULT, lo, hi, nb_max)
    nb, diff = nearest_nb(N_DEFAULT, rec.value_real, nb_max)
    return Prediction(rec, (lo, hi), outcome.nbs, nb, alpha(nb), diff)


@dataclass(frozen=True)
class Discrepancy:
    key: str
    where: str
    printed: str
    computed: str
    detail: str


def _lambda_entry() -> Discrepancy:
    roots = lambda_roots()
    aR = roots.alpha_R
    # roots under the quadratic exactly as printed, with +7/6
    k_printed = aR / (3 * ctx.pi) * (ctx.log(2) + ctx.mpf(7) / 6)
    s = ctx.sqrt(1 - 4 * k_printed)
    printed_form = (2 / (1 + s), 2 / (1 - s))
    k = aR / (3 * ctx.pi) * (ctx.log(2) - ctx.mpf(7) / 6)
    approx = 1 / (1 - k)
    return Discrepancy(
        key="lambda-quadratic-sign",
        where="scale-factor quadratic (printed with ln2 + 7/6; approximation printed with ln2 - 7/6)",
        printed=f"lambda = {PRINTED_LAMBDA_PHYSICAL}, {PRINTED_LAMBDA_OTHER}",
        computed=f"lambda = {format_sig(roots.physical, 12)}, {format_sig(roots.other, 9)}",
        detail=(
            f"with +7/6 the roots would be {format_sig(printed_form[0], 12)} and "
            f"{format_sig(printed_form[1], 9)}; only ln2 - 7/6 reproduces both printed roots. "
            f"The first-order approximation 1/(1-k) gives {format_sig(approx, 12)}, "
            f"off the exact root by {ctx.nstr(abs(approx - roots.physical), 3)}."
        ),
    )


def _mass_entry() -> Discrepancy:
    dm = delta_m_ratio(NB_PHYSICAL, 1)
    return Discrepancy(
        key="mass-counter-term-digit",
        where="delta_m(29)/m = 3 alpha(29) / (8 pi)",
        printed=PRINTED_DELTA_M_29,
        computed=format_sig(dm, 9),
        detail=(
            f"difference {ctx.nstr(abs(dm - ctx.mpf(PRINTED_DELTA_M_29)), 3)}; "
            "rounds to 0.00087106, one digit away from the printed value"
        ),
    )


def _cutoff_entry() -> Discrepancy | None:
    x = cutoff_general(20)
    residual = abs(x - ctx.mpf(PRINTED_CUTOFF_20))
    if residual <= CUTOFF_RESIDUAL_LIMIT:
        return None
    return Discrepancy(
        key="general-cutoff-20",
        where="generalized cutoff Lambda(20)/m",
        printed=PRINTED_CUTOFF_20,
        computed=format_sig(x, 12),
        detail=f"residual {ctx.nstr(residual, 3)} exceeds {ctx.nstr(CUTOFF_RESIDUAL_LIMIT, 1)}",
    )


def cutoff_20_residual() -> mpmath.mpf:
    return cutoff_general(20) - ctx.mpf(PRINTED_CUTOFF_20)


def discrepancies() -> list[Discrepancy]:
    entries = [_lambda_entry(), _mass_entry(), _cutoff_entry()]
    return [e for e in entries if e is not None]
