"""Measured-constant records: concise-notation parsing, intervals, datasets.

Dataset format is plain UTF-8 text, one record per line::

    name,year,value,note

``value`` accepts concise uncertainty notation such as
``0.007297352534(13)`` or ``1.60217733(49)e-19``.  Lines starting with ``#``
and blank lines are ignored; everything after the third comma is the note.
"""

from __future__ import annotations

import io
import os
import re
from dataclasses import dataclass
from decimal import Decimal
from importlib import resources
from pathlib import Path
from typing import BinaryIO, Iterable, Union

import mpmath

from .errors import DomainError, DuplicateRecordError, ParseError
from .numerics import RealLike, ctx, real

DATASET_ENV = "FRC_DATASET"

_NUMBER = re.compile(r"\s*([+-]?)(\d+)(?:\.(\d*))?")
_UNCERT = re.compile(r"\((\d+)\)")
_EXPONENT = re.compile(r"[eE]([+-]?\d+)")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def parse_concise(text: str) -> tuple[Decimal, Decimal]:
    """Parse ``"value(uncertainty)"`` into an exact ``(value, uncertainty)`` pair.

    The parenthesized digits count units in the last place of the value,
    so ``"12.345(67)"`` is ``12.345 +/- 0.067``.  A missing group means zero
    uncertainty.  Both results are :class:`~decimal.Decimal` so nothing is
    rounded to binary along the way.

    Raises
    ------
    ParseError
        With ``span`` set to the ``(start, end)`` of the offending text.
    """
    m = _NUMBER.match(text)
    if m is None:
        raise ParseError(f"expected a decimal number in {text!r}", span=(0, len(text)))
    sign, whole, frac = m.group(1), m.group(2), m.group(3) or ""
    pos = m.end()
    digits = None
    u = _UNCERT.match(text, pos)
    if u is not None:
        digits = u.group(1)
        pos = u.end()
    exp = 0
    e = _EXPONENT.match(text, pos)
    if e is not None:
        exp = int(e.group(1))
        pos = e.end()
    rest = text[pos:]
    if rest.strip():
        start = pos + (len(rest) - len(rest.lstrip()))
        raise ParseError(
            f"unexpected {text[start:].rstrip()!r} at column {start + 1} in {text!r}",
            span=(start, len(text.rstrip())),
        )
    value = Decimal(f"{sign}{whole}.{frac}" if frac else f"{sign}{whole}").scaleb(exp)
    uncertainty = Decimal(digits).scaleb(exp - len(frac)) if digits else Decimal(0)
    return value, uncertainty


def format_concise(value: Decimal, uncertainty: Decimal = Decimal(0)) -> str:
    """Inverse of :func:`parse_concise` (plain positional notation, no exponent)."""
    value, uncertainty = Decimal(value), Decimal(uncertainty)
    if uncertainty < 0:
        raise DomainError("uncertainty must be >= 0")
    if uncertainty == 0:
        return f"{value:f}"
    places = max(-value.as_tuple().exponent, -uncertainty.normalize().as_tuple().exponent, 0)
    digits = int(uncertainty.scaleb(places))
    return f"{value:.{places}f}({digits})"


@dataclass(frozen=True)
class ConstantRecord:
    name: str
    year: int
    value: Decimal
    uncertainty: Decimal
    note: str = ""

    def __post_init__(self):
        if self.uncertainty < 0:
            raise DomainError(f"{self.name}: uncertainty must be >= 0")
        if not Decimal(self.value).is_finite():
            raise DomainError(f"{self.name}: value must be finite")

    @property
    def value_real(self) -> mpmath.mpf:
        return real(self.value)

    @property
    def uncertainty_real(self) -> mpmath.mpf:
        return real(self.uncertainty)

    @property
    def concise(self) -> str:
        return format_concise(self.value, self.uncertainty)


def interval_of(record: ConstantRecord, k: RealLike = 1) -> tuple[mpmath.mpf, mpmath.mpf]:
    """``(value - k*u, value + k*u)`` for coverage factor ``k``.

    Integer and Decimal ``k`` are applied in exact decimal arithmetic.
    """
    if isinstance(k, (int, Decimal)) or (isinstance(k, str)):
        k = Decimal(k)
        if k < 0:
            raise DomainError("coverage factor must be >= 0")
        half = k * record.uncertainty
        return real(record.value - half), real(record.value + half)
    k = real(k)
    if k < 0:
        raise DomainError("coverage factor must be >= 0")
    half = k * record.uncertainty_real
    return record.value_real - half, record.value_real + half


def parse_record_line(line: str, lineno: int) -> ConstantRecord:
    fields = line.split(",", 3)
    if len(fields) != 4:
        raise ParseError(f"expected 4 comma-separated fields, got {len(fields)}", line=lineno)
    name, year, value, note = (f.strip() for f in fields)
    if not _NAME.match(name):
        raise ParseError(f"bad record name {name!r}", line=lineno)
    try:
        year_i = int(year)
    except ValueError:
        raise ParseError(f"bad year {year!r}", line=lineno) from None
    try:
        v, u = parse_concise(value)
    except ParseError as exc:
        raise ParseError(str(exc), line=lineno, span=exc.span) from None
    return ConstantRecord(name, year_i, v, u, note)


Source = Union[bytes, str, BinaryIO]


def load_dataset(source: Source) -> list[ConstantRecord]:
    """Parse a dataset from bytes, text, or a binary stream; file order is kept."""
    if isinstance(source, bytes):
        text = source.decode("utf-8")
    elif isinstance(source, str):
        text = source
    else:
        text = source.read()
        if isinstance(text, bytes):
            text = text.decode("utf-8")
    records: list[ConstantRecord] = []
    seen: dict[str, int] = {}
    for lineno, raw in enumerate(io.StringIO(text, newline=None), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rec = parse_record_line(line, lineno)
        if rec.name in seen:
            raise DuplicateRecordError(
                f"line {lineno}: duplicate record {rec.name!r} (first defined on line {seen[rec.name]})"
            )
        seen[rec.name] = lineno
        records.append(rec)
    return records


def bundled_dataset_bytes() -> bytes:
    return resources.files("frc").joinpath("data/constants.csv").read_bytes()


def default_dataset(path: str | os.PathLike | None = None) -> list[ConstantRecord]:
    """Load ``path``, else ``$FRC_DATASET``, else the bundled dataset."""
    path = path or os.environ.get(DATASET_ENV)
    if path:
        return load_dataset(Path(path).read_bytes())
    return load_dataset(bundled_dataset_bytes())


def find_record(records: Iterable[ConstantRecord], name: str) -> ConstantRecord:
    for rec in records:
        if rec.name == name:
            return rec
    raise KeyError(name)


@dataclass(frozen=True)
class PhysicalConstants:
    """SI values of e [C], eps0 [F/m], hbar [J s], c [m/s]."""

    e: mpmath.mpf
    eps0: mpmath.mpf
    hbar: mpmath.mpf
    c: mpmath.mpf

    def __post_init__(self):
        for name in ("e", "eps0", "hbar", "c"):
            object.__setattr__(self, name, real(getattr(self, name)))
        # e == 0 is allowed as the degenerate zero-charge limit
        if self.e < 0:
            raise DomainError("e must be >= 0")
        for name in ("eps0", "hbar", "c"):
            if getattr(self, name) <= 0:
                raise DomainError(f"{name} must be positive")

    @classmethod
    def from_records(cls, records: Iterable[ConstantRecord], year: int = 1986) -> "PhysicalConstants":
        recs = list(records)
        return cls(
            e=find_record(recs, f"e_{year}").value_real,
            eps0=find_record(recs, f"eps0_{year}").value_real,
            hbar=find_record(recs, f"hbar_{year}").value_real,
            c=find_record(recs, f"c_{year}").value_real,
        )


def alpha_from_charge(pc: PhysicalConstants) -> mpmath.mpf:
    """Dimensionless ``e^2 / (4 pi eps0 hbar c)``."""
    return pc.e**2 / (4 * ctx.pi * pc.eps0 * pc.hbar * pc.c)
