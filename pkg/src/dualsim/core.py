"""Canonical domain types, units, and bundled-dataset access.

Canonical units used throughout the package:

* money      -> trillion RMB
* population -> million persons
* land area  -> million Mu  (1 Mu is approximately 666.667 square meters)
* rates      -> dimensionless fraction per year (0.061 means 6.1%/yr)

Source data mixes billions and trillions freely; everything is normalized
exactly once at ingestion.  Unit conversion is exact decimal scaling (a pure
power-of-ten exponent shift), so conversion round-trips are identities rather
than accumulating float rounding.

All types are immutable after construction and safe to share across
concurrent scenario runs.
"""

from __future__ import annotations

import csv
import decimal
import os
from dataclasses import dataclass
from decimal import Decimal
from pathlib import Path
from typing import Iterator, Sequence

__all__ = [
    "DualsimError",
    "ValidationError",
    "DataError",
    "Rate",
    "Money",
    "Population",
    "LandArea",
    "AnnualSeries",
    "EconomyBaseline",
    "convert_units",
    "load_baseline",
    "load_series",
    "data_dir",
    "bundled_path",
    "DATA_DIR_ENV",
]


class DualsimError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(DualsimError):
    """An invariant or configuration constraint was violated."""


class DataError(DualsimError):
    """A data file is missing, malformed, or internally inconsistent."""


# A growth rate or yield expressed as a dimensionless fraction per year.
Rate = float


# ---------------------------------------------------------------------------
# Units
# ---------------------------------------------------------------------------

# unit name -> (dimension, decimal exponent relative to the canonical unit)
_UNITS: dict[str, tuple[str, int]] = {
    "billion RMB": ("money", -3),
    "trillion RMB": ("money", 0),
    "persons": ("population", -6),
    "million persons": ("population", 0),
    "Mu": ("land", -6),
    "million Mu": ("land", 0),
}


def convert_units(value: float | int | str | Decimal, from_unit: str, to_unit: str) -> Decimal:
    """Convert ``value`` between two supported units by exact decimal scaling.

    Returns a ``Decimal`` so that no rounding happens until the caller decides
    to collapse to float; ``convert_units(convert_units(x, u, v), v, u)`` is an
    exact identity.  Floats are read at their shortest decimal representation.

    Raises ``DataError`` for an unknown unit or a cross-dimension pair.
    """
    try:
        dim_from, exp_from = _UNITS[from_unit]
        dim_to, exp_to = _UNITS[to_unit]
    except KeyError as exc:
        raise DataError(f"unknown unit {exc.args[0]!r}") from None
    if dim_from != dim_to:
        raise DataError(f"cannot convert {from_unit!r} to {to_unit!r}: different dimensions")
    if isinstance(value, float):
        dec = Decimal(repr(value))
    else:
        dec = Decimal(value)
    with decimal.localcontext() as ctx:
        ctx.prec = 60
        ctx.Emax = 999999
        ctx.Emin = -999999
        return dec.scaleb(exp_from - exp_to)


# ---------------------------------------------------------------------------
# Value wrappers
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Money:
    """An amount of money in trillion RMB (may be negative for flows)."""

    amount: float

    def __post_init__(self) -> None:
        if not _finite(self.amount):
            raise ValidationError(f"money amount must be finite, got {self.amount!r}")

    @classmethod
    def from_billions(cls, billions: float) -> "Money":
        return cls(float(convert_units(billions, "billion RMB", "trillion RMB")))

    def __add__(self, other: "Money") -> "Money":
        return Money(self.amount + other.amount)

    def __sub__(self, other: "Money") -> "Money":
        return Money(self.amount - other.amount)

    def __mul__(self, scalar: float) -> "Money":
        return Money(self.amount * scalar)

    __rmul__ = __mul__


@dataclass(frozen=True, order=True)
class Population:
    """A population count in million persons (non-negative)."""

    count: float

    def __post_init__(self) -> None:
        if not _finite(self.count) or self.count < 0:
            raise ValidationError(f"population must be finite and non-negative, got {self.count!r}")


@dataclass(frozen=True, order=True)
class LandArea:
    """A land area in million Mu (non-negative)."""

    area: float

    def __post_init__(self) -> None:
        if not _finite(self.area) or self.area < 0:
            raise ValidationError(f"land area must be finite and non-negative, got {self.area!r}")


def _finite(x: float) -> bool:
    return x == x and x not in (float("inf"), float("-inf"))


# ---------------------------------------------------------------------------
# Annual series
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AnnualSeries:
    """A contiguous annual series of decimal values, one per calendar year."""

    start_year: int
    values: tuple[float, ...]

    def __init__(self, start_year: int, values: Sequence[float]):
        vals = tuple(float(v) for v in values)
        if len(vals) == 0:
            raise ValidationError("annual series must contain at least one value")
        object.__setattr__(self, "start_year", int(start_year))
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[tuple[int, float]]:
        return ((self.start_year + i, v) for i, v in enumerate(self.values))

    @property
    def end_year(self) -> int:
        return self.start_year + len(self.values) - 1

    @property
    def years(self) -> range:
        return range(self.start_year, self.end_year + 1)

    def value(self, year: int) -> float:
        if not self.start_year <= year <= self.end_year:
            raise ValidationError(
                f"year {year} outside series range {self.start_year}..{self.end_year}"
            )
        return self.values[year - self.start_year]

    def covers(self, start: int, end: int) -> bool:
        return self.start_year <= start and end <= self.end_year

    def window(self, start: int, end: int) -> "AnnualSeries":
        """The sub-series for start..end inclusive."""
        if not self.covers(start, end) or end < start:
            raise ValidationError(
                f"window {start}..{end} outside series range {self.start_year}..{self.end_year}"
            )
        i = start - self.start_year
        return AnnualSeries(start, self.values[i : i + (end - start + 1)])

    def cumulative(self) -> "AnnualSeries":
        """Prefix sums: cumulative()[i] == sum(values[: i + 1])."""
        out = []
        total = 0.0
        for v in self.values:
            total += v
            out.append(total)
        return AnnualSeries(self.start_year, out)

    def mean(self) -> float:
        return sum(self.values) / len(self.values)


# ---------------------------------------------------------------------------
# Economy baseline
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EconomyBaseline:
    """A dated snapshot of macro aggregates in canonical units.

    Optional fields are ``None`` when the source did not provide them; absence
    is deliberately distinct from zero, which is a meaningful economic value.
    """

    year: int
    gdp: Money
    exports: Money | None = None
    debt_stock: Money | None = None
    m2_stock: Money | None = None
    employed_total: Population | None = None
    state_capital_stock: Money | None = None
    construction_land_total: LandArea | None = None
    tradable_asset_stock: Money | None = None
    fiscal_land_transfer_fees: Money | None = None

    def __post_init__(self) -> None:
        for name in (
            "gdp",
            "exports",
            "debt_stock",
            "m2_stock",
            "state_capital_stock",
            "tradable_asset_stock",
            "fiscal_land_transfer_fees",
        ):
            field_val = getattr(self, name)
            if field_val is not None and field_val.amount < 0:
                raise ValidationError(f"baseline stock {name} must be non-negative")

    @property
    def debt_to_gdp(self) -> float:
        if self.debt_stock is None:
            raise ValidationError("baseline has no debt stock")
        return self.debt_stock.amount / self.gdp.amount

    @property
    def m2_to_gdp(self) -> float:
        if self.m2_stock is None:
            raise ValidationError("baseline has no M2 stock")
        return self.m2_stock.amount / self.gdp.amount

    @property
    def export_share(self) -> float:
        if self.exports is None:
            raise ValidationError("baseline has no export value")
        return self.exports.amount / self.gdp.amount


# field name -> (canonical unit, wrapper)
_BASELINE_FIELDS: dict[str, tuple[str | None, type | None]] = {
    "year": (None, None),
    "gdp": ("trillion RMB", Money),
    "exports": ("trillion RMB", Money),
    "debt_stock": ("trillion RMB", Money),
    "m2_stock": ("trillion RMB", Money),
    "employed_total": ("million persons", Population),
    "state_capital_stock": ("trillion RMB", Money),
    "construction_land_total": ("million Mu", LandArea),
    "tradable_asset_stock": ("trillion RMB", Money),
    "fiscal_land_transfer_fees": ("trillion RMB", Money),
}

_MANDATORY_BASELINE_FIELDS = ("year", "gdp")


def load_baseline(source: str | Path) -> EconomyBaseline:
    """Load an ``EconomyBaseline`` from a baseline CSV.

    Expected format: UTF-8 CSV with header row ``field,value,unit,provenance``,
    decimal point ``.``, no thousands separators.  Values are normalized into
    canonical units by exact decimal scaling before the single collapse to
    float.  Fields absent from the file stay absent (``None``), never zero.
    """
    path = Path(source)
    if not path.exists():
        raise DataError(f"baseline source not found: {path}")
    parsed: dict[str, float | int] = {}
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip() for h in header[:4]] != ["field", "value", "unit", "provenance"]:
            raise DataError(f"{path.name}: expected header 'field,value,unit,provenance'")
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) < 3:
                raise DataError(f"{path.name}:{lineno}: expected at least 3 columns")
            field, raw_value, unit = row[0].strip(), row[1].strip(), row[2].strip()
            if field not in _BASELINE_FIELDS:
                raise DataError(f"{path.name}:{lineno}: unknown baseline field {field!r}")
            if field in parsed:
                raise DataError(f"{path.name}:{lineno}: duplicate field {field!r}")
            if field == "year":
                try:
                    parsed["year"] = int(raw_value)
                except ValueError:
                    raise DataError(f"{path.name}:{lineno}: year must be an integer") from None
                continue
            canonical_unit, _ = _BASELINE_FIELDS[field]
            try:
                value = float(convert_units(raw_value, unit, canonical_unit))
            except decimal.InvalidOperation:
                raise DataError(f"{path.name}:{lineno}: cannot parse value {raw_value!r}") from None
            parsed[field] = value
    for mandatory in _MANDATORY_BASELINE_FIELDS:
        if mandatory not in parsed:
            raise DataError(f"{path.name}: missing mandatory field {mandatory!r}")
    kwargs: dict[str, object] = {"year": parsed["year"]}
    for field, value in parsed.items():
        if field == "year":
            continue
        _, wrapper = _BASELINE_FIELDS[field]
        assert wrapper is not None
        try:
            kwargs[field] = wrapper(value)
        except ValidationError as exc:
            raise DataError(f"{path.name}: field {field!r}: {exc}") from None
    return EconomyBaseline(**kwargs)  # type: ignore[arg-type]


def load_series(source: str | Path) -> tuple[AnnualSeries, str]:
    """Load a ``year,value`` series CSV; returns (series, unit).

    Leading ``#`` comment lines may carry metadata; a ``# unit: ...`` line
    declares the value unit.  Years must be contiguous and ascending.
    """
    path = Path(source)
    if not path.exists():
        raise DataError(f"series source not found: {path}")
    unit = ""
    rows: list[tuple[int, float]] = []
    with path.open(encoding="utf-8") as fh:
        header_seen = False
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                comment = line.lstrip("#").strip()
                if comment.lower().startswith("unit:"):
                    unit = comment[5:].strip()
                continue
            if not header_seen:
                if [c.strip() for c in line.split(",")[:2]] != ["year", "value"]:
                    raise DataError(f"{path.name}:{lineno}: expected header 'year,value'")
                header_seen = True
                continue
            parts = line.split(",")
            if len(parts) < 2:
                raise DataError(f"{path.name}:{lineno}: expected 'year,value'")
            try:
                rows.append((int(parts[0]), float(parts[1])))
            except ValueError:
                raise DataError(f"{path.name}:{lineno}: cannot parse row {line!r}") from None
    if not rows:
        raise DataError(f"{path.name}: series is empty")
    for (y0, _), (y1, _) in zip(rows, rows[1:]):
        if y1 != y0 + 1:
            raise DataError(f"{path.name}: years not contiguous at {y0} -> {y1}")
    return AnnualSeries(rows[0][0], [v for _, v in rows]), unit


# ---------------------------------------------------------------------------
# Bundled data location
# ---------------------------------------------------------------------------

DATA_DIR_ENV = "DUALSIM_DATA_DIR"


def data_dir() -> Path:
    """Resolve the bundled data directory.

    Order: the ``DUALSIM_DATA_DIR`` environment variable, then the repository
    ``data/`` directory next to the source tree, then ``./data``.
    """
    env = os.environ.get(DATA_DIR_ENV)
    if env:
        path = Path(env)
        if not path.is_dir():
            raise DataError(f"{DATA_DIR_ENV} points to a non-directory: {path}")
        return path
    repo_data = Path(__file__).resolve().parents[2] / "data"
    if repo_data.is_dir():
        return repo_data
    cwd_data = Path.cwd() / "data"
    if cwd_data.is_dir():
        return cwd_data
    raise DataError(
        f"bundled data directory not found; set {DATA_DIR_ENV} or run from the repository root"
    )


def bundled_path(name: str) -> Path:
    path = data_dir() / name
    if not path.exists():
        raise DataError(f"bundled data file not found: {path}")
    return path
