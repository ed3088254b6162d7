"""Counterfactual slack accounting: difference values, slack scales, losses.

The core quantity is the difference between a competitive-market benchmark
rate (the standard value) and the rate observed under dual-track regulation
(the distortion value).  Slack can be derived from that rate gap or ingested
directly as a reported share of the stock; output losses monetize slack
through per-unit rents, wages, or profits.

The bundled 2020 dataset uses direct share/yield ingestion with unit yields
derived from the reported losses, because the source reports shares and
losses but not the formulas connecting them.  The rate-gap estimator is kept
alongside as the principled alternative.
"""

from __future__ import annotations

import csv
import enum
from dataclasses import dataclass
from pathlib import Path

from dualsim.core import (
    DataError,
    LandArea,
    Money,
    Population,
    Rate,
    ValidationError,
)

__all__ = [
    "Factor",
    "SlackRecord",
    "AggregateLoss",
    "difference_value",
    "slack_from_rate_gap",
    "slack_from_share",
    "output_loss",
    "aggregate_losses",
    "reform_growth_dividend",
    "load_slack_records",
]

_REL_TOL = 1e-9


class Factor(enum.Enum):
    LABOR = "labor"
    CAPITAL = "capital"
    LAND = "land"
    FISCAL_MISMATCH = "fiscal-mismatch"


_STOCK_TYPES = {
    "million persons": Population,
    "trillion RMB": Money,
    "million Mu": LandArea,
}


@dataclass(frozen=True)
class SlackRecord:
    """One factor's counterfactual comparison.

    ``slack_quantity`` is in the same unit as the stock; ``unit_yield`` is
    trillion RMB per stock unit (the rent/wage/profit used to monetize the
    slack).  Negative standard-distortion differences are rejected: slack is
    idle or under-utilized factors, never negative.
    """

    factor: Factor
    stock: Money | Population | LandArea
    slack_share: float
    slack_quantity: float
    unit_yield: float
    output_loss: Money
    standard_value: Rate | None = None
    distortion_value: Rate | None = None

    def __post_init__(self) -> None:
        if not 0.0 <= self.slack_share <= 1.0:
            raise ValidationError(f"slack share {self.slack_share!r} outside [0, 1]")
        if self.unit_yield < 0:
            raise ValidationError("unit yield must be non-negative")
        if self.standard_value is not None and self.distortion_value is not None:
            if difference_value(self.standard_value, self.distortion_value) < 0:
                raise ValidationError(
                    "no distortion: standard value below distortion value "
                    f"({self.standard_value!r} < {self.distortion_value!r})"
                )
        stock_value = _stock_value(self.stock)
        expected = self.slack_share * stock_value
        if abs(self.slack_quantity - expected) > _REL_TOL * max(1.0, abs(expected)):
            raise ValidationError(
                f"slack quantity {self.slack_quantity!r} != share x stock {expected!r}"
            )
        expected_loss = self.slack_quantity * self.unit_yield
        if abs(self.output_loss.amount - expected_loss) > _REL_TOL * max(1.0, abs(expected_loss)):
            raise ValidationError(
                f"output loss {self.output_loss.amount!r} != slack x yield {expected_loss!r}"
            )

    @classmethod
    def from_share(
        cls,
        factor: Factor,
        stock: Money | Population | LandArea,
        slack_share: float,
        unit_yield: float,
        standard_value: Rate | None = None,
        distortion_value: Rate | None = None,
    ) -> "SlackRecord":
        quantity = slack_from_share(_stock_value(stock), slack_share)
        return cls(
            factor=factor,
            stock=stock,
            slack_share=slack_share,
            slack_quantity=quantity,
            unit_yield=unit_yield,
            output_loss=output_loss(quantity, unit_yield),
            standard_value=standard_value,
            distortion_value=distortion_value,
        )


def _stock_value(stock: Money | Population | LandArea) -> float:
    if isinstance(stock, Money):
        return stock.amount
    if isinstance(stock, Population):
        return stock.count
    return stock.area


def difference_value(standard: Rate, distorted: Rate) -> Rate:
    """Standard value minus distortion value; negative means no distortion."""
    return standard - distorted


def slack_from_rate_gap(stock: float, standard: Rate, distorted: Rate) -> float:
    """Idle-equivalent stock implied by an under-yielding rate.

    Treats the fraction ``1 - distorted/standard`` of the stock as idle, so
    that pricing the slack at the standard yield recovers exactly the loss
    ``stock * (standard - distorted)``.
    """
    if standard <= 0:
        raise ValidationError(f"standard value must be positive, got {standard!r}")
    if stock < 0:
        raise ValidationError("stock must be non-negative")
    return stock * (1.0 - distorted / standard)


def slack_from_share(stock: float, slack_share: float) -> float:
    """Slack quantity from a directly reported share of the stock."""
    if not 0.0 <= slack_share <= 1.0:
        raise ValidationError(f"slack share {slack_share!r} outside [0, 1]")
    if stock < 0:
        raise ValidationError("stock must be non-negative")
    return slack_share * stock


def output_loss(slack_quantity: float, unit_yield: float) -> Money:
    """Monetize slack at its per-unit rent/wage/profit."""
    if slack_quantity < 0 or unit_yield < 0:
        raise ValidationError("slack quantity and unit yield must be non-negative")
    return Money(slack_quantity * unit_yield)


@dataclass(frozen=True)
class AggregateLoss:
    total: Money
    gdp_share: float


def aggregate_losses(records: list[SlackRecord], gdp: Money) -> AggregateLoss:
    """Total output loss across records and its share of GDP."""
    if not records:
        raise ValidationError("no slack records to aggregate")
    if gdp.amount <= 0:
        raise ValidationError("GDP must be positive")
    total = sum(r.output_loss.amount for r in records)
    return AggregateLoss(total=Money(total), gdp_share=total / gdp.amount)


def reform_growth_dividend(total_loss_share_of_gdp: float, horizon_years: int) -> Rate:
    """Constant annual growth increment equivalent to recovering the loss.

    Recovering a loss worth ``share`` of GDP over ``horizon_years`` compounds
    like a constant extra growth rate g with (1+g)^horizon = 1 + share.
    """
    if horizon_years < 1:
        raise ValidationError(f"horizon must be at least 1 year, got {horizon_years}")
    if total_loss_share_of_gdp < 0:
        raise ValidationError("loss share must be non-negative")
    return (1.0 + total_loss_share_of_gdp) ** (1.0 / horizon_years) - 1.0


def load_slack_records(source: str | Path) -> list[SlackRecord]:
    """Load slack records from the ingestion CSV.

    Header: ``factor,stock,stock_unit,standard_value,distortion_value,
    slack_share,unit_yield,provenance``.  Standard/distortion rates are
    optional and kept as reported; slack quantities and losses are computed
    from share and yield.
    """
    path = Path(source)
    if not path.exists():
        raise DataError(f"slack source not found: {path}")
    records: list[SlackRecord] = []
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        expected = [
            "factor",
            "stock",
            "stock_unit",
            "standard_value",
            "distortion_value",
            "slack_share",
            "unit_yield",
            "provenance",
        ]
        if header is None or [h.strip() for h in header[: len(expected)]] != expected:
            raise DataError(f"{path.name}: unexpected header")
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not c.strip() for c in row):
                continue
            try:
                factor = Factor(row[0].strip())
            except ValueError:
                raise DataError(f"{path.name}:{lineno}: unknown factor {row[0]!r}") from None
            unit = row[2].strip()
            if unit not in _STOCK_TYPES:
                raise DataError(f"{path.name}:{lineno}: unknown stock unit {unit!r}")
            try:
                stock = _STOCK_TYPES[unit](float(row[1]))
                standard = float(row[3]) if row[3].strip() else None
                distorted = float(row[4]) if row[4].strip() else None
                share = float(row[5])
                unit_yield = float(row[6])
            except (ValueError, ValidationError) as exc:
                raise DataError(f"{path.name}:{lineno}: {exc}") from None
            try:
                records.append(
                    SlackRecord.from_share(
                        factor=factor,
                        stock=stock,
                        slack_share=share,
                        unit_yield=unit_yield,
                        standard_value=standard,
                        distortion_value=distorted,
                    )
                )
            except ValidationError as exc:
                raise DataError(f"{path.name}:{lineno}: {exc}") from None
    if not records:
        raise DataError(f"{path.name}: no slack records")
    return records
