"""Demand-side balance: cohort contraction, exports, land finance, housing.

The demand chain is accounting, not general equilibrium: a fertility collapse
feeds, with a fixed employment-entry lag, into a shrinking workforce; the
shrinkage times per-capita consumption is forgone household demand; together
with the export-share decline, the land-finance transfer away from rural
households, and the housing-price squeeze it closes the excess-capacity
ledger.  Reform levers release demand back through rural property income,
land-based business income, and a lower price-to-income ratio.
"""

from __future__ import annotations

import csv
import enum
from dataclasses import dataclass, field
from pathlib import Path

from dualsim.core import (
    AnnualSeries,
    DataError,
    Money,
    Rate,
    ValidationError,
    bundled_path,
    load_series,
)

__all__ = [
    "REPLACEMENT_TFR",
    "DEFAULT_ENTRY_LAG_YEARS",
    "DEFAULT_EXIT_OUTFLOW_MILLIONS",
    "EXPORT_ORIENTED_THRESHOLD",
    "ExportClassification",
    "ExportDependence",
    "CohortLedger",
    "DemandLedger",
    "DemandComponents",
    "ConsumptionContraction",
    "ReformDemandLevers",
    "ReformDemandRelease",
    "DemandCalibration",
    "cohort_contraction",
    "consumption_contraction",
    "export_dependence",
    "land_finance_transfer",
    "housing_crowd_out",
    "excess_capacity_ledger",
    "reform_demand_release",
    "load_cohort_ledger",
    "load_demand_components_2020",
    "load_export_history",
]

REPLACEMENT_TFR = 2.10
DEFAULT_ENTRY_LAG_YEARS = 20
# Constant retirement outflow; equals the replacement-level entry cohort so
# that a replacement-rate fertility history keeps the workforce flat.
DEFAULT_EXIT_OUTFLOW_MILLIONS = 22.0
EXPORT_ORIENTED_THRESHOLD = 0.20


class ExportClassification(enum.Enum):
    DOMESTIC_ORIENTED = "domestic-oriented"
    EXPORT_ORIENTED = "export-oriented"


@dataclass(frozen=True)
class ExportDependence:
    share: float
    classification: ExportClassification


@dataclass(frozen=True)
class CohortLedger:
    """Demographic inputs of the employment-entry-lag mechanism."""

    fertility: AnnualSeries
    births: AnnualSeries
    employment_entry_lag: int
    per_capita_consumption: AnnualSeries
    replacement_tfr: float = REPLACEMENT_TFR

    def __post_init__(self) -> None:
        if self.replacement_tfr != REPLACEMENT_TFR:
            raise ValidationError(
                f"replacement TFR is fixed at {REPLACEMENT_TFR}, got {self.replacement_tfr!r}"
            )
        if self.employment_entry_lag < 0:
            raise ValidationError("employment entry lag must be non-negative")


@dataclass(frozen=True)
class DemandLedger:
    """One year's demand diagnostics, all money in trillion RMB."""

    year: int
    consumption_contraction_annual: Money
    consumption_contraction_cumulative: Money
    export_share: float
    land_finance_transfer: Money
    housing_crowd_out: Money
    excess_capacity: Money

    def __post_init__(self) -> None:
        if self.excess_capacity.amount < 0:
            raise ValidationError("excess capacity must be non-negative")


@dataclass(frozen=True)
class DemandComponents:
    """Forgone-final-demand components feeding the excess-capacity ledger."""

    cohort_contraction: Money
    export_decline: Money
    land_finance_transfer: Money
    housing_crowd_out: Money

    def __post_init__(self) -> None:
        for name in (
            "cohort_contraction",
            "export_decline",
            "land_finance_transfer",
            "housing_crowd_out",
        ):
            if getattr(self, name).amount < 0:
                raise ValidationError(f"demand component {name} must be non-negative")

    @property
    def total(self) -> Money:
        return Money(
            self.cohort_contraction.amount
            + self.export_decline.amount
            + self.land_finance_transfer.amount
            + self.housing_crowd_out.amount
        )


def cohort_contraction(
    ledger: CohortLedger,
    horizon: tuple[int, int],
    exit_outflow: float = DEFAULT_EXIT_OUTFLOW_MILLIONS,
) -> AnnualSeries:
    """Working-population change per year (millions), entries minus exits.

    Entries at year t are the births of year ``t - lag``; exits are a constant
    configurable outflow.  The change is negative whenever the lagged birth
    cohort runs below the outflow, which under the replacement identity means
    a lagged TFR persistently under 2.10.
    """
    start, end = horizon
    if end < start:
        raise ValidationError(f"horizon end {end} before start {start}")
    lag = ledger.employment_entry_lag
    if not ledger.births.covers(start - lag, end - lag):
        raise ValidationError(
            f"births series {ledger.births.start_year}..{ledger.births.end_year} does not "
            f"cover horizon {start}..{end} shifted by lag {lag}"
        )
    return AnnualSeries(
        start, [ledger.births.value(y - lag) - exit_outflow for y in range(start, end + 1)]
    )


@dataclass(frozen=True)
class ConsumptionContraction:
    annual: AnnualSeries      # trillion RMB, positive = forgone consumption
    cumulative: AnnualSeries  # prefix sums of annual


def consumption_contraction(
    delta_employed: AnnualSeries, per_capita_consumption: AnnualSeries
) -> ConsumptionContraction:
    """Forgone household consumption from a shrinking workforce.

    annual(t) = -delta_employed(t) x per-capita consumption(t), converted to
    trillion RMB (millions of persons x RMB/person = 1e6 RMB).
    """
    if not per_capita_consumption.covers(delta_employed.start_year, delta_employed.end_year):
        raise ValidationError(
            "per-capita consumption series does not cover the workforce-change series"
        )
    annual = AnnualSeries(
        delta_employed.start_year,
        [
            -delta * per_capita_consumption.value(year) / 1e6
            for year, delta in delta_employed
        ],
    )
    return ConsumptionContraction(annual=annual, cumulative=annual.cumulative())


def export_dependence(exports: Money, gdp: Money) -> ExportDependence:
    """Exports/GDP share and the development-model classification.

    A share at or above 20% classifies as export-oriented.
    """
    if gdp.amount <= 0:
        raise ValidationError("GDP must be positive")
    share = exports.amount / gdp.amount
    if share >= EXPORT_ORIENTED_THRESHOLD:
        classification = ExportClassification.EXPORT_ORIENTED
    else:
        classification = ExportClassification.DOMESTIC_ORIENTED
    return ExportDependence(share=share, classification=classification)


def land_finance_transfer(transfer_fees: Money, farmer_share: float) -> Money:
    """Rural income transferred away via land-finance, linear in both inputs."""
    if not 0.0 <= farmer_share <= 1.0:
        raise ValidationError(f"farmer share {farmer_share!r} outside [0, 1]")
    if transfer_fees.amount < 0:
        raise ValidationError("transfer fees must be non-negative")
    return Money(transfer_fees.amount * farmer_share)


def housing_crowd_out(current_ratio: float, target_ratio: float, annual_squeeze: Money) -> Money:
    """Consumption released by lowering the price-to-income ratio.

    Proportional map: released = squeeze x (current - target) / current, so a
    target of zero (free housing) releases the full squeeze and a target at
    the current ratio releases nothing.
    """
    if current_ratio <= 0 or target_ratio < 0:
        raise ValidationError("price-to-income ratios must be positive (target may be 0)")
    if target_ratio > current_ratio:
        raise ValidationError(
            f"target ratio {target_ratio!r} above current ratio {current_ratio!r}"
        )
    return Money(annual_squeeze.amount * (current_ratio - target_ratio) / current_ratio)


def excess_capacity_ledger(
    year: int,
    components: DemandComponents,
    export_share: float,
    consumption_contraction_cumulative: Money | None = None,
) -> DemandLedger:
    """Assemble one year's demand ledger; excess is the component sum."""
    return DemandLedger(
        year=year,
        consumption_contraction_annual=components.cohort_contraction,
        consumption_contraction_cumulative=(
            consumption_contraction_cumulative
            if consumption_contraction_cumulative is not None
            else components.cohort_contraction
        ),
        export_share=export_share,
        land_finance_transfer=components.land_finance_transfer,
        housing_crowd_out=components.housing_crowd_out,
        excess_capacity=components.total,
    )


# ---------------------------------------------------------------------------
# Reform demand release
# ---------------------------------------------------------------------------


def _default_pv_factor() -> float:
    # Present-value factor pinned so the bundled property lever reproduces the
    # reported 4.5T/yr: 500T x 1.5% x (1 - 30% tax) x pv = 4.5T.
    return 4.5 / (500.0 * 0.015 * 0.70)


def _default_housing_squeeze_base() -> float:
    # Squeeze base pinned so the 9.30 -> 6.00 ratio move releases the observed
    # 3.6458T squeeze (inside the reported 3-4T restoration window).
    return 3.6458 * 9.30 / (9.30 - 6.00)


def _default_overlap_discount() -> float:
    # The reported components (4.5 + 5 + 3.6458) exceed the reported 10T net;
    # the net figure is treated as the gross sum after overlap deduction.
    return 1.0 - 10.0 / (4.5 + 5.0 + 3.6458)


@dataclass(frozen=True)
class DemandCalibration:
    """Bundled constants of the demand-release mapping."""

    rural_land_assets: float = 500.0            # trillion RMB
    property_tax: float = 0.30
    property_pv_factor: float = field(default_factory=_default_pv_factor)
    homestead_income_potential: float = 25.0    # trillion RMB/yr at full use
    housing_current_ratio: float = 9.30
    housing_squeeze_base: float = field(default_factory=_default_housing_squeeze_base)
    overlap_discount: float = field(default_factory=_default_overlap_discount)


@dataclass(frozen=True)
class ReformDemandLevers:
    """Reform levers: annual land transaction share, homestead business use
    share, and the housing price-to-income target ratio."""

    land_transaction_share: float = 0.015
    homestead_business_share: float = 0.20
    housing_target_ratio: float = 6.00

    @classmethod
    def zero(cls, calibration: DemandCalibration | None = None) -> "ReformDemandLevers":
        current = (calibration or DemandCalibration()).housing_current_ratio
        return cls(
            land_transaction_share=0.0,
            homestead_business_share=0.0,
            housing_target_ratio=current,
        )


@dataclass(frozen=True)
class ReformDemandRelease:
    """Annual demand released by the reform levers (trillion RMB)."""

    property_income: Money
    homestead_income: Money
    housing_release: Money
    gross: Money
    net: Money


def reform_demand_release(
    levers: ReformDemandLevers, calibration: DemandCalibration | None = None
) -> ReformDemandRelease:
    """Annual released consumption demand from the three reform levers.

    Components: after-tax present-value rural property income, land-based
    business income, and the housing release.  The net figure deducts the
    calibrated overlap between the three channels.
    """
    cal = calibration or DemandCalibration()
    if not 0.0 <= levers.land_transaction_share <= 1.0:
        raise ValidationError("land transaction share outside [0, 1]")
    if not 0.0 <= levers.homestead_business_share <= 1.0:
        raise ValidationError("homestead business share outside [0, 1]")
    prop = (
        cal.rural_land_assets
        * levers.land_transaction_share
        * (1.0 - cal.property_tax)
        * cal.property_pv_factor
    )
    homestead = cal.homestead_income_potential * levers.homestead_business_share
    housing = housing_crowd_out(
        cal.housing_current_ratio,
        levers.housing_target_ratio,
        Money(cal.housing_squeeze_base),
    )
    gross = prop + homestead + housing.amount
    return ReformDemandRelease(
        property_income=Money(prop),
        homestead_income=Money(homestead),
        housing_release=housing,
        gross=Money(gross),
        net=Money(gross * (1.0 - cal.overlap_discount)),
    )


# ---------------------------------------------------------------------------
# Bundled calibration loaders
# ---------------------------------------------------------------------------


def load_cohort_ledger(
    entry_lag: int = DEFAULT_ENTRY_LAG_YEARS,
) -> CohortLedger:
    fertility, _ = load_series(bundled_path("fertility_china.csv"))
    births, _ = load_series(bundled_path("births_china.csv"))
    pcc, _ = load_series(bundled_path("per_capita_consumption.csv"))
    return CohortLedger(
        fertility=fertility,
        births=births,
        employment_entry_lag=entry_lag,
        per_capita_consumption=pcc,
    )


def load_demand_components_2020() -> tuple[DemandComponents, float]:
    """The bundled 2020 ledger components and the consumer-goods fraction."""
    path = bundled_path("demand_2020.csv")
    values: dict[str, float] = {}
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip() for h in header[:2]] != ["component", "value"]:
            raise DataError(f"{path.name}: unexpected header")
        for row in reader:
            if not row or all(not c.strip() for c in row):
                continue
            values[row[0].strip()] = float(row[1])
    required = {
        "cohort_contraction",
        "export_decline",
        "land_finance_transfer",
        "housing_crowd_out",
        "consumer_goods_fraction",
    }
    missing = required - values.keys()
    if missing:
        raise DataError(f"{path.name}: missing components {sorted(missing)}")
    components = DemandComponents(
        cohort_contraction=Money(values["cohort_contraction"]),
        export_decline=Money(values["export_decline"]),
        land_finance_transfer=Money(values["land_finance_transfer"]),
        housing_crowd_out=Money(values["housing_crowd_out"]),
    )
    return components, values["consumer_goods_fraction"]


def load_export_history() -> list[tuple[int, Money, Money]]:
    """(year, exports, gdp) rows with GDP levels implied by reported shares."""
    path = bundled_path("export_history.csv")
    rows: list[tuple[int, Money, Money]] = []
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip() for h in header[:3]] != [
            "year",
            "exports_trillion",
            "gdp_trillion",
        ]:
            raise DataError(f"{path.name}: unexpected header")
        for row in reader:
            if not row or all(not c.strip() for c in row):
                continue
            rows.append((int(row[0]), Money(float(row[1])), Money(float(row[2]))))
    if not rows:
        raise DataError(f"{path.name}: no rows")
    return rows
