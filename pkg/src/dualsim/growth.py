"""Growth accounting in rate (log-differential) form.

Two models:

* the two-factor natural-rate model with TFP split into a broad-technology
  component and a reform/allocation component,
* the classical model that adds a land term with its own elasticity, where
  each factor's growth splits into an original-input part, a reanimated-slack
  part, and (for land) a newly-added-land part.

Both are stated and implemented purely in growth rates; no production-function
level form is constructed.  TFP history is an input series, never estimated
here.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from dualsim.core import AnnualSeries, DataError, Rate, ValidationError, load_series

__all__ = [
    "GrowthInputs",
    "ClassicalGrowthInputs",
    "TfpDecomposition",
    "ReformTfpIntegral",
    "NaturalBandCalibration",
    "NaturalBand",
    "natural_growth",
    "classical_growth",
    "decompose_tfp",
    "reform_tfp_integral",
    "calibrate_natural_band",
    "load_natural_band_calibration",
]

SIMPLEX_TOL = 1e-12


def _check_simplex(shares: dict[str, float]) -> None:
    total = 0.0
    for name, value in shares.items():
        if not 0.0 <= value <= 1.0:
            raise ValidationError(f"elasticity {name}={value!r} outside [0, 1]")
        total += value
    if abs(total - 1.0) > SIMPLEX_TOL:
        raise ValidationError(f"elasticities must sum to 1, got {total!r}")


@dataclass(frozen=True)
class GrowthInputs:
    """Symbol set of the two-factor model with a split TFP residual."""

    labor_growth: Rate
    capital_growth: Rate
    labor_elasticity: float
    capital_elasticity: float
    tfp_tech_growth: Rate
    tfp_reform_growth: Rate = 0.0

    def __post_init__(self) -> None:
        _check_simplex({"a": self.labor_elasticity, "b": self.capital_elasticity})


@dataclass(frozen=True)
class ClassicalGrowthInputs:
    """Symbol set of the three-factor model with a land term.

    Growth-rate arguments are relative to each factor's total stock; slack
    terms are the output increments from reanimating idle factors, the land
    ``new`` term is newly added usable land.
    """

    tfp_growth: Rate
    labor_original_growth: Rate
    labor_slack_growth: Rate
    capital_original_growth: Rate
    capital_slack_growth: Rate
    land_original_growth: Rate
    land_slack_growth: Rate
    land_new_growth: Rate
    labor_elasticity: float
    capital_elasticity: float
    land_elasticity: float

    def __post_init__(self) -> None:
        _check_simplex(
            {
                "a": self.labor_elasticity,
                "b": self.capital_elasticity,
                "c": self.land_elasticity,
            }
        )


@dataclass(frozen=True)
class TfpDecomposition:
    """Total TFP growth split into a technology baseline and a reform part."""

    total_tfp_growth: Rate
    tech_baseline_growth: Rate
    reform_tfp_growth: Rate

    @property
    def reform_below_baseline(self) -> bool:
        """True when total TFP runs below the flat technology baseline."""
        return self.reform_tfp_growth < 0.0


@dataclass(frozen=True)
class ReformTfpIntegral:
    """Discrete integral of TFP growth above a flat technology baseline."""

    area: float
    mean: Rate
    years: int


def natural_growth(inputs: GrowthInputs) -> Rate:
    """Output growth with no reform component: tech TFP plus factor terms.

    Requires ``tfp_reform_growth == 0``; the natural rate is by definition the
    no-reform case of the two-factor model.
    """
    if inputs.tfp_reform_growth != 0.0:
        raise ValidationError(
            "natural growth requires a zero reform-TFP term; "
            f"got {inputs.tfp_reform_growth!r}"
        )
    return (
        inputs.tfp_tech_growth
        + inputs.labor_elasticity * inputs.labor_growth
        + inputs.capital_elasticity * inputs.capital_growth
    )


def classical_growth(inputs: ClassicalGrowthInputs) -> Rate:
    """Output growth of the three-factor model.

    Linear in every growth-rate argument with coefficient equal to the
    owning factor's elasticity.
    """
    return (
        inputs.tfp_growth
        + inputs.labor_elasticity * (inputs.labor_original_growth + inputs.labor_slack_growth)
        + inputs.capital_elasticity
        * (inputs.capital_original_growth + inputs.capital_slack_growth)
        + inputs.land_elasticity
        * (inputs.land_original_growth + inputs.land_slack_growth + inputs.land_new_growth)
    )


def decompose_tfp(total_tfp_growth: Rate, tech_baseline_growth: Rate) -> TfpDecomposition:
    """Split total TFP growth against a flat technology baseline.

    The reform component is ``total - baseline`` exactly; negative components
    are returned as-is and flagged via ``reform_below_baseline``, never
    clamped.
    """
    return TfpDecomposition(
        total_tfp_growth=total_tfp_growth,
        tech_baseline_growth=tech_baseline_growth,
        reform_tfp_growth=total_tfp_growth - tech_baseline_growth,
    )


def reform_tfp_integral(total_tfp_series: AnnualSeries, baseline: Rate) -> ReformTfpIntegral:
    """Area between a TFP growth series and a flat baseline, plus its mean.

    The area is the discrete integral sum(series[t] - baseline); divided by
    the series length it is the average reform-attributable TFP growth.
    """
    n = len(total_tfp_series)
    area = sum(v - baseline for v in total_tfp_series.values)
    return ReformTfpIntegral(area=area, mean=area / n, years=n)


# ---------------------------------------------------------------------------
# Natural-rate band calibration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NaturalBandCalibration:
    """Bundled input paths spanning the labor/capital substitution range."""

    labor_path: AnnualSeries
    capital_path_low: AnnualSeries
    capital_path_high: AnnualSeries
    tech_growth: Rate
    labor_elasticity: float
    capital_elasticity: float


@dataclass(frozen=True)
class NaturalBand:
    """Min/max average annual natural growth over the substitution range."""

    low: Rate
    high: Rate

    @property
    def midpoint(self) -> Rate:
        return (self.low + self.high) / 2.0

    def contains(self, rate: Rate) -> bool:
        return self.low <= rate <= self.high


def calibrate_natural_band(
    horizon: tuple[int, int],
    labor_path: AnnualSeries,
    capital_path_low: AnnualSeries,
    capital_path_high: AnnualSeries,
    tech_growth: Rate,
    labor_elasticity: float,
    capital_elasticity: float,
) -> NaturalBand:
    """Average-annual natural-growth band over a capital substitution range.

    For each year the natural rate is evaluated once against the low capital
    path and once against the high path; the band is (min, max) of the two
    period averages.  Paths must cover the horizon.
    """
    start, end = horizon
    if end < start:
        raise ValidationError(f"horizon end {end} before start {start}")
    for name, path in (
        ("labor", labor_path),
        ("capital low", capital_path_low),
        ("capital high", capital_path_high),
    ):
        if not path.covers(start, end):
            raise ValidationError(
                f"{name} path {path.start_year}..{path.end_year} does not cover "
                f"horizon {start}..{end}"
            )

    def average(capital_path: AnnualSeries) -> float:
        rates = [
            natural_growth(
                GrowthInputs(
                    labor_growth=labor_path.value(y),
                    capital_growth=capital_path.value(y),
                    labor_elasticity=labor_elasticity,
                    capital_elasticity=capital_elasticity,
                    tfp_tech_growth=tech_growth,
                )
            )
            for y in range(start, end + 1)
        ]
        return sum(rates) / len(rates)

    avg_low = average(capital_path_low)
    avg_high = average(capital_path_high)
    return NaturalBand(low=min(avg_low, avg_high), high=max(avg_low, avg_high))


def load_natural_band_calibration(source: str | Path) -> NaturalBandCalibration:
    """Load the band-calibration CSV (paths plus header-comment parameters)."""
    path = Path(source)
    if not path.exists():
        raise DataError(f"calibration source not found: {path}")
    params: dict[str, float] = {}
    rows: list[tuple[int, float, float, float]] = []
    with path.open(encoding="utf-8") as fh:
        header_seen = False
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                comment = line.lstrip("#").strip()
                if ":" in comment:
                    key, _, raw = comment.partition(":")
                    try:
                        params[key.strip()] = float(raw)
                    except ValueError:
                        pass
                continue
            if not header_seen:
                expected = ["year", "labor_growth", "capital_growth_low", "capital_growth_high"]
                if [c.strip() for c in line.split(",")] != expected:
                    raise DataError(f"{path.name}:{lineno}: unexpected header {line!r}")
                header_seen = True
                continue
            parts = line.split(",")
            if len(parts) != 4:
                raise DataError(f"{path.name}:{lineno}: expected 4 columns")
            try:
                rows.append((int(parts[0]), float(parts[1]), float(parts[2]), float(parts[3])))
            except ValueError:
                raise DataError(f"{path.name}:{lineno}: cannot parse row {line!r}") from None
    for key in ("tech_growth", "labor_elasticity", "capital_elasticity"):
        if key not in params:
            raise DataError(f"{path.name}: missing '# {key}: ...' header")
    if not rows:
        raise DataError(f"{path.name}: no path rows")
    start = rows[0][0]
    return NaturalBandCalibration(
        labor_path=AnnualSeries(start, [r[1] for r in rows]),
        capital_path_low=AnnualSeries(start, [r[2] for r in rows]),
        capital_path_high=AnnualSeries(start, [r[3] for r in rows]),
        tech_growth=params["tech_growth"],
        labor_elasticity=params["labor_elasticity"],
        capital_elasticity=params["capital_elasticity"],
    )


def load_tfp_series(source: str | Path) -> AnnualSeries:
    """Load a TFP growth series (fractions per year) from a series CSV."""
    series, _unit = load_series(source)
    return series
