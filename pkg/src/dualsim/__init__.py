"""Deterministic dual-track macroeconomy simulator.

Subsystems:

* ``core``     -- canonical units, annual series, baseline ingestion
* ``growth``   -- growth accounting with and without a land factor, TFP split
* ``slack``    -- counterfactual institutional-slack and output-loss accounting
* ``demand``   -- cohort-lagged consumption contraction and the excess-capacity ledger
* ``monetary`` -- supply/demand money balances, debt coverage, collapse scans
* ``scenario`` -- reform-lever scenarios, sweeps, and calibration search
* ``report``   -- golden-figure reproduction table
* ``cli``      -- ``dualsim run | sweep | reproduce | calibrate``
"""

from dualsim.core import (
    AnnualSeries,
    DataError,
    DualsimError,
    EconomyBaseline,
    LandArea,
    Money,
    Population,
    Rate,
    ValidationError,
    convert_units,
    load_baseline,
    load_series,
)

__version__ = "0.1.0"

__all__ = [
    "AnnualSeries",
    "DataError",
    "DualsimError",
    "EconomyBaseline",
    "LandArea",
    "Money",
    "Population",
    "Rate",
    "ValidationError",
    "convert_units",
    "load_baseline",
    "load_series",
    "__version__",
]
