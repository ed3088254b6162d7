"""Regenerate the bundled datasets under data/ from their anchor figures.

Every number in data/*.csv is either a directly reported 2020 source figure
or a value derived here from such figures (implied stocks from quantity/share
quotients, per-capita consumption solved against the cumulative-contraction
anchor, band paths hitting the published growth band endpoints).  Re-running
this script must be byte-stable; the test suite freezes several of the
derived constants printed at the end.

Usage: python scripts/make_calibration_data.py
"""

from __future__ import annotations

from pathlib import Path

DATA = Path(__file__).resolve().parents[1] / "data"

# --- 2020 anchor figures (money in trillion RMB unless noted) ---------------
TOTAL_LOSS_2020 = 17.19          # output loss from idle/under-utilized factors
LOSS_SHARE_OF_GDP = 0.1692       # the same loss as a share of GDP
GDP_2020 = 101.6                 # implied GDP level, rounded as published
DEBT_RATIO_2020 = 2.72           # non-financial debt / GDP
M2_RATIO_2020 = 2.17             # M2 / GDP
EXPORTS_2020 = 17.9326           # exports level consistent with the 17.65% share

LABOR_SLACK_M = 175.0            # million persons
LABOR_SLACK_SHARE = 0.2286
CAPITAL_SLACK_T = 82.701         # trillion RMB
CAPITAL_SLACK_SHARE = 0.3383
LAND_SLACK_MMU = 151.89          # million Mu
LAND_SLACK_SHARE = 0.2511
LOSS_LABOR = 6.30
LOSS_CAPITAL = 4.92
LOSS_LAND = 5.34
LOSS_FISCAL = 0.6266
PRIVATE_RETURN = 0.06            # market-oriented private rate of return
STATE_RETURN = 0.02              # state-enterprise rate of return

TRANSFER_FEES_B = 8414.2         # land transfer fees, billion RMB


def check(label: str, got: float, want: float, tol: float) -> None:
    if abs(got - want) > tol:
        raise AssertionError(f"{label}: {got!r} vs {want!r} (tol {tol})")
    print(f"  ok {label}: {got:.6f} ~ {want}")


def write_csv(name: str, lines: list[str]) -> None:
    path = DATA / name
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {path.relative_to(DATA.parent)} ({len(lines)} lines)")


def main() -> None:
    DATA.mkdir(exist_ok=True)

    # -- derived stocks (stock = quantity / share) ---------------------------
    check("implied GDP", TOTAL_LOSS_2020 / LOSS_SHARE_OF_GDP, GDP_2020, 0.01)
    employed = LABOR_SLACK_M / LABOR_SLACK_SHARE
    state_capital = CAPITAL_SLACK_T / CAPITAL_SLACK_SHARE
    land_total = LAND_SLACK_MMU / LAND_SLACK_SHARE
    check("employed total (M)", employed, 765.53, 0.01)
    check("state capital (T)", state_capital, 244.46, 0.01)
    check("construction land (M Mu)", land_total, 604.90, 0.01)

    debt = DEBT_RATIO_2020 * GDP_2020
    m2 = M2_RATIO_2020 * GDP_2020
    check("export share", EXPORTS_2020 / GDP_2020, 0.1765, 0.0001)

    write_csv(
        "paper2020.csv",
        [
            "field,value,unit,provenance",
            "year,2020,year,baseline year of the slack and ratio table",
            f"gdp,{GDP_2020!r},trillion RMB,implied by the loss figures: 17.19 trillion = 16.92% of GDP",
            f"exports,{EXPORTS_2020!r},trillion RMB,2020 exports; 17.65% of GDP (source prints the level with a billion label)",
            f"debt_stock,{debt!r},trillion RMB,2.72 x GDP; reported debt/GDP path 101.70% (1995) -> 272.00% (2020)",
            f"m2_stock,{m2!r},trillion RMB,2.17 x GDP; reported M2/GDP path 99.00% -> 217.00%",
            f"employed_total,{employed!r},million persons,implied by 175 million slack = 22.86% of employed; source addends 160 + 150 million are inconsistent with the reported 175 total (second figure plausibly 15)",
            f"state_capital_stock,{state_capital!r},trillion RMB,implied by 82.701 trillion slack = 33.83% of state assets",
            f"construction_land_total,{land_total!r},million Mu,implied by 151.89 million Mu slack = 25.11% of urban+rural construction land",
            "tradable_asset_stock,800,trillion RMB,capitalizable stock: 500 rural + 150 urban + 145 new land; rounded to 800 at source",
            f"fiscal_land_transfer_fees,{TRANSFER_FEES_B!r},billion RMB,2020 local-government land transfer fees (printed 8.414.2)",
        ],
    )

    # -- slack records --------------------------------------------------------
    labor_yield = LOSS_LABOR / LABOR_SLACK_M        # trillion per million persons
    capital_yield = LOSS_CAPITAL / CAPITAL_SLACK_T  # trillion per trillion
    land_yield = LOSS_LAND / LAND_SLACK_MMU         # trillion per million Mu
    fiscal_diff = PRIVATE_RETURN - STATE_RETURN
    fiscal_stock = LOSS_FISCAL / fiscal_diff        # over-taxed enterprise capital
    check("labor unit yield (36k RMB/person-yr)", labor_yield, 0.036, 1e-12)
    check("fiscal stock (T)", fiscal_stock, 15.665, 1e-9)
    total = LOSS_LABOR + LOSS_CAPITAL + LOSS_LAND + LOSS_FISCAL
    check("total loss", total, 17.1866, 1e-9)
    check("loss share of GDP", total / GDP_2020, 0.1692, 0.0002)

    write_csv(
        "slack_2020.csv",
        [
            "factor,stock,stock_unit,standard_value,distortion_value,slack_share,unit_yield,provenance",
            f"labor,{employed!r},million persons,,,{LABOR_SLACK_SHARE!r},{labor_yield!r},"
            "175 million idle/under-utilized workers (22.86% of employed); yield 36000 RMB/person-yr = 6.30T/175M",
            f"capital,{state_capital!r},trillion RMB,{PRIVATE_RETURN!r},{STATE_RETURN!r},{CAPITAL_SLACK_SHARE!r},{capital_yield!r},"
            "82.701T state-capital slack (33.83%); reference returns ~6% private vs <2% state kept as reported despite implying a different idle fraction; yield = 4.92T/82.701T",
            f"land,{land_total!r},million Mu,,,{LAND_SLACK_SHARE!r},{land_yield!r},"
            "151.89 million Mu construction-land slack (25.11%); yield = 5.34T/151.89M Mu",
            f"fiscal-mismatch,{fiscal_stock!r},trillion RMB,{PRIVATE_RETURN!r},{STATE_RETURN!r},1.0,{fiscal_diff!r},"
            "over-taxed enterprise capital 0.6266T/4%; yield = private-state return differential",
        ],
    )

    # -- TFP history (fractions per year) -------------------------------------
    # Window means pinned: 1981-85 -> 6.53%, 1991-94 -> 6.65%, 2001-05 -> 3.30%;
    # overall 1978-2018 mean pinned at 3.43%.
    tfp_pct = {
        1978: 3.66, 1979: 2.96, 1980: 2.76,
        1981: 5.80, 1982: 6.40, 1983: 7.10, 1984: 7.00, 1985: 6.35,
        1986: 3.76, 1987: 3.56, 1988: 3.16, 1989: 0.56, 1990: 0.66,
        1991: 5.90, 1992: 7.20, 1993: 7.30, 1994: 6.20,
        1995: 4.36, 1996: 3.96, 1997: 3.26, 1998: 2.16, 1999: 1.96, 2000: 2.56,
        2001: 2.90, 2002: 3.30, 2003: 3.60, 2004: 3.50, 2005: 3.20,
        2006: 3.56, 2007: 3.96, 2008: 2.66, 2009: 2.06, 2010: 2.86,
        2011: 2.36, 2012: 1.76, 2013: 1.57, 2014: 1.27, 2015: 0.87,
        2016: 0.77, 2017: 0.97, 2018: 0.87,
    }
    assert sorted(tfp_pct) == list(range(1978, 2019))

    def window_mean(y0: int, y1: int) -> float:
        return sum(tfp_pct[y] for y in range(y0, y1 + 1)) / (y1 - y0 + 1)

    check("TFP mean 1978-2018 (%)", sum(tfp_pct.values()) / len(tfp_pct), 3.43, 1e-9)
    check("TFP mean 1981-85 (%)", window_mean(1981, 1985), 6.53, 1e-9)
    check("TFP mean 1991-94 (%)", window_mean(1991, 1994), 6.65, 1e-9)
    check("TFP mean 2001-05 (%)", window_mean(2001, 2005), 3.30, 1e-9)
    write_csv(
        "tfp_china_1978_2018.csv",
        ["# unit: fraction per year", "year,value"]
        + [f"{y},{tfp_pct[y] / 100!r}" for y in sorted(tfp_pct)],
    )

    write_csv(
        "tfp_reference_us_eu_jp_kr.csv",
        [
            "region,period_start,period_end,avg_tfp_growth,provenance",
            "US,1970,2012,0.009,average annual TFP growth of a mature market economy",
            "EU,1970,2012,0.010,average annual TFP growth of a mature market economy",
            "JP,1970,2012,0.007,average annual TFP growth of a mature market economy",
            "KR,1970,2012,0.016,newly developed economy average",
            "JP,1977,2018,0.008,later-vintage average kept as a distinct row",
            "KR,1977,2018,0.0103,later-vintage average kept as a distinct row",
            "CN,1977,2018,0.0343,dual-track economy average over the same window",
        ],
    )

    # -- natural-band calibration ---------------------------------------------
    # Constant paths whose The 15-year averages hit the published band exactly:
    # low = tech + a*labor + b*cap_low = 1.81%, high = 3.31%, midpoint 2.56%.
    tech, a_el, b_el = 0.0100, 0.5, 0.5
    labor_g, cap_low, cap_high = -0.0040, 0.0202, 0.0502
    check("band low", tech + a_el * labor_g + b_el * cap_low, 0.0181, 1e-12)
    check("band high", tech + a_el * labor_g + b_el * cap_high, 0.0331, 1e-12)
    write_csv(
        "natural_band_calibration.csv",
        [
            f"# tech_growth: {tech!r}",
            f"# labor_elasticity: {a_el!r}",
            f"# capital_elasticity: {b_el!r}",
            "year,labor_growth,capital_growth_low,capital_growth_high",
        ]
        + [f"{y},{labor_g!r},{cap_low!r},{cap_high!r}" for y in range(2021, 2036)],
    )

    # -- cohort calibration ----------------------------------------------------
    # Entry cohorts at year t are the births of year t-20; the constant exit
    # outflow is the replacement-level entry cohort (22 million), so shrinkage
    # s(t) = 22 - births(t-20).  s is pinned to 3.45M in 2012 with cumulative
    # 39.83M over 2012-2020, then extended linearly to a 1.20 TFR in 2020.
    exits = 22.0
    s0, cum_target = 3.45, 39.83
    delta = (cum_target - 9 * s0) / 36.0  # linear ramp making the 9-year sum exact
    shrink = {2012 + k: s0 + delta * k for k in range(9)}
    check("cumulative shrinkage 2012-20 (M)", sum(shrink.values()), cum_target, 1e-9)

    births: dict[int, float] = {1990: 23.5, 1991: exits}
    for t, s in shrink.items():
        births[t - 20] = exits - s
    b2000 = births[2000]
    b2020 = exits * 1.20 / 2.10  # a 1.20 TFR in 2020 in the replacement identity
    for y in range(2001, 2021):
        births[y] = b2000 + (y - 2000) * (b2020 - b2000) / 20.0
    years = sorted(births)
    assert years == list(range(1990, 2021))
    write_csv(
        "births_china.csv",
        ["# unit: million persons per year", "year,value"]
        + [f"{y},{births[y]!r}" for y in years],
    )
    # TFR series via the replacement identity TFR = 2.10 * births / 22.
    write_csv(
        "fertility_china.csv",
        ["# unit: total fertility rate", "year,value"]
        + [f"{y},{2.10 * births[y] / exits!r}" for y in years],
    )

    # Per-capita consumption: level anchored so 2012's contraction is 766.34B,
    # growth rate solved so the 2012-2020 cumulative contraction is 12774.41B.
    pcc0 = 766.34e9 / 3.45e6  # RMB per person per year

    def cumulative_b(g: float) -> float:
        return sum(shrink[2012 + k] * pcc0 * (1 + g) ** k / 1000.0 for k in range(9))

    lo, hi = 0.0, 0.20
    for _ in range(200):
        mid = (lo + hi) / 2
        if cumulative_b(mid) < 12774.41:
            lo = mid
        else:
            hi = mid
    pcc_growth = (lo + hi) / 2
    check("cumulative contraction (B)", cumulative_b(pcc_growth), 12774.41, 1e-6)
    pcc = {y: pcc0 * (1 + pcc_growth) ** (y - 2012) for y in range(2012, 2036)}
    write_csv(
        "per_capita_consumption.csv",
        ["# unit: RMB per person per year", "year,value"]
        + [f"{y},{pcc[y]!r}" for y in sorted(pcc)],
    )

    # -- 2020 demand ledger components (trillion RMB) -------------------------
    transfer = TRANSFER_FEES_B / 1000.0 * 0.5
    check("land-finance transfer (T)", transfer, 4.2071, 1e-12)
    housing_squeeze = 3.6458
    cohort_2020 = shrink[2020] * pcc[2020] / 1e6
    excess_total = 13.15
    export_decline = excess_total - transfer - housing_squeeze - cohort_2020
    assert export_decline > 0
    consumer_fraction = 6.58 / excess_total
    write_csv(
        "demand_2020.csv",
        [
            "component,value,unit,provenance",
            f"cohort_contraction,{cohort_2020!r},trillion RMB,2020 annual consumption contraction from the cohort calibration",
            f"export_decline,{export_decline!r},trillion RMB,residual closing the 2020 excess-capacity ledger at 13.15T",
            f"land_finance_transfer,{transfer!r},trillion RMB,50% of the 8.4142T land transfer fees",
            f"housing_crowd_out,{housing_squeeze!r},trillion RMB,consumption squeezed by high housing prices in 2020",
            f"consumer_goods_fraction,{consumer_fraction!r},fraction,consumer-goods excess 6.58T / industrial excess 13.15T",
        ],
    )

    # -- export history ---------------------------------------------------------
    # GDP levels implied exactly by the reported shares so shares round-trip.
    write_csv(
        "export_history.csv",
        [
            "year,exports_trillion,gdp_trillion",
            f"1978,0.0168,{0.0168 / 0.0456!r}",
            f"2006,7.7597,{7.7597 / 0.3536!r}",
            f"2020,{EXPORTS_2020!r},{GDP_2020!r}",
        ],
    )

    # -- frozen constants used by tests and module defaults ---------------------
    print("\nfrozen constants:")
    print(f"  pcc_growth          = {pcc_growth!r}")
    print(f"  pcc_2020            = {pcc[2020]!r}")
    print(f"  shrink_2020         = {shrink[2020]!r}")
    print(f"  cohort_2020_T       = {cohort_2020!r}")
    print(f"  export_decline_T    = {export_decline!r}")
    print(f"  consumer_fraction   = {consumer_fraction!r}")
    print(f"  employed_total_M    = {employed!r}")
    print(f"  state_capital_T     = {state_capital!r}")
    print(f"  land_total_MMu      = {land_total!r}")
    print(f"  capital_yield       = {capital_yield!r}")
    print(f"  land_yield          = {land_yield!r}")
    print(f"  debt_stock_T        = {debt!r}")
    print(f"  m2_stock_T          = {m2!r}")
    housing_base = housing_squeeze * 9.3 / 3.3
    print(f"  housing_base_T      = {housing_base!r}")
    gross_release = 4.5 + 5.0 + housing_squeeze
    print(f"  release_overlap     = {1 - 10.0 / gross_release!r}")
    print(f"  v_s 2020            = {0.8 * GDP_2020 / m2!r}")
    print(f"  v_d 2020            = {debt * 0.05 / m2!r}")
    print(f"  v_f 2020            = {0.8 * GDP_2020 / (debt * 0.05)!r}")
    print(f"  debt ratio 2035     = {272.0 * (1.10 / 1.061) ** 15!r}")
    print(f"  m2 ratio 2035 (8%)  = {217.0 * (1.08 / 1.061) ** 15!r}")
    print(f"  g_money calibrated  = {1.061 * (327.0 / 217.0) ** (1 / 15) - 1!r}")
    print(f"  g_debt calibrated   = {1.061 * (465.0 / 272.0) ** (1 / 15) - 1!r}")
    print(f"  reform dividend     = {1.1692 ** (1 / 15) - 1!r}")


if __name__ == "__main__":
    main()
