"""Chained index-number engine over priced panels.

A priced panel is a time series of per-sector (quantity, price) pairs.  On top
of it we compute nominal GDP, nominal and real growth under Laspeyres,
Paasche, Fisher, and Tornqvist indexes, deflator-implied inflation, chained
levels, circularity residuals for closed loops, and the path-dependent GDP
line integral.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import (
    DegenerateBaseError,
    InsufficientDataError,
    MethodDomainError,
    NotALoopError,
    ValidationError,
)


class IndexMethod(Enum):
    LASPEYRES = "laspeyres"
    PAASCHE = "paasche"
    FISHER = "fisher"
    TORNQVIST = "tornqvist"


@dataclass(frozen=True)
class PricedPanel:
    """Time-indexed series of per-sector (quantity, price) pairs.

    ``periods[i][a]`` is the (quantity, price) pair of sector ``a`` in period
    ``i``; ``period_labels`` carries the years.
    """

    sector_names: tuple[str, ...]
    periods: tuple[tuple[tuple[float, float], ...], ...]
    period_labels: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.sector_names)
        if n < 1:
            raise ValidationError("panel needs at least one sector")
        if len(self.periods) < 1:
            raise ValidationError("panel needs at least one period")
        if len(self.period_labels) != len(self.periods):
            raise ValidationError("one label per period required")
        for label_prev, label in zip(self.period_labels, self.period_labels[1:]):
            if label <= label_prev:
                raise ValidationError(
                    "period labels must be strictly increasing"
                )
        for i, period in enumerate(self.periods):
            if len(period) != n:
                raise ValidationError(
                    f"period {i}: expected {n} (quantity, price) pairs, "
                    f"got {len(period)}"
                )
            for name, (qty, price) in zip(self.sector_names, period):
                if not (math.isfinite(qty) and math.isfinite(price)):
                    raise ValidationError(
                        f"period {i}, sector {name}: non-finite entry"
                    )
                if qty < 0.0:
                    raise ValidationError(
                        f"period {i}, sector {name}: negative quantity {qty}"
                    )
                if price <= 0.0:
                    raise ValidationError(
                        f"period {i}, sector {name}: non-positive price {price}"
                    )

    @property
    def n_periods(self) -> int:
        return len(self.periods)

    def quantities(self, i: int) -> tuple[float, ...]:
        return tuple(q for q, _ in self.periods[i])

    def prices(self, i: int) -> tuple[float, ...]:
        return tuple(p for _, p in self.periods[i])


@dataclass(frozen=True)
class GrowthSeries:
    """Per-step growth rates with chained level and running average.

    All three series have length ``n_periods - 1`` and align to steps:
    ``chained_level[j]`` is the product of ``1 + rates[m]`` for m <= j and
    ``running_average[j]`` the arithmetic (or geometric) mean of
    ``rates[: j + 1]``.
    """

    method: IndexMethod | None
    rates: tuple[float, ...]
    chained_level: tuple[float, ...]
    running_average: tuple[float, ...]
    step_labels: tuple[int, ...]  # label of the later period of each step


def _check_step(panel: PricedPanel, step: int) -> None:
    if not 0 <= step < panel.n_periods - 1:
        raise ValidationError(
            f"step {step} out of range for {panel.n_periods} periods"
        )


def nominal_gdp(panel: PricedPanel, period: int) -> float:
    """Sum of price * quantity over sectors at the period's own prices."""
    if not 0 <= period < panel.n_periods:
        raise ValidationError(
            f"period {period} out of range for {panel.n_periods} periods"
        )
    return sum(q * p for q, p in panel.periods[period])


def nominal_growth(panel: PricedPanel, step: int) -> float:
    """GDP_{i+1} / GDP_i - 1 at each period's own prices."""
    _check_step(panel, step)
    base = nominal_gdp(panel, step)
    if base <= 0.0:
        raise DegenerateBaseError(f"zero nominal GDP at period {step}")
    return nominal_gdp(panel, step + 1) / base - 1.0


def _basket_value(prices, quantities) -> float:
    return sum(p * q for p, q in zip(prices, quantities))


def real_growth(panel: PricedPanel, step: int, method: IndexMethod) -> float:
    """Quantity growth from period ``step`` to ``step + 1`` under an index.

    Laspeyres values both periods at the earlier period's prices, Paasche at
    the later period's, Fisher is their geometric mean, and Tornqvist weights
    log quantity changes by mean expenditure shares.
    """
    _check_step(panel, step)
    q0, q1 = panel.quantities(step), panel.quantities(step + 1)
    p0, p1 = panel.prices(step), panel.prices(step + 1)
    if method is IndexMethod.LASPEYRES:
        base = _basket_value(p0, q0)
        if base <= 0.0:
            raise DegenerateBaseError(f"zero base value at period {step}")
        return _basket_value(p0, q1) / base - 1.0
    if method is IndexMethod.PAASCHE:
        base = _basket_value(p1, q0)
        if base <= 0.0:
            raise DegenerateBaseError(f"zero base value at period {step}")
        return _basket_value(p1, q1) / base - 1.0
    if method is IndexMethod.FISHER:
        g_l = real_growth(panel, step, IndexMethod.LASPEYRES)
        g_p = real_growth(panel, step, IndexMethod.PAASCHE)
        return math.sqrt((1.0 + g_l) * (1.0 + g_p)) - 1.0
    if method is IndexMethod.TORNQVIST:
        if any(q <= 0.0 for q in q0 + q1):
            raise MethodDomainError(
                "Tornqvist requires strictly positive quantities"
            )
        gdp0, gdp1 = _basket_value(p0, q0), _basket_value(p1, q1)
        log_index = 0.0
        for a in range(len(q0)):
            share = 0.5 * (p0[a] * q0[a] / gdp0 + p1[a] * q1[a] / gdp1)
            log_index += share * math.log(q1[a] / q0[a])
        return math.exp(log_index) - 1.0
    raise ValidationError(f"unknown index method {method!r}")


def inflation(panel: PricedPanel, step: int, method: IndexMethod) -> float:
    """Deflator-implied inflation: (1 + nominal) / (1 + real) - 1."""
    g_nom = nominal_growth(panel, step)
    g_real = real_growth(panel, step, method)
    return (1.0 + g_nom) / (1.0 + g_real) - 1.0


def growth_series(
    panel: PricedPanel,
    method: IndexMethod | None = IndexMethod.LASPEYRES,
    geometric_average: bool = False,
    values: tuple[float, ...] | None = None,
) -> GrowthSeries:
    """Per-step growth over the whole panel with chained level and running
    average.

    When ``values`` is given (one scalar valuation per period) the rates are
    ratios of those valuations instead of index-method growth; this backs the
    fixed-basket and nominal series.
    """
    if panel.n_periods < 2:
        raise InsufficientDataError("growth needs at least two periods")
    if values is not None and len(values) != panel.n_periods:
        raise ValidationError("one valuation per period required")
    rates = []
    for step in range(panel.n_periods - 1):
        if values is None:
            if method is None:
                raise ValidationError("an index method is required")
            rates.append(real_growth(panel, step, method))
        else:
            if values[step] <= 0.0:
                raise DegenerateBaseError(f"zero valuation at period {step}")
            rates.append(values[step + 1] / values[step] - 1.0)
    chained, averages = [], []
    level = 1.0
    for j, rate in enumerate(rates):
        level *= 1.0 + rate
        chained.append(level)
        if geometric_average:
            averages.append(level ** (1.0 / (j + 1)) - 1.0)
        else:
            averages.append(sum(rates[: j + 1]) / (j + 1))
    return GrowthSeries(
        method=method if values is None else None,
        rates=tuple(rates),
        chained_level=tuple(chained),
        running_average=tuple(averages),
        step_labels=tuple(panel.period_labels[1:]),
    )


def circularity_residual(
    panel: PricedPanel, method: IndexMethod = IndexMethod.LASPEYRES
) -> float:
    """Log of the chained level over a closed loop; 0 means the circularity
    test passes.  The panel's first and last periods must match."""
    if panel.n_periods < 2:
        raise InsufficientDataError("a loop needs at least two periods")
    first, last = panel.periods[0], panel.periods[-1]
    for name, (pair0, pair1) in zip(panel.sector_names, zip(first, last)):
        for v0, v1 in zip(pair0, pair1):
            if not math.isclose(v0, v1, rel_tol=1e-9, abs_tol=1e-12):
                raise NotALoopError(
                    f"sector {name}: endpoints differ ({v0} vs {v1})"
                )
    series = growth_series(panel, method)
    return math.log(series.chained_level[-1])


def path_integral_gdp(path: PricedPanel) -> float:
    """Line integral of sum_a P_a dY_a along the path, trapezoidal in prices.

    Exact when prices are constant on a leg; antisymmetric under path
    reversal.
    """
    if path.n_periods < 2:
        raise InsufficientDataError("path integral needs at least two points")
    total = 0.0
    for step in range(path.n_periods - 1):
        q0, q1 = path.quantities(step), path.quantities(step + 1)
        p0, p1 = path.prices(step), path.prices(step + 1)
        for a in range(len(q0)):
            total += 0.5 * (p0[a] + p1[a]) * (q1[a] - q0[a])
    return total
