"""Convergence traces, confidence intervals, and theory-vs-simulation reports.

The CSV trace schema is fixed:

    trial_count,win_rate,ci_low,ci_high,strategy,host

with floating-point fields rendered to 6 significant digits, decimal
point, no locale dependence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from .analytic import informed_probabilities, random_probabilities
from .core import (
    HostModel,
    Strategy,
    ValidationError,
    decimal_string,
    validate,
)
from .simulate import RunSummary, TrialRecord

CSV_HEADER = "trial_count,win_rate,ci_low,ci_high,strategy,host"
DEFAULT_Z = 1.96

CONFIG_MISMATCH = "CONFIG_MISMATCH"


class ComparisonError(Exception):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


def wilson_interval(wins: int, trials: int, z: float = DEFAULT_Z) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion.

    Chosen over the Wald interval because it stays inside [0, 1] and
    behaves sanely at observed rates of exactly 0 or 1.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if not 0 <= wins <= trials:
        raise ValueError("wins must satisfy 0 <= wins <= trials")
    if z <= 0:
        raise ValueError("z must be positive")
    p = wins / trials
    z2n = z * z / trials
    denom = 1.0 + z2n
    center = (p + z2n / 2.0) / denom
    half = z * math.sqrt(p * (1.0 - p) / trials + z2n / (4.0 * trials)) / denom
    return max(0.0, center - half), min(1.0, center + half)


@dataclass(frozen=True)
class TraceCheckpoint:
    trial_count: int
    win_rate: float
    ci_low: float
    ci_high: float


@dataclass(frozen=True)
class ConvergenceTrace:
    checkpoints: tuple[TraceCheckpoint, ...]
    strategy: str
    host: str

    @property
    def final(self) -> TraceCheckpoint:
        return self.checkpoints[-1]


def power_of_two_checkpoints(total: int) -> list[int]:
    """Default checkpoint rule: 1, 2, 4, ... plus the final trial count."""
    points = []
    c = 1
    while c < total:
        points.append(c)
        c *= 2
    points.append(total)
    return points


def make_trace(
    records: Iterable[TrialRecord] | np.ndarray | Sequence[int],
    *,
    strategy: Strategy,
    host: HostModel,
    checkpoint_rule: Callable[[int], Sequence[int]] = power_of_two_checkpoints,
    z: float = DEFAULT_Z,
) -> ConvergenceTrace:
    """Fold a trial stream into checkpointed running win rates with CIs.

    ``records`` may be TrialRecords (the win bit is picked per
    ``strategy``) or, as a fast path, an array of 0/1 wins.
    """
    materialized = list(records) if not isinstance(records, np.ndarray) else records
    if len(materialized) == 0:
        raise ValueError("record stream must be non-empty")
    if isinstance(materialized, np.ndarray) or not isinstance(materialized[0], TrialRecord):
        wins = np.asarray(materialized, dtype=np.int64)
    else:
        wins = np.fromiter(
            (rec.won(strategy) for rec in materialized), dtype=np.int64, count=len(materialized)
        )
    total = len(wins)
    cumulative = np.cumsum(wins)
    checkpoints = []
    last = 0
    for count in checkpoint_rule(total):
        if not last < count <= total:
            raise ValueError("checkpoint rule must yield increasing counts within the stream")
        last = count
        won = int(cumulative[count - 1])
        low, high = wilson_interval(won, count, z)
        checkpoints.append(
            TraceCheckpoint(trial_count=count, win_rate=won / count, ci_low=low, ci_high=high)
        )
    if last != total:
        raise ValueError("checkpoint rule must end at the total trial count")
    return ConvergenceTrace(
        checkpoints=tuple(checkpoints), strategy=strategy.value, host=host.value
    )


def trace_csv(traces: Iterable[ConvergenceTrace]) -> str:
    """Render traces to the documented CSV schema (6 significant digits)."""
    lines = [CSV_HEADER]
    for trace in traces:
        for cp in trace.checkpoints:
            lines.append(
                f"{cp.trial_count},{cp.win_rate:.6g},{cp.ci_low:.6g},{cp.ci_high:.6g},"
                f"{trace.strategy},{trace.host}"
            )
    return "\n".join(lines) + "\n"


def theoretical_outcome(config) -> tuple[Fraction, Fraction]:
    """Exact (stay, switch) for a validated config under its host model."""
    if config.host is HostModel.INFORMED:
        out = informed_probabilities(config)
    else:
        out = random_probabilities(config)
    return out.stay, out.switch


@dataclass(frozen=True)
class ComparisonRow:
    host: str
    strategy: str
    theoretical: Fraction
    simulated: float
    difference: float

    def rendered(self, places: int = 5) -> tuple[str, str, str, str, str]:
        return (
            self.host,
            self.strategy,
            decimal_string(self.theoretical, places),
            f"{self.simulated:.{places}f}",
            f"{self.difference:.{places}f}",
        )


@dataclass(frozen=True)
class ComparisonReport:
    rows: tuple[ComparisonRow, ...]
    places: int = 5

    def to_lines(self) -> list[str]:
        lines = ["host,strategy,theoretical,simulated,difference"]
        for row in self.rows:
            lines.append(",".join(row.rendered(self.places)))
        return lines


def compare(summaries: Iterable[RunSummary], places: int = 5) -> ComparisonReport:
    """Pair each simulated win rate with its exact analytic counterpart."""
    rows = []
    for summary in summaries:
        try:
            validate(summary.config)
        except ValidationError as exc:
            raise ComparisonError(
                CONFIG_MISMATCH,
                f"summary has no analytic counterpart ({exc.code}): "
                f"{summary.config.describe()}",
            ) from exc
        stay, switch = theoretical_outcome(summary.config)
        theoretical = stay if summary.strategy is Strategy.STAY else switch
        simulated = summary.win_rate
        difference = round(abs(float(theoretical) - simulated), places)
        rows.append(
            ComparisonRow(
                host=summary.config.host.value,
                strategy=summary.strategy.value,
                theoretical=theoretical,
                simulated=simulated,
                difference=difference,
            )
        )
    return ComparisonReport(rows=tuple(rows), places=places)
