"""Brute-force enumeration of every possible game on small instances.

This module is the ground truth the closed forms are checked against. It
never uses the analytic formulas: it walks all C(N, m) prize placements
and all host door choices, counts wins with exact integer weights, and
only converts to rationals at the end.

World weighting:
  RANDOM host: every (placement, k-subset of non-contestant doors) is one
  equally likely world. Worlds revealing a number of prizes different
  from r are counted in ``total_weight`` but excluded from the event.
  INFORMED host: for each placement only subsets revealing exactly r
  prizes can occur, each equally likely among the valid subsets for that
  placement. Placements can have different valid-subset counts, so each
  world gets integer weight lcm(counts) // count(placement); the event is
  then certain and ``event_weight == total_weight``.

Switch outcomes are tallied per target: each event world contributes one
outcome per unopened non-contestant door, so ``switch_win_weight`` is
normalized by event_weight * (N-k-1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .core import (
    HostModel,
    ProblemConfig,
    StrategyOutcome,
    binom,
    validate,
)

TRACTABILITY_EXCEEDED = "TRACTABILITY_EXCEEDED"
EVENT_IMPOSSIBLE = "EVENT_IMPOSSIBLE"

# Max placements x host subsets enumerated; keeps full verification runs
# comfortably under a minute.
TRACTABILITY_LIMIT = 10_000_000


class OracleError(Exception):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class WorldEnumeration:
    """Integer win tallies over the full world enumeration of one config."""

    config: ProblemConfig
    total_weight: int
    event_weight: int
    stay_win_weight: int
    switch_win_weight: int

    def event_probability(self) -> Fraction:
        """P(host reveals exactly r prizes) = event weight over all worlds."""
        return Fraction(self.event_weight, self.total_weight)


def _count_valid_subsets(others: tuple[int, ...], prizes: frozenset[int], k: int, r: int) -> int:
    count = 0
    for opened in combinations(others, k):
        revealed = sum(1 for d in opened if d in prizes)
        if revealed == r:
            count += 1
    return count


def enumerate_worlds(config: ProblemConfig, contestant_door: int = 0) -> WorldEnumeration:
    """Exhaustively enumerate all worlds for a validated config.

    The contestant's door is fixed (door 0 by default; any door gives the
    same probabilities by symmetry, which the test suite spot-checks).
    """
    validate(config)
    n, m, k, r = config.doors, config.prizes, config.opened, config.revealed
    if not 0 <= contestant_door < n:
        raise ValueError(f"contestant_door must be in [0, {n}), got {contestant_door}")
    if binom(n, m) * binom(n - 1, k) > TRACTABILITY_LIMIT:
        raise OracleError(
            TRACTABILITY_EXCEEDED,
            f"C({n},{m}) * C({n - 1},{k}) worlds exceed the enumeration limit "
            f"of {TRACTABILITY_LIMIT}",
        )

    others = tuple(d for d in range(n) if d != contestant_door)
    total = 0
    event = 0
    stay_w = 0
    switch_w = 0

    if config.host is HostModel.RANDOM:
        for prize_doors in combinations(range(n), m):
            prizes = frozenset(prize_doors)
            stay_hit = contestant_door in prizes
            for opened in combinations(others, k):
                total += 1
                revealed = sum(1 for d in opened if d in prizes)
                if revealed != r:
                    continue
                event += 1
                if stay_hit:
                    stay_w += 1
                opened_set = frozenset(opened)
                for target in others:
                    if target not in opened_set and target in prizes:
                        switch_w += 1
    else:
        # Pass 1: the lcm of valid-subset counts, so every subset weight is
        # an integer and every placement carries equal total weight.
        weight_lcm = 1
        for prize_doors in combinations(range(n), m):
            prizes = frozenset(prize_doors)
            weight_lcm = math.lcm(weight_lcm, _count_valid_subsets(others, prizes, k, r))
        # Pass 2: accumulate.
        for prize_doors in combinations(range(n), m):
            prizes = frozenset(prize_doors)
            stay_hit = contestant_door in prizes
            weight = weight_lcm // _count_valid_subsets(others, prizes, k, r)
            for opened in combinations(others, k):
                revealed = sum(1 for d in opened if d in prizes)
                if revealed != r:
                    continue
                total += weight
                event += weight
                if stay_hit:
                    stay_w += weight
                opened_set = frozenset(opened)
                for target in others:
                    if target not in opened_set and target in prizes:
                        switch_w += weight

    return WorldEnumeration(
        config=config,
        total_weight=total,
        event_weight=event,
        stay_win_weight=stay_w,
        switch_win_weight=switch_w,
    )


def oracle_probabilities(config: ProblemConfig, contestant_door: int = 0) -> StrategyOutcome:
    """Exact conditional win probabilities P(win | event) from enumeration."""
    worlds = enumerate_worlds(config, contestant_door)
    if worlds.event_weight == 0:
        raise OracleError(
            EVENT_IMPOSSIBLE,
            f"cannot condition on an impossible reveal for {config.describe()}",
        )
    stay = Fraction(worlds.stay_win_weight, worlds.event_weight)
    switch = Fraction(
        worlds.switch_win_weight,
        worlds.event_weight * config.switch_targets,
    )
    return StrategyOutcome(stay=stay, switch=switch, config=config)
