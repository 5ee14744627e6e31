"""Domain types, parameter validation, and exact combinatorics.

A game is described by four integers and a host behavior: ``doors`` (N)
total doors, ``prizes`` (m) of them hiding a prize, the host opening
``opened`` (k) doors of which ``revealed`` (r) turn out to hold prizes.
Everything downstream (closed forms, enumeration, simulation) shares the
validation rules defined here.

All probabilities on the analytic side are exact rationals
(:class:`fractions.Fraction`); floats appear only in simulation statistics
and at presentation time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

# Exact rational probability: arbitrary-precision integers, always stored in
# lowest terms with positive denominator. fractions.Fraction guarantees all
# of that, so it IS the type.
ExactProb = Fraction

# Validation reason codes.
PRIZE_COUNT_RANGE = "PRIZE_COUNT_RANGE"
OPENED_RANGE = "OPENED_RANGE"
REVEALED_RANGE = "REVEALED_RANGE"
NO_SWITCH_TARGET = "NO_SWITCH_TARGET"
INFORMED_INFEASIBLE = "INFORMED_INFEASIBLE"
EVENT_IMPOSSIBLE = "EVENT_IMPOSSIBLE"


class HostModel(Enum):
    """How the host picks the doors to open.

    INFORMED: knows every prize location and deliberately opens k doors
    containing exactly r prizes (always possible for valid configs).
    RANDOM: opens k uniformly random non-contestant doors; "exactly r
    prizes revealed" is then a conditioning event, not a guarantee.
    """

    INFORMED = "informed"
    RANDOM = "random"


class Strategy(Enum):
    STAY = "stay"
    SWITCH = "switch"


class ValidationError(ValueError):
    """Config rejected; ``code`` carries the machine-readable reason."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class ProblemConfig:
    """One game setup: (N, m, k, r) plus the host model."""

    doors: int
    prizes: int
    opened: int
    revealed: int
    host: HostModel

    @property
    def switch_targets(self) -> int:
        """Unopened non-contestant doors available to switch to (N-k-1)."""
        return self.doors - self.opened - 1

    @property
    def unopened(self) -> int:
        """All unopened doors including the contestant's (N-k)."""
        return self.doors - self.opened

    def describe(self) -> str:
        return (
            f"N={self.doors}, m={self.prizes}, k={self.opened}, "
            f"r={self.revealed}, host={self.host.value}"
        )


@dataclass(frozen=True)
class StrategyOutcome:
    """Exact win probabilities for staying and for switching."""

    stay: Fraction
    switch: Fraction
    config: ProblemConfig


def binom(n: int, j: int) -> int:
    """Binomial coefficient C(n, j), with C(n, j) = 0 outside 0 <= j <= n.

    The out-of-support zero (rather than an error) lets the hypergeometric
    likelihoods be written once and stay correct at edges like r = m.
    Requires n >= 0.
    """
    if n < 0:
        raise ValueError(f"binom requires n >= 0, got n={n}")
    if j < 0 or j > n:
        return 0
    return math.comb(n, j)


def validate(config: ProblemConfig) -> ProblemConfig:
    """Check a ProblemConfig, returning it unchanged or raising ValidationError.

    Rules (N = doors, m = prizes, k = opened, r = revealed):
      - 1 <= m <= N-1: at least one prize and one non-prize. m = 0 and
        m = N make the stay/switch question degenerate and are rejected.
      - k >= 0 and 0 <= r <= k. k = 0 is allowed (host opens nothing).
      - N-k-1 >= 1: switching must have at least one target door.
      - INFORMED additionally needs r <= m-1 and k-r <= N-m-1, so the host
        can reveal exactly r prizes whether or not the contestant's door
        holds one.
      - RANDOM additionally needs the conditioning event to be possible:
        C(m-1,r)C(N-m,k-r) + C(m,r)C(N-m-1,k-r) > 0.
    """
    n, m, k, r = config.doors, config.prizes, config.opened, config.revealed
    for name, value in (("doors", n), ("prizes", m), ("opened", k), ("revealed", r)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise ValidationError(
                PRIZE_COUNT_RANGE if name == "prizes" else OPENED_RANGE,
                f"{name} must be an integer, got {value!r}",
            )
    if not isinstance(config.host, HostModel):
        raise ValidationError(OPENED_RANGE, f"host must be a HostModel, got {config.host!r}")

    if m < 1 or m > n - 1:
        raise ValidationError(
            PRIZE_COUNT_RANGE,
            f"prizes must satisfy 1 <= m <= N-1, got m={m} with N={n}",
        )
    if k < 0:
        raise ValidationError(OPENED_RANGE, f"opened must be >= 0, got k={k}")
    if r < 0 or r > k:
        raise ValidationError(
            REVEALED_RANGE, f"revealed must satisfy 0 <= r <= k, got r={r} with k={k}"
        )
    if n - k - 1 < 1:
        raise ValidationError(
            NO_SWITCH_TARGET,
            f"no unopened door left to switch to: N-k-1 = {n - k - 1}",
        )
    if config.host is HostModel.INFORMED:
        if r > m - 1 or k - r > n - m - 1:
            raise ValidationError(
                INFORMED_INFEASIBLE,
                "informed host cannot guarantee the reveal: needs "
                f"r <= m-1 and k-r <= N-m-1, got r={r}, m={m}, k={k}, N={n}",
            )
    else:
        support = binom(m - 1, r) * binom(n - m, k - r) + binom(m, r) * binom(n - m - 1, k - r)
        if support == 0:
            raise ValidationError(
                EVENT_IMPOSSIBLE,
                f"a random host can never reveal exactly r={r} prizes in k={k} doors "
                f"for N={n}, m={m}",
            )
    return config


def decimal_string(value: Fraction, places: int = 5) -> str:
    """Render a non-negative rational as a fixed-point decimal string.

    Rounding is exact half-up on integers (no float detour), so e.g.
    Fraction(3463, 9600) renders as "0.36073" at 5 places.
    """
    if places < 1:
        raise ValueError("places must be >= 1")
    if value < 0:
        raise ValueError("decimal_string expects a non-negative value")
    scaled = value * 10**places
    q, rem = divmod(scaled.numerator, scaled.denominator)
    if 2 * rem >= scaled.denominator:
        q += 1
    digits = str(q).rjust(places + 1, "0")
    return f"{digits[:-places]}.{digits[-places:]}"
