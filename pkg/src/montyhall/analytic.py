"""Closed-form win probabilities for both host models, in exact rationals.

Notation: N doors, m prizes, host opens k doors revealing exactly r
prizes. S1 is the event that the contestant's door hides a prize (prior
m/N), S0 its complement, E the reveal event.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (
    HostModel,
    ProblemConfig,
    StrategyOutcome,
    binom,
    validate,
)


@dataclass(frozen=True)
class LikelihoodPair:
    """Hypergeometric likelihoods of the reveal under a random host.

    given_prize    = P(E | S1) = C(m-1,r) C(N-m,k-r)   / C(N-1,k)
    given_no_prize = P(E | S0) = C(m,r)   C(N-m-1,k-r) / C(N-1,k)
    marginal       = P(E) = P(E|S1) m/N + P(E|S0) (1 - m/N)
    """

    given_prize: Fraction
    given_no_prize: Fraction
    marginal: Fraction


def _require_host(config: ProblemConfig, host: HostModel) -> ProblemConfig:
    validate(config)
    if config.host is not host:
        raise ValueError(f"expected a {host.value}-host config, got {config.host.value}")
    return config


def informed_probabilities(config: ProblemConfig) -> StrategyOutcome:
    """Stay/switch win probabilities when the host knows the prizes.

    The reveal is guaranteed, so it carries no information about the
    contestant's door: stay = m/N. Opening k doors with r prizes leaves
    the unchosen doors' expected prize count m(N-1)/N - r spread evenly
    over the N-k-1 switch targets:

        switch = (m(N-1) - rN) / (N(N-k-1))
    """
    _require_host(config, HostModel.INFORMED)
    n, m, k, r = config.doors, config.prizes, config.opened, config.revealed
    stay = Fraction(m, n)
    switch = Fraction(m * (n - 1) - r * n, n * (n - k - 1))
    return StrategyOutcome(stay=stay, switch=switch, config=config)


def random_host_likelihoods(config: ProblemConfig) -> LikelihoodPair:
    """Reveal likelihoods P(E|S1), P(E|S0) and the marginal P(E)."""
    _require_host(config, HostModel.RANDOM)
    n, m, k, r = config.doors, config.prizes, config.opened, config.revealed
    denom = binom(n - 1, k)
    given_prize = Fraction(binom(m - 1, r) * binom(n - m, k - r), denom)
    given_no_prize = Fraction(binom(m, r) * binom(n - m - 1, k - r), denom)
    prior = Fraction(m, n)
    marginal = given_prize * prior + given_no_prize * (1 - prior)
    return LikelihoodPair(
        given_prize=given_prize, given_no_prize=given_no_prize, marginal=marginal
    )


def random_probabilities(config: ProblemConfig) -> StrategyOutcome:
    """Stay/switch win probabilities when the host opens doors blindly.

    Conditioned on the reveal, every unopened door is symmetric, so both
    strategies win with probability (m-r)/(N-k): switching buys nothing.
    """
    _require_host(config, HostModel.RANDOM)
    n, m, k, r = config.doors, config.prizes, config.opened, config.revealed
    p = Fraction(m - r, n - k)
    return StrategyOutcome(stay=p, switch=p, config=config)


def posterior_stay_from_bayes(config: ProblemConfig) -> Fraction:
    """P(S1 | E) computed straight from the Bayes quotient.

    Deliberately does NOT use the simplified (m-r)/(N-k) form; exact
    agreement with random_probabilities() is checked by the test suite,
    which is what certifies the algebraic simplification.
    """
    _require_host(config, HostModel.RANDOM)
    lk = random_host_likelihoods(config)
    prior = Fraction(config.prizes, config.doors)
    return (lk.given_prize * prior) / lk.marginal
