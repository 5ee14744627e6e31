"""Generalized Monty Hall games: exact analysis, enumeration, and simulation.

N doors hide m prizes; the host opens k doors revealing exactly r of
them; the contestant stays or switches. Two host models are supported:
an informed host who engineers the reveal, and a random host for whom
the reveal is a conditioning event.
"""

from .analytic import (
    LikelihoodPair,
    informed_probabilities,
    posterior_stay_from_bayes,
    random_host_likelihoods,
    random_probabilities,
)
from .core import (
    ExactProb,
    HostModel,
    ProblemConfig,
    Strategy,
    StrategyOutcome,
    ValidationError,
    binom,
    decimal_string,
    validate,
)
from .oracle import OracleError, WorldEnumeration, enumerate_worlds, oracle_probabilities
from .simulate import (
    RejectionLimitError,
    RunSummary,
    TrialRecord,
    WorldSample,
    run_batch,
    simulate_trial_informed,
    simulate_trial_random,
    simulate_worlds,
)
from .stats import (
    ComparisonReport,
    ConvergenceTrace,
    compare,
    make_trace,
    trace_csv,
    wilson_interval,
)

__version__ = "0.1.0"

__all__ = [
    "ExactProb",
    "HostModel",
    "ProblemConfig",
    "Strategy",
    "StrategyOutcome",
    "ValidationError",
    "binom",
    "decimal_string",
    "validate",
    "LikelihoodPair",
    "informed_probabilities",
    "random_host_likelihoods",
    "random_probabilities",
    "posterior_stay_from_bayes",
    "OracleError",
    "WorldEnumeration",
    "enumerate_worlds",
    "oracle_probabilities",
    "RejectionLimitError",
    "RunSummary",
    "TrialRecord",
    "WorldSample",
    "run_batch",
    "simulate_trial_informed",
    "simulate_trial_random",
    "simulate_worlds",
    "ComparisonReport",
    "ConvergenceTrace",
    "compare",
    "make_trace",
    "trace_csv",
    "wilson_interval",
    "__version__",
]
