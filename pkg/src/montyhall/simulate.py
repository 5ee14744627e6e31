"""Seeded Monte Carlo simulation of the full game for both host models.

Trial layout
------------
Each trial consumes draws from its own counter-based substream (see
:mod:`montyhall.rng`), in this fixed, documented order:

1. Prize placement. One bounded draw ``u < N``: the contestant's door 0
   holds a prize iff ``u < m``. This is the exact marginal of placing m
   prizes uniformly over N doors; which *other* doors hold the remaining
   prizes never changes any outcome probability (only counts matter), so
   the placement is sampled through this sufficient statistic.
2. Host reveal.
   INFORMED: the host picks uniformly among the door subsets holding
   exactly r prizes. Every such subset removes the same counts (r prizes,
   k-r non-prizes) from the switch pool, so the choice is
   outcome-equivalent across subsets and consumes no draws.
   RANDOM: k sequential without-replacement draws over the N-1
   non-contestant doors (draw j hits a prize iff ``u < prizes left``),
   which is exactly a uniform k-subset marginalized to prize counts. If
   the number of revealed prizes differs from r the whole world is
   rejected and the trial redraws from step 1 (conditioning on the
   reveal); consecutive rejections are capped.
3. Switch target. One bounded draw ``t < N-k-1`` over the unopened
   non-contestant doors; switching wins iff ``t < m - r - stay_won``.

Both strategies are evaluated on the same world (common random numbers),
so a stay run and a switch run with the same seed see identical worlds,
and ``--strategy both`` costs one pass. RunSummary is a pure function of
(config, strategy, trials, master_seed) regardless of worker count or
backend.

Backends: a numba-compiled kernel (default when importable) and a
vectorized pure-numpy fallback, selected by the MONTYHALL_BACKEND
environment variable ("numba" or "numpy") or per call. Both are pinned
bit-identical to the pure-Python reference in the test suite.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import _kernels_numpy
from .core import HostModel, ProblemConfig, Strategy, validate
from .rng import MASK64, TrialStream

BACKEND_ENV = "MONTYHALL_BACKEND"
REJECTION_LIMIT = 1_000_000

try:
    from . import _kernels_numba

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - exercised only without numba
    _kernels_numba = None
    NUMBA_AVAILABLE = False


class RejectionLimitError(RuntimeError):
    """A trial failed to produce the required reveal too many times."""

    code = "REJECTION_LIMIT"


@dataclass(frozen=True)
class TrialRecord:
    """Outcome of one accepted world, under both strategies."""

    trial_index: int
    stay_won: bool
    switch_won: bool
    rejections_before_accept: int

    def won(self, strategy: Strategy) -> bool:
        return self.stay_won if strategy is Strategy.STAY else self.switch_won


@dataclass(frozen=True)
class RunSummary:
    config: ProblemConfig
    strategy: Strategy
    requested_trials: int
    accepted_trials: int
    rejected_trials: int
    wins: int
    master_seed: int

    @property
    def win_rate(self) -> float:
        return self.wins / self.accepted_trials

    @property
    def acceptance_rate(self) -> float:
        return self.accepted_trials / (self.accepted_trials + self.rejected_trials)


@dataclass(frozen=True)
class WorldSample:
    """Per-trial outcome arrays for one simulated batch."""

    config: ProblemConfig
    master_seed: int
    trials: int
    stay_won: np.ndarray  # uint8, 0/1
    switch_won: np.ndarray  # uint8, 0/1
    rejections: np.ndarray  # int64, rejected worlds before acceptance

    def wins(self, strategy: Strategy) -> int:
        arr = self.stay_won if strategy is Strategy.STAY else self.switch_won
        return int(arr.sum())

    @property
    def rejected_total(self) -> int:
        return int(self.rejections.sum())

    def records(self) -> Iterator[TrialRecord]:
        for i in range(self.trials):
            yield TrialRecord(
                trial_index=i,
                stay_won=bool(self.stay_won[i]),
                switch_won=bool(self.switch_won[i]),
                rejections_before_accept=int(self.rejections[i]),
            )

    def summary(self, strategy: Strategy) -> RunSummary:
        return RunSummary(
            config=self.config,
            strategy=strategy,
            requested_trials=self.trials,
            accepted_trials=self.trials,
            rejected_trials=self.rejected_total,
            wins=self.wins(strategy),
            master_seed=self.master_seed,
        )


def available_backends() -> tuple[str, ...]:
    return ("numba", "numpy") if NUMBA_AVAILABLE else ("numpy",)


def resolve_backend(backend: str | None = None) -> str:
    """Pick the kernel backend: explicit argument > env var > best available."""
    name = backend or os.environ.get(BACKEND_ENV, "").strip().lower() or None
    if name is None:
        return "numba" if NUMBA_AVAILABLE else "numpy"
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}; choose 'numba' or 'numpy'")
    if name == "numba" and not NUMBA_AVAILABLE:
        raise RuntimeError("numba backend requested but numba is not importable")
    return name


def simulate_trial_informed(config: ProblemConfig, stream: TrialStream) -> TrialRecord:
    """Reference single-trial simulation, informed host (never rejects)."""
    validate(config)
    if config.host is not HostModel.INFORMED:
        raise ValueError("config host must be informed")
    n, m, r = config.doors, config.prizes, config.revealed
    stay_won = stream.next_below(n) < m
    target = stream.next_below(config.switch_targets)
    switch_won = target < (m - r - stay_won)
    return TrialRecord(
        trial_index=stream.trial_index,
        stay_won=stay_won,
        switch_won=switch_won,
        rejections_before_accept=0,
    )


def simulate_trial_random(
    config: ProblemConfig, stream: TrialStream, rejection_limit: int = REJECTION_LIMIT
) -> TrialRecord:
    """Reference single-trial simulation, random host with rejection."""
    validate(config)
    if config.host is not HostModel.RANDOM:
        raise ValueError("config host must be random")
    n, m, k, r = config.doors, config.prizes, config.opened, config.revealed
    rejections = 0
    while True:
        stay_won = stream.next_below(n) < m
        avail_prizes = m - stay_won
        avail_doors = n - 1
        seen = 0
        for _ in range(k):
            if stream.next_below(avail_doors) < avail_prizes:
                seen += 1
                avail_prizes -= 1
            avail_doors -= 1
        if seen == r:
            break
        rejections += 1
        if rejections >= rejection_limit:
            raise RejectionLimitError(
                f"no acceptable world after {rejection_limit} rejections for "
                f"{config.describe()}"
            )
    target = stream.next_below(config.switch_targets)
    switch_won = target < (m - r - stay_won)
    return TrialRecord(
        trial_index=stream.trial_index,
        stay_won=stay_won,
        switch_won=switch_won,
        rejections_before_accept=rejections,
    )


def _chunk_bounds(trials: int, workers: int) -> list[tuple[int, int]]:
    workers = max(1, min(workers, trials))
    base, extra = divmod(trials, workers)
    bounds = []
    start = 0
    for i in range(workers):
        count = base + (1 if i < extra else 0)
        bounds.append((start, count))
        start += count
    return bounds


def simulate_worlds(
    config: ProblemConfig,
    trials: int,
    master_seed: int,
    *,
    workers: int = 1,
    backend: str | None = None,
    rejection_limit: int = REJECTION_LIMIT,
) -> WorldSample:
    """Run ``trials`` accepted trials and return per-trial outcome arrays.

    Results depend only on (config, trials, master_seed); ``workers`` and
    ``backend`` change speed, never output.
    """
    validate(config)
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if not 0 <= master_seed <= MASK64:
        raise ValueError("master_seed must fit in 64 unsigned bits")
    kernels = _kernels_numba if resolve_backend(backend) == "numba" else _kernels_numpy

    stay = np.zeros(trials, dtype=np.uint8)
    switch = np.zeros(trials, dtype=np.uint8)
    rejections = np.zeros(trials, dtype=np.int64)
    seed_u = np.uint64(master_seed)
    n, m, k, r = config.doors, config.prizes, config.opened, config.revealed

    def run_chunk(start: int, count: int) -> None:
        sl = slice(start, start + count)
        if config.host is HostModel.INFORMED:
            kernels.informed_kernel(seed_u, start, count, n, m, k, r, stay[sl], switch[sl])
        else:
            kernels.random_kernel(
                seed_u, start, count, n, m, k, r, rejection_limit,
                stay[sl], switch[sl], rejections[sl],
            )

    try:
        bounds = _chunk_bounds(trials, workers)
        if len(bounds) == 1:
            run_chunk(*bounds[0])
        else:
            with ThreadPoolExecutor(max_workers=len(bounds)) as pool:
                for future in [pool.submit(run_chunk, s, c) for s, c in bounds]:
                    future.result()
    except RuntimeError as exc:
        if "rejection limit" in str(exc):
            raise RejectionLimitError(
                f"no acceptable world after {rejection_limit} rejections for "
                f"{config.describe()}"
            ) from exc
        raise

    return WorldSample(
        config=config,
        master_seed=master_seed,
        trials=trials,
        stay_won=stay,
        switch_won=switch,
        rejections=rejections,
    )


def run_batch(
    config: ProblemConfig,
    strategy: Strategy,
    trials: int,
    master_seed: int,
    *,
    workers: int = 1,
    backend: str | None = None,
    rejection_limit: int = REJECTION_LIMIT,
) -> RunSummary:
    """Simulate and summarize one (config, strategy) batch."""
    sample = simulate_worlds(
        config, trials, master_seed,
        workers=workers, backend=backend, rejection_limit=rejection_limit,
    )
    return sample.summary(strategy)
