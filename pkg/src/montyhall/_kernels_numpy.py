"""Vectorized numpy fallback kernels.

Same per-trial arithmetic as the numba kernels and the rng.TrialStream
reference, carried out on uint64 arrays (one lane per trial). The
rejection loop keeps an index array of still-pending trials and redraws
only those; per-trial substreams advance independently, so results are
bit-identical to the scalar path.
"""

from __future__ import annotations

import numpy as np

from .rng import GOLDEN_GAMMA, MIX_MULT_1, MIX_MULT_2, TRIAL_STRIDE

_G = np.uint64(GOLDEN_GAMMA)
_M1 = np.uint64(MIX_MULT_1)
_M2 = np.uint64(MIX_MULT_2)
_STRIDE = np.uint64(TRIAL_STRIDE)
_S30 = np.uint64(30)
_S27 = np.uint64(27)
_S31 = np.uint64(31)


def _mix64(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> _S30)) * _M1
    z = (z ^ (z >> _S27)) * _M2
    return z ^ (z >> _S31)


def _initial_states(master_seed: int, start: int, count: int) -> np.ndarray:
    idx = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    return _mix64(np.uint64(master_seed) ^ (idx * _STRIDE))


def informed_kernel(master_seed, start, count, doors, prizes, opened, revealed,
                    stay_out, switch_out):
    state = _initial_states(master_seed, start, count)
    n_u = np.uint64(doors)
    m_u = np.uint64(prizes)
    targets_u = np.uint64(doors - opened - 1)
    left_u = np.uint64(prizes - revealed)

    state += _G
    door0 = (_mix64(state) % n_u) < m_u
    state += _G
    target = _mix64(state) % targets_u
    switch_win = target < (left_u - door0.astype(np.uint64))

    stay_out[:] = door0
    switch_out[:] = switch_win


def random_kernel(master_seed, start, count, doors, prizes, opened, revealed,
                  rejection_limit, stay_out, switch_out, rejections_out):
    state = _initial_states(master_seed, start, count)
    n_u = np.uint64(doors)
    m_u = np.uint64(prizes)
    targets_u = np.uint64(doors - opened - 1)
    left_u = np.uint64(prizes - revealed)

    door0 = np.zeros(count, dtype=bool)
    rejections = np.zeros(count, dtype=np.int64)
    pending = np.arange(count)

    while pending.size:
        st = state[pending]
        st += _G
        d0 = (_mix64(st) % n_u) < m_u
        avail_prizes = m_u - d0.astype(np.uint64)
        seen = np.zeros(pending.size, dtype=np.int64)
        avail_doors = doors - 1
        for _ in range(opened):
            st += _G
            hit = (_mix64(st) % np.uint64(avail_doors)) < avail_prizes
            seen += hit
            avail_prizes -= hit.astype(np.uint64)
            avail_doors -= 1
        state[pending] = st

        accepted = seen == revealed
        door0[pending[accepted]] = d0[accepted]
        pending = pending[~accepted]
        rejections[pending] += 1
        if pending.size and rejections[pending].max() >= rejection_limit:
            raise RuntimeError("rejection limit exceeded")

    state += _G
    target = _mix64(state) % targets_u
    switch_win = target < (left_u - door0.astype(np.uint64))

    stay_out[:] = door0
    switch_out[:] = switch_win
    rejections_out[:] = rejections
