"""numba-compiled hot kernels: one tight scalar loop per trial.

Arithmetic mirrors rng.TrialStream bit for bit. All 64-bit state math is
kept in uint64; counts and loop bookkeeping stay in int64 to avoid
accidental unsigned/signed promotion to float.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .rng import GOLDEN_GAMMA, MIX_MULT_1, MIX_MULT_2, TRIAL_STRIDE

_G = np.uint64(GOLDEN_GAMMA)
_M1 = np.uint64(MIX_MULT_1)
_M2 = np.uint64(MIX_MULT_2)
_STRIDE = np.uint64(TRIAL_STRIDE)
_S30 = np.uint64(30)
_S27 = np.uint64(27)
_S31 = np.uint64(31)
_ONE = np.uint64(1)


@njit(cache=True, nogil=True, inline="always")
def _mix64(z):
    z = (z ^ (z >> _S30)) * _M1
    z = (z ^ (z >> _S27)) * _M2
    return z ^ (z >> _S31)


@njit(cache=True, nogil=True)
def informed_kernel(master_seed, start, count, doors, prizes, opened, revealed,
                    stay_out, switch_out):
    n_u = np.uint64(doors)
    m_u = np.uint64(prizes)
    targets_u = np.uint64(doors - opened - 1)
    left_u = np.uint64(prizes - revealed)
    for t in range(count):
        s = _mix64(master_seed ^ (np.uint64(start + t + 1) * _STRIDE))
        s = s + _G
        door0 = _ONE if (_mix64(s) % n_u) < m_u else np.uint64(0)
        s = s + _G
        target = _mix64(s) % targets_u
        stay_out[t] = door0
        switch_out[t] = 1 if target < (left_u - door0) else 0


@njit(cache=True, nogil=True)
def random_kernel(master_seed, start, count, doors, prizes, opened, revealed,
                  rejection_limit, stay_out, switch_out, rejections_out):
    n_u = np.uint64(doors)
    m_u = np.uint64(prizes)
    targets_u = np.uint64(doors - opened - 1)
    left_u = np.uint64(prizes - revealed)
    for t in range(count):
        s = _mix64(master_seed ^ (np.uint64(start + t + 1) * _STRIDE))
        rejections = 0
        door0 = np.uint64(0)
        while True:
            s = s + _G
            door0 = _ONE if (_mix64(s) % n_u) < m_u else np.uint64(0)
            avail_prizes = m_u - door0
            avail_doors = doors - 1
            seen = 0
            for _ in range(opened):
                s = s + _G
                if (_mix64(s) % np.uint64(avail_doors)) < avail_prizes:
                    seen += 1
                    avail_prizes = avail_prizes - _ONE
                avail_doors -= 1
            if seen == revealed:
                break
            rejections += 1
            if rejections >= rejection_limit:
                raise RuntimeError("rejection limit exceeded")
        s = s + _G
        target = _mix64(s) % targets_u
        stay_out[t] = door0
        switch_out[t] = 1 if target < (left_u - door0) else 0
        rejections_out[t] = rejections
