"""Differential coding with modulo-2**32 wraparound.

Deltas are taken against an implicit base of zero, so ``delta_encode`` is
total on any input (sorted or not) and ``prefix_sum`` inverts it exactly.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .model import as_u32

MASK32 = 0xFFFFFFFF


@njit(cache=True)
def _delta_kernel(values, out):
    prev = np.uint32(0)
    for i in range(values.shape[0]):
        cur = values[i]
        out[i] = cur - prev
        prev = cur


@njit(cache=True, inline="always")
def prefix4_raw(d0, d1, d2, d3, base):
    """4-lane prefix sum: add the vector shifted by one lane, then by two lanes,
    then broadcast-add the running base.

    Lanes are left unreduced; storing them into a uint32 array truncates to
    the mod-2**32 result. Inputs must be below 2**32.
    """
    # shift by one lane
    s1 = d1 + d0
    s2 = d2 + d1
    s3 = d3 + d2
    # shift by two lanes
    t2 = s2 + d0
    t3 = s3 + s1
    return d0 + base, s1 + base, t2 + base, t3 + base


@njit(cache=True, inline="always")
def prefix4(d0, d1, d2, d3, base):
    r0, r1, r2, r3 = prefix4_raw(d0, d1, d2, d3, base)
    return r0 & MASK32, r1 & MASK32, r2 & MASK32, r3 & MASK32


@njit(cache=True)
def _prefix_scalar_kernel(deltas, base, out):
    acc = np.int64(base)
    for i in range(deltas.shape[0]):
        acc = (acc + deltas[i]) & MASK32
        out[i] = acc


@njit(cache=True)
def _prefix_block_kernel(deltas, base, out):
    n = deltas.shape[0]
    acc = np.int64(base)
    i = 0
    while i + 4 <= n:
        r0, r1, r2, r3 = prefix4_raw(
            np.int64(deltas[i]), np.int64(deltas[i + 1]),
            np.int64(deltas[i + 2]), np.int64(deltas[i + 3]), acc,
        )
        out[i] = r0
        out[i + 1] = r1
        out[i + 2] = r2
        out[i + 3] = r3
        acc = r3 & MASK32
        i += 4
    while i < n:
        acc = (acc + deltas[i]) & MASK32
        out[i] = acc
        i += 1


def delta_encode(values) -> np.ndarray:
    """Successive differences ``x[0], x[1]-x[0], ...`` modulo 2**32."""
    arr = as_u32(values)
    out = np.empty_like(arr)
    _delta_kernel(arr, out)
    return out


def prefix_sum(deltas, base: int = 0, *, blocked: bool = True) -> np.ndarray:
    """Running total of ``deltas`` starting from ``base``, modulo 2**32.

    ``blocked`` selects the 4-lane shift/add formulation; the scalar loop is
    kept as a reference and both always agree.
    """
    arr = as_u32(deltas)
    out = np.empty_like(arr)
    base = int(base) & MASK32
    if blocked:
        _prefix_block_kernel(arr, base, out)
    else:
        _prefix_scalar_kernel(arr, base, out)
    return out


def prefix_sum_block(lanes, base: int = 0) -> tuple[int, int, int, int]:
    """Apply the 4-lane step to a single block of four deltas."""
    d = [int(v) & MASK32 for v in lanes]
    if len(d) != 4:
        raise ValueError("a block holds exactly four lanes")
    return tuple(int(v) for v in prefix4(d[0], d[1], d[2], d[3], int(base) & MASK32))
