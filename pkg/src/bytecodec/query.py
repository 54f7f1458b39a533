"""Seek and select directly on compressed (normally delta-coded) streams.

Both operations walk the stream from the front, keeping a running prefix sum,
and stop as soon as the answer is known. Nothing proportional to the array
length is allocated. varint-G8IU is not supported.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np
from numba import njit

from .errors import E_OVERFLOW, E_OVERLONG, E_TRUNCATED, UnsupportedCodecError, raise_for_status
from .model import CodecId, EncodedBuffer
from .delta import prefix4
from .streamvbyte import _LENGTH, gather_lane

MASK32 = 0xFFFFFFFF
SEEK = 0
SELECT = 1
NOT_FOUND = 1


class SeekResult(NamedTuple):
    index: int
    value: int


@njit(cache=True, inline="always")
def _hit(mode, key, idx, value):
    if mode == SEEK:
        return value >= key
    return idx == key


@njit(cache=True)
def _scan_vbyte(data, count, delta, mode, key):
    n = data.shape[0]
    acc = np.int64(0)
    p = 0
    for i in range(count):
        v = np.int64(0)
        j = 0
        while True:
            if j == 5:
                return E_OVERLONG, 0, 0
            if p >= n:
                return E_TRUNCATED, 0, 0
            b = np.int64(data[p])
            p += 1
            v |= (b & 0x7F) << (7 * j)
            j += 1
            if b < 128:
                break
        if v > MASK32:
            return E_OVERFLOW, 0, 0
        acc = (acc + v) & MASK32 if delta else v
        if _hit(mode, key, i, acc):
            return 0, i, acc
    return NOT_FOUND, 0, 0


@njit(cache=True)
def _scan_gb(data, count, delta, mode, key):
    n = data.shape[0]
    acc = np.int64(0)
    p = 0
    i = 0
    while i < count:
        if p >= n:
            return E_TRUNCATED, 0, 0
        c = data[p]
        p += 1
        for f in range(min(4, count - i)):
            L = ((c >> (2 * f)) & 3) + 1
            if p + L > n:
                return E_TRUNCATED, 0, 0
            v = np.int64(0)
            for j in range(L):
                v |= np.int64(data[p + j]) << (8 * j)
            p += L
            acc = (acc + v) & MASK32 if delta else v
            if _hit(mode, key, i + f, acc):
                return 0, i + f, acc
        i += 4
    return NOT_FOUND, 0, 0


@njit(cache=True)
def _scan_svb(data, count, delta, mode, key):
    lengths = _LENGTH
    n = data.shape[0]
    ctrl_len = (count + 3) // 4
    if n < ctrl_len:
        return E_TRUNCATED, 0, 0
    acc = np.int64(0)
    d = ctrl_len
    full = count // 4
    k = 0
    while k < full and d + 16 <= n:
        c = data[k]
        x0 = gather_lane(data, d, c, 0)
        x1 = gather_lane(data, d, c, 1)
        x2 = gather_lane(data, d, c, 2)
        x3 = gather_lane(data, d, c, 3)
        if delta:
            x0, x1, x2, x3 = prefix4(x0, x1, x2, x3, acc)
            acc = x3
        i = 4 * k
        if _hit(mode, key, i, x0):
            return 0, i, x0
        if _hit(mode, key, i + 1, x1):
            return 0, i + 1, x1
        if _hit(mode, key, i + 2, x2):
            return 0, i + 2, x2
        if _hit(mode, key, i + 3, x3):
            return 0, i + 3, x3
        d += lengths[c]
        k += 1
    # scalar tail
    for i in range(4 * k, count):
        c = data[i // 4]
        L = ((c >> (2 * (i % 4))) & 3) + 1
        if d + L > n:
            return E_TRUNCATED, 0, 0
        v = np.int64(0)
        for j in range(L):
            v |= np.int64(data[d + j]) << (8 * j)
        d += L
        acc = (acc + v) & MASK32 if delta else v
        if _hit(mode, key, i, acc):
            return 0, i, acc
    return NOT_FOUND, 0, 0


SCANNERS = {
    CodecId.VBYTE: _scan_vbyte,
    CodecId.VARINT_GB: _scan_gb,
    CodecId.STREAM_VBYTE: _scan_svb,
}


def _scanner(buffer: EncodedBuffer):
    try:
        return SCANNERS[buffer.codec]
    except KeyError:
        raise UnsupportedCodecError(
            f"seek/select are not available for {buffer.codec.name}"
        ) from None


def seek(buffer: EncodedBuffer, target: int) -> SeekResult | None:
    """First ``(index, value)`` with ``value >= target``, or ``None``."""
    scan = _scanner(buffer)
    if target < 0:
        target = 0
    if target > MASK32:
        return None
    data = np.frombuffer(buffer.data, dtype=np.uint8)
    status, idx, value = scan(data, buffer.count, buffer.delta, SEEK, int(target))
    raise_for_status(status, buffer.codec.name)
    if status == NOT_FOUND:
        return None
    return SeekResult(int(idx), int(value))


def select(buffer: EncodedBuffer, index: int) -> int:
    """Logical value at position ``index``."""
    scan = _scanner(buffer)
    if not 0 <= index < buffer.count:
        raise IndexError(f"index {index} out of range for {buffer.count} integers")
    data = np.frombuffer(buffer.data, dtype=np.uint8)
    status, _, value = scan(data, buffer.count, buffer.delta, SELECT, int(index))
    raise_for_status(status, buffer.codec.name)
    if status == NOT_FOUND:
        raise IndexError(index)
    return int(value)
