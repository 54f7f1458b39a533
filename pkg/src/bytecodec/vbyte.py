"""VByte: seven data bits per byte, high bit set on every byte but the last.

Two decoders are provided. :func:`vbyte_decode` walks the stream one byte at
a time. :func:`vbyte_decode_accelerated` works on 16-byte windows: it folds
the continuation bits of the window into an integer mask and uses a
mask-indexed table of byte-gather patterns to expand whole runs at once.
Anything unusual (a run that does not fit the window, a possible overflow,
fewer than 16 bytes left) is handed to the scalar decoder at a run boundary,
so both decoders agree on outputs and on error classification.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .errors import (
    E_OVERFLOW,
    E_OVERLONG,
    E_TRAILING,
    E_TRUNCATED,
    OK,
    raise_for_status,
)
from .model import as_u32, vbyte_lengths

MASK32 = 0xFFFFFFFF
MAX_RUN = 5

WINDOW = 16
MASK_BITS = 12  # table covers the first 12 bytes of each window
FILL = WINDOW  # gather index that reads a zero byte


def _build_mask_tables():
    n = 1 << MASK_BITS
    counts = np.zeros(n, dtype=np.uint8)
    ends = np.zeros((n, MASK_BITS), dtype=np.uint8)
    gather = np.full((n, MASK_BITS, MAX_RUN), FILL, dtype=np.uint8)
    for mask in range(n):
        start = 0
        k = 0
        for j in range(MASK_BITS):
            if j - start + 1 > MAX_RUN:
                break  # overlong run; leave it for the scalar path
            if not (mask >> j) & 1:
                for t in range(j - start + 1):
                    gather[mask, k, t] = start + t
                ends[mask, k] = j + 1
                k += 1
                start = j + 1
        counts[mask] = k
    counts.setflags(write=False)
    ends.setflags(write=False)
    gather.setflags(write=False)
    return counts, ends, gather


MASK_COUNTS, MASK_ENDS, MASK_GATHER = _build_mask_tables()


@njit(cache=True)
def _encode_kernel(values, out):
    p = 0
    for i in range(values.shape[0]):
        v = np.int64(values[i])
        while v >= 128:
            out[p] = (v & 0x7F) | 0x80
            v >>= 7
            p += 1
        out[p] = v
        p += 1
    return p


@njit(cache=True)
def decode_scalar_from(data, p, i, count, out, delta, acc):
    """Decode integers ``i..count-1`` starting at byte ``p``. Returns a status."""
    n = data.shape[0]
    while i < count:
        v = np.int64(0)
        shift = 0
        j = 0
        while True:
            if j == MAX_RUN:
                return E_OVERLONG
            if p >= n:
                return E_TRUNCATED
            b = np.int64(data[p])
            p += 1
            v |= (b & 0x7F) << shift
            if b < 128:
                break
            shift += 7
            j += 1
        if v > MASK32:
            return E_OVERFLOW
        if delta:
            acc = (acc + v) & MASK32
            out[i] = acc
        else:
            out[i] = v
        i += 1
    if p != n:
        return E_TRAILING
    return OK


@njit(cache=True)
def decode_kernel(data, count, out, delta, base):
    return decode_scalar_from(data, 0, 0, count, out, delta, np.int64(base))


@njit(cache=True)
def decode_masked_kernel(data, count, out, delta, base):
    counts = MASK_COUNTS
    ends = MASK_ENDS
    gather = MASK_GATHER
    n = data.shape[0]
    scratch = np.zeros(WINDOW + 1, dtype=np.uint8)
    acc = np.int64(base)
    p = 0
    i = 0
    while p + WINDOW <= n and i < count:
        mask = 0
        for j in range(WINDOW):
            b = data[p + j]
            scratch[j] = b
            mask |= (b >> 7) << j
        if mask == 0 and count - i >= WINDOW:
            for j in range(WINDOW):
                if delta:
                    acc = (acc + scratch[j]) & MASK32
                    out[i + j] = acc
                else:
                    out[i + j] = scratch[j]
            i += WINDOW
            p += WINDOW
            continue
        m = mask & ((1 << MASK_BITS) - 1)
        k = np.int64(counts[m])
        if k == 0:
            break
        if k > count - i:
            k = count - i
        bad = False
        for r in range(k):
            v = np.int64(0)
            for t in range(MAX_RUN):
                v |= np.int64(scratch[gather[m, r, t]] & 0x7F) << (7 * t)
            if v > MASK32:
                # hand over at the start of the offending run
                if r > 0:
                    p += ends[m, r - 1]
                i += r
                bad = True
                break
            if delta:
                acc = (acc + v) & MASK32
                out[i + r] = acc
            else:
                out[i + r] = v
        if bad:
            break
        p += ends[m, k - 1]
        i += k
    return decode_scalar_from(data, p, i, count, out, delta, acc)


def _as_bytes_array(stream) -> np.ndarray:
    if isinstance(stream, np.ndarray):
        return np.ascontiguousarray(stream, dtype=np.uint8)
    return np.frombuffer(bytes(stream), dtype=np.uint8)


def vbyte_encode(values) -> bytes:
    """Encode 32-bit unsigned integers as a VByte byte string."""
    arr = as_u32(values)
    out = np.empty(int(vbyte_lengths(arr).sum(dtype=np.int64)), dtype=np.uint8)
    _encode_kernel(arr, out)
    return out.tobytes()


def vbyte_decode(stream, count: int, *, delta: bool = False) -> np.ndarray:
    """Decode exactly ``count`` integers; the stream must hold nothing else.

    With ``delta`` the decoded values are prefix-summed on the fly.
    """
    data = _as_bytes_array(stream)
    out = np.empty(count, dtype=np.uint32)
    raise_for_status(decode_kernel(data, count, out, delta, 0), "vbyte")
    return out


def vbyte_decode_accelerated(stream, count: int, *, delta: bool = False) -> np.ndarray:
    """Same contract as :func:`vbyte_decode`, using the mask-table decoder."""
    data = _as_bytes_array(stream)
    out = np.empty(count, dtype=np.uint32)
    status = decode_masked_kernel(data, count, out, delta, 0)
    raise_for_status(status, "vbyte")
    return out


def vbyte_payload_length(data, count: int) -> int:
    """Bytes spanned by the first ``count`` runs, or -1 if the stream is short."""
    arr = _as_bytes_array(data)
    return int(_scan_runs(arr, count))


@njit(cache=True)
def _scan_runs(data, count):
    n = data.shape[0]
    p = 0
    for _ in range(count):
        while True:
            if p >= n:
                return -1
            b = data[p]
            p += 1
            if b < 128:
                break
    return p
