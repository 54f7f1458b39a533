"""varint-G8IU: fixed 9-byte blocks, one control byte plus eight data bytes.

Bit ``j`` of the control byte (bit 0 least significant) describes data byte
``j``: 0 means the byte completes an integer, 1 means the integer continues
or the byte is waste. Trailing ones mark waste, which the encoder writes as
0x00. Packing is greedy: an integer that does not fit in what is left of the
current block starts a new one.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .errors import E_BLOCK, E_OVERLONG, E_TRAILING, E_TRUNCATED, OK, raise_for_status
from .model import CodecId, EncodedBuffer, as_u32

BLOCK = 9
DATA_BYTES = 8


@njit(cache=True)
def _encode_kernel(values, out):
    n = values.shape[0]
    p = 0  # start of current block
    pos = 0  # data bytes used in current block
    ctrl = 0
    for i in range(n):
        v = np.int64(values[i])
        L = 1 + (v >= 256) + (v >= 65536) + (v >= 16777216)
        if pos + L > DATA_BYTES:
            for j in range(pos, DATA_BYTES):
                ctrl |= 1 << j
                out[p + 1 + j] = 0
            out[p] = ctrl
            p += BLOCK
            pos = 0
            ctrl = 0
        for j in range(L):
            out[p + 1 + pos + j] = (v >> (8 * j)) & 0xFF
            if j < L - 1:
                ctrl |= 1 << (pos + j)
        pos += L
    if pos > 0:
        for j in range(pos, DATA_BYTES):
            ctrl |= 1 << j
            out[p + 1 + j] = 0
        out[p] = ctrl
        p += BLOCK
    return p


@njit(cache=True)
def decode_kernel(data, count, out, delta, base):
    n = data.shape[0]
    if n % BLOCK != 0:
        return E_BLOCK
    acc = np.int64(base)
    i = 0
    p = 0
    while i < count:
        if p + BLOCK > n:
            return E_TRUNCATED
        ctrl = data[p]
        v = np.int64(0)
        L = 0
        for j in range(DATA_BYTES):
            if i == count:
                # only waste may follow the last integer
                if (ctrl >> j) & 1 == 0:
                    return E_BLOCK
                continue
            v |= np.int64(data[p + 1 + j]) << (8 * L)
            L += 1
            if (ctrl >> j) & 1 == 0:
                if L > 4:
                    return E_OVERLONG
                if delta:
                    acc += v
                    out[i] = acc
                else:
                    out[i] = v
                i += 1
                v = 0
                L = 0
        p += BLOCK
    if p != n:
        return E_TRAILING
    return OK


@njit(cache=True)
def _scan_kernel(data, count):
    n = data.shape[0]
    i = 0
    p = 0
    while i < count:
        if p + BLOCK > n:
            return -1
        ctrl = data[p]
        for j in range(DATA_BYTES):
            if (ctrl >> j) & 1 == 0:
                i += 1
        p += BLOCK
    return p


def encode_bytes(values) -> bytes:
    arr = as_u32(values)
    # every block but the last holds at least two integers
    bound = BLOCK * ((arr.size + 1) // 2 + 1)
    out = np.empty(bound, dtype=np.uint8)
    size = _encode_kernel(arr, out)
    return out[:size].tobytes()


def decode_bytes(data, count: int, *, delta: bool = False) -> np.ndarray:
    buf = np.frombuffer(bytes(data), dtype=np.uint8)
    out = np.empty(count, dtype=np.uint32)
    raise_for_status(decode_kernel(buf, count, out, delta, 0), "varint-G8IU")
    return out


def g8_encode(values, *, delta: bool = False) -> EncodedBuffer:
    arr = as_u32(values)
    if delta:
        from .delta import delta_encode

        arr = delta_encode(arr)
    return EncodedBuffer(CodecId.VARINT_G8IU, arr.size, delta, encode_bytes(arr))


def g8_decode(buffer: EncodedBuffer) -> np.ndarray:
    if buffer.codec != CodecId.VARINT_G8IU:
        raise ValueError(f"expected a varint-G8IU buffer, got {buffer.codec.name}")
    return decode_bytes(buffer.data, buffer.count, delta=buffer.delta)


def payload_length(data, count: int) -> int:
    """Whole blocks needed to reach ``count`` completed integers; -1 if short."""
    return int(_scan_kernel(np.frombuffer(bytes(data), dtype=np.uint8), count))
