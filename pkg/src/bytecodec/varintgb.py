"""varint-GB: blocks of four integers behind one control byte.

The control byte holds four 2-bit fields (integer 0 in the low bits), each
storing ``byte_length - 1``. Data bytes are little-endian and follow their
control byte immediately. A final block with fewer than four integers keeps
a full control byte whose unused fields are zero.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .errors import E_BLOCK, E_TRAILING, E_TRUNCATED, OK, raise_for_status
from .model import CodecId, EncodedBuffer, as_u32, byte_lengths


@njit(cache=True)
def _encode_kernel(values, out):
    n = values.shape[0]
    p = 0
    i = 0
    while i < n:
        ctrl_pos = p
        p += 1
        c = 0
        for f in range(min(4, n - i)):
            v = np.int64(values[i + f])
            L = 1 + (v >= 256) + (v >= 65536) + (v >= 16777216)
            c |= (L - 1) << (2 * f)
            for j in range(L):
                out[p] = (v >> (8 * j)) & 0xFF
                p += 1
        out[ctrl_pos] = c
        i += 4
    return p


@njit(cache=True)
def decode_kernel_impl(data, count, out, delta, base, fast_path):
    n = data.shape[0]
    acc = np.int64(base)
    p = 0
    i = 0
    while i < count:
        if p >= n:
            return E_TRUNCATED
        c = data[p]
        p += 1
        if fast_path and c == 0 and count - i >= 4 and p + 4 <= n:
            for f in range(4):
                if delta:
                    acc += data[p + f]
                    out[i + f] = acc
                else:
                    out[i + f] = data[p + f]
            p += 4
            i += 4
            continue
        fields = min(4, count - i)
        if (c >> (2 * fields)) != 0:
            return E_BLOCK  # unused fields of a partial block must be zero
        for f in range(fields):
            L = ((c >> (2 * f)) & 3) + 1
            if p + L > n:
                return E_TRUNCATED
            v = np.int64(0)
            for j in range(L):
                v |= np.int64(data[p + j]) << (8 * j)
            p += L
            if delta:
                acc += v
                out[i + f] = acc
            else:
                out[i + f] = v
        i += fields
    if p != n:
        return E_TRAILING
    return OK


@njit(cache=True)
def decode_kernel(data, count, out, delta, base):
    return decode_kernel_impl(data, count, out, delta, base, True)


@njit(cache=True)
def _scan_kernel(data, count):
    n = data.shape[0]
    p = 0
    i = 0
    while i < count:
        if p >= n:
            return -1
        c = data[p]
        p += 1
        for f in range(min(4, count - i)):
            p += ((c >> (2 * f)) & 3) + 1
        i += 4
    return p


def encoded_size(values) -> int:
    arr = as_u32(values)
    return (arr.size + 3) // 4 + int(byte_lengths(arr).sum(dtype=np.int64))


def encode_bytes(values) -> bytes:
    arr = as_u32(values)
    out = np.empty(encoded_size(arr), dtype=np.uint8)
    _encode_kernel(arr, out)
    return out.tobytes()


def decode_bytes(data, count: int, *, delta: bool = False, fast_path: bool = True) -> np.ndarray:
    """Decode ``count`` integers from a raw varint-GB byte string.

    ``fast_path`` toggles the all-small-block shortcut (control byte 0x00);
    the result is identical either way.
    """
    buf = np.frombuffer(bytes(data), dtype=np.uint8)
    out = np.empty(count, dtype=np.uint32)
    raise_for_status(decode_kernel_impl(buf, count, out, delta, 0, fast_path), "varint-GB")
    return out


def gb_encode(values, *, delta: bool = False) -> EncodedBuffer:
    arr = as_u32(values)
    if delta:
        from .delta import delta_encode

        arr = delta_encode(arr)
    return EncodedBuffer(CodecId.VARINT_GB, arr.size, delta, encode_bytes(arr))


def gb_decode(buffer: EncodedBuffer) -> np.ndarray:
    if buffer.codec != CodecId.VARINT_GB:
        raise ValueError(f"expected a varint-GB buffer, got {buffer.codec.name}")
    return decode_bytes(buffer.data, buffer.count, delta=buffer.delta)


def payload_length(data, count: int) -> int:
    """Bytes implied by the control bytes for ``count`` integers; -1 if short."""
    return int(_scan_kernel(np.frombuffer(bytes(data), dtype=np.uint8), count))
