"""Stream VByte: varint-GB with all control bytes gathered in front.

Layout for ``N`` integers::

    [ceil(N/4) control bytes][sum of byte lengths data bytes]

Control byte ``k`` describes integers ``4k..4k+3`` (integer ``4k`` in the low
two bits). Because control byte ``k`` always sits at offset ``k``, the
decoder never waits on the data stream to find the next control byte.

Full blocks are decoded with two 256-entry tables: the number of data bytes
a control byte consumes, and a 16-byte gather pattern that spreads the
packed data bytes over four little-endian 32-bit lanes. Four zero control
bytes in a row take a shortcut (16 one-byte integers). Near the end of the
data stream, where a 16-byte load would run past the buffer, a scalar
routine takes over.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .delta import prefix4_raw
from .errors import (
    E_BLOCK,
    E_TRAILING,
    E_TRUNCATED,
    MalformedInputError,
    OK,
    raise_for_status,
)
from .model import CodecId, EncodedBuffer, as_u32, byte_length, byte_lengths

FILL = 16  # gather index that produces a zero byte


@dataclass(frozen=True)
class DecodeTables:
    length: np.ndarray  # uint8[256], data bytes per control byte (4..16)
    shuffle: np.ndarray  # uint8[256, 16], source byte per output byte or FILL
    # The same permutation in 32-bit form: each lane is a little-endian load at
    # lane_offset, ANDed with lane_mask. Derived from ``shuffle``.
    lane_offset: np.ndarray  # int64[256, 4]
    lane_mask: np.ndarray  # int64[256, 4]


def build_tables() -> DecodeTables:
    length = np.zeros(256, dtype=np.uint8)
    shuffle = np.full((256, 16), FILL, dtype=np.uint8)
    for c in range(256):
        src = 0
        for lane in range(4):
            L = ((c >> (2 * lane)) & 3) + 1
            for j in range(L):
                shuffle[c, 4 * lane + j] = src + j
            src += L
        length[c] = src
    lane_offset = shuffle[:, 0::4].astype(np.int64)
    lane_mask = np.zeros((256, 4), dtype=np.int64)
    for j in range(4):
        lane_mask |= (shuffle[:, j::4] != FILL).astype(np.int64) * (0xFF << (8 * j))
    for t in (length, shuffle, lane_offset, lane_mask):
        t.setflags(write=False)
    return DecodeTables(length, shuffle, lane_offset, lane_mask)


TABLES = build_tables()
_LENGTH = TABLES.length
_LANE_OFFSET = TABLES.lane_offset
_LANE_MASK = TABLES.lane_mask


def control_stream_length(count: int) -> int:
    return (count + 3) // 4


@njit(cache=True)
def _encode_kernel(values, out, ctrl_len):
    n = values.shape[0]
    d = ctrl_len
    for i in range(n):
        v = np.int64(values[i])
        L = 1 + (v >= 256) + (v >= 65536) + (v >= 16777216)
        if i % 4 == 0:
            out[i // 4] = 0
        out[i // 4] |= (L - 1) << (2 * (i % 4))
        for j in range(L):
            out[d + j] = (v >> (8 * j)) & 0xFF
        d += L
    return d


@njit(cache=True, inline="always")
def _load32(data, p):
    return (
        np.int64(data[p])
        | (np.int64(data[p + 1]) << 8)
        | (np.int64(data[p + 2]) << 16)
        | (np.int64(data[p + 3]) << 24)
    )


@njit(cache=True, inline="always")
def gather_lane(data, d, c, lane):
    """Lane ``lane`` of the block whose 16-byte window starts at ``data[d]``."""
    return _load32(data, d + _LANE_OFFSET[c, lane]) & _LANE_MASK[c, lane]


@njit(cache=True)
def decode_kernel(data, count, out, delta, base):
    lengths = _LENGTH
    n = data.shape[0]
    ctrl_len = (count + 3) // 4
    if n < ctrl_len:
        return E_TRUNCATED
    acc = np.int64(base)
    d = ctrl_len
    full = count // 4
    k = 0
    while k < full:
        if (
            k + 4 <= full
            and d + 16 <= n
            and data[k] == 0
            and data[k + 1] == 0
            and data[k + 2] == 0
            and data[k + 3] == 0
        ):
            o = 4 * k
            if delta:
                for q in range(0, 16, 4):
                    r0, r1, r2, r3 = prefix4_raw(
                        np.int64(data[d + q]), np.int64(data[d + q + 1]),
                        np.int64(data[d + q + 2]), np.int64(data[d + q + 3]), acc,
                    )
                    out[o + q] = r0
                    out[o + q + 1] = r1
                    out[o + q + 2] = r2
                    out[o + q + 3] = r3
                    acc = r3 & 0xFFFFFFFF
            else:
                for q in range(16):
                    out[o + q] = data[d + q]
            d += 16
            k += 4
            continue
        if d + 16 > n:
            break
        c = data[k]
        x0 = gather_lane(data, d, c, 0)
        x1 = gather_lane(data, d, c, 1)
        x2 = gather_lane(data, d, c, 2)
        x3 = gather_lane(data, d, c, 3)
        o = 4 * k
        if delta:
            x0, x1, x2, x3 = prefix4_raw(x0, x1, x2, x3, acc)
            acc = x3 & 0xFFFFFFFF
        out[o] = x0
        out[o + 1] = x1
        out[o + 2] = x2
        out[o + 3] = x3
        d += lengths[c]
        k += 1
    # scalar tail: remaining full blocks near the buffer end and the partial block
    i = 4 * k
    while i < count:
        c = data[i // 4]
        f = i % 4
        if f == 0 and count - i < 4 and (c >> (2 * (count - i))) != 0:
            return E_BLOCK  # unused fields of the final control byte must be zero
        L = ((c >> (2 * f)) & 3) + 1
        if d + L > n:
            return E_TRUNCATED
        v = np.int64(0)
        for j in range(L):
            v |= np.int64(data[d + j]) << (8 * j)
        d += L
        if delta:
            acc = (acc + v) & 0xFFFFFFFF
            out[i] = acc
        else:
            out[i] = v
        i += 1
    if d != n:
        return E_TRAILING
    return OK


@njit(cache=True)
def _data_length_kernel(data, count, lengths):
    total = 0
    full = count // 4
    for k in range(full):
        total += lengths[data[k]]
    rem = count - 4 * full
    if rem:
        c = data[full]
        for f in range(rem):
            total += ((c >> (2 * f)) & 3) + 1
    return total


@njit(cache=True)
def _block_offsets_kernel(data, nblocks, ctrl_len, lengths, offsets):
    d = ctrl_len
    for k in range(nblocks):
        offsets[k] = d
        d += lengths[data[k]]


def _as_array(data) -> np.ndarray:
    if isinstance(data, np.ndarray):
        return np.ascontiguousarray(data, dtype=np.uint8)
    return np.frombuffer(bytes(data), dtype=np.uint8)


def encoded_size(values) -> int:
    arr = as_u32(values)
    return control_stream_length(arr.size) + int(byte_lengths(arr).sum(dtype=np.int64))


def encode_bytes(values) -> bytes:
    arr = as_u32(values)
    out = np.zeros(encoded_size(arr), dtype=np.uint8)
    _encode_kernel(arr, out, control_stream_length(arr.size))
    return out.tobytes()


def decode_bytes(data, count: int, *, delta: bool = False) -> np.ndarray:
    buf = _as_array(data)
    out = np.empty(count, dtype=np.uint32)
    status = decode_kernel(buf, count, out, delta, 0)
    raise_for_status(status, "Stream VByte")
    return out


def svb_encode(values, *, delta: bool = False) -> EncodedBuffer:
    arr = as_u32(values)
    if delta:
        from .delta import delta_encode

        arr = delta_encode(arr)
    return EncodedBuffer(CodecId.STREAM_VBYTE, arr.size, delta, encode_bytes(arr))


def svb_decode(buffer: EncodedBuffer) -> np.ndarray:
    if buffer.codec != CodecId.STREAM_VBYTE:
        raise ValueError(f"expected a Stream VByte buffer, got {buffer.codec.name}")
    return decode_bytes(buffer.data, buffer.count, delta=buffer.delta)


def payload_length(data, count: int) -> int:
    """Total bytes implied by the control stream for ``count`` integers; -1 if short."""
    buf = _as_array(data)
    ctrl_len = control_stream_length(count)
    if buf.size < ctrl_len:
        return -1
    return ctrl_len + int(_data_length_kernel(buf, count, TABLES.length))


def block_offsets(data, count: int) -> np.ndarray:
    """Start of each block's data bytes, computed from the control stream alone."""
    buf = _as_array(data)
    ctrl_len = control_stream_length(count)
    offsets = np.empty(ctrl_len, dtype=np.int64)
    _block_offsets_kernel(buf, ctrl_len, ctrl_len, TABLES.length, offsets)
    return offsets


def decode_block(control: int, data16, tables: DecodeTables = TABLES) -> tuple[int, int, int, int]:
    """Table-driven decode of one full block from a 16-byte window."""
    window = bytes(data16)
    if len(window) != 16:
        raise ValueError("a block decode reads exactly 16 data bytes")
    padded = window + b"\x00"
    pattern = tables.shuffle[control]
    lanes = bytes(padded[j] for j in pattern)
    return tuple(int.from_bytes(lanes[4 * q: 4 * q + 4], "little") for q in range(4))


def decode_block_scalar(control: int, data) -> tuple[int, int, int, int]:
    """Field-by-field decode of one full block; reads only the bytes it needs."""
    out = []
    p = 0
    for lane in range(4):
        L = ((control >> (2 * lane)) & 3) + 1
        out.append(int.from_bytes(bytes(data[p: p + L]), "little"))
        p += L
    return tuple(out)


def svb_append(buffer: EncodedBuffer, value: int) -> EncodedBuffer:
    """Append one integer without re-encoding the existing data.

    With ``N % 4 != 0`` the last control byte gains a field in place; otherwise
    a new control byte is inserted at the end of the control stream and the
    data region shifts by one byte. The result is byte-identical to encoding
    the extended sequence from scratch. For delta buffers ``value`` is the
    next logical value, stored as its difference from the current last value.
    """
    if buffer.codec != CodecId.STREAM_VBYTE:
        raise ValueError(f"append is only defined for Stream VByte, got {buffer.codec.name}")
    n = buffer.count
    data = buffer.data
    if payload_length(data, n) != len(data):
        raise MalformedInputError("Stream VByte: payload length does not match control stream")
    value = int(value)
    if not 0 <= value <= 0xFFFFFFFF:
        raise ValueError(f"{value} is not a 32-bit unsigned integer")
    stored = value
    if buffer.delta:
        last = last_value(buffer) if n else 0
        stored = (value - last) & 0xFFFFFFFF
    L = byte_length(stored)
    payload = stored.to_bytes(L, "little")
    ctrl_len = control_stream_length(n)
    field = n % 4
    if field:
        ctrl = bytearray(data[:ctrl_len])
        ctrl[-1] |= (L - 1) << (2 * field)
        new = bytes(ctrl) + data[ctrl_len:] + payload
    else:
        new = data[:ctrl_len] + bytes([L - 1]) + data[ctrl_len:] + payload
    return EncodedBuffer(CodecId.STREAM_VBYTE, n + 1, buffer.delta, new)


def last_value(buffer: EncodedBuffer) -> int:
    values = svb_decode(buffer)
    return int(values[-1])


class StreamVByteBuilder:
    """Incremental encoder with slack between the control and data regions.

    Appends are amortised O(1); :meth:`to_buffer` always emits the canonical
    gapless layout.
    """

    def __init__(self, *, delta: bool = False, capacity: int = 64):
        self.delta = delta
        self._count = 0
        self._last = 0
        self._ctrl = bytearray(max(1, (capacity + 3) // 4))
        self._data = bytearray()

    def __len__(self):
        return self._count

    @classmethod
    def from_buffer(cls, buffer: EncodedBuffer) -> "StreamVByteBuilder":
        if buffer.codec != CodecId.STREAM_VBYTE:
            raise ValueError("builder only accepts Stream VByte buffers")
        values = svb_decode(buffer)
        b = cls(delta=buffer.delta, capacity=max(64, 2 * buffer.count))
        ctrl_len = control_stream_length(buffer.count)
        b._ctrl[:ctrl_len] = buffer.data[:ctrl_len]
        b._data += buffer.data[ctrl_len:]
        b._count = buffer.count
        b._last = int(values[-1]) if buffer.count else 0
        return b

    def append(self, value: int) -> None:
        value = int(value)
        if not 0 <= value <= 0xFFFFFFFF:
            raise ValueError(f"{value} is not a 32-bit unsigned integer")
        stored = (value - self._last) & 0xFFFFFFFF if self.delta else value
        L = byte_length(stored)
        k, field = divmod(self._count, 4)
        if k >= len(self._ctrl):
            self._ctrl.extend(bytes(len(self._ctrl)))
        if field == 0:
            self._ctrl[k] = 0
        self._ctrl[k] |= (L - 1) << (2 * field)
        self._data += stored.to_bytes(L, "little")
        self._count += 1
        self._last = value

    def extend(self, values) -> None:
        for v in as_u32(values).tolist():
            self.append(v)

    def to_buffer(self) -> EncodedBuffer:
        ctrl_len = control_stream_length(self._count)
        payload = bytes(self._ctrl[:ctrl_len]) + bytes(self._data)
        return EncodedBuffer(CodecId.STREAM_VBYTE, self._count, self.delta, payload)
