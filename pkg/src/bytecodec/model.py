"""Shared types: codec identifiers, the encoded buffer value and length helpers."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

U32_MAX = 0xFFFFFFFF


class CodecId(enum.IntEnum):
    """Numeric tags are part of the container format and never change."""

    VBYTE = 0
    VARINT_GB = 1
    VARINT_G8IU = 2
    STREAM_VBYTE = 3

    @property
    def cli_name(self) -> str:
        return _CLI_NAMES[self]

    @classmethod
    def from_name(cls, name: str) -> "CodecId":
        for codec, short in _CLI_NAMES.items():
            if name.lower() in (short, codec.name.lower()):
                return codec
        raise ValueError(f"unknown codec name {name!r}")


_CLI_NAMES = {
    CodecId.VBYTE: "vbyte",
    CodecId.VARINT_GB: "gb",
    CodecId.VARINT_G8IU: "g8iu",
    CodecId.STREAM_VBYTE: "svb",
}


@dataclass(frozen=True)
class EncodedBuffer:
    """One compressed array: codec tag, element count, delta flag and payload."""

    codec: CodecId
    count: int
    delta: bool
    data: bytes

    def __post_init__(self):
        object.__setattr__(self, "codec", CodecId(self.codec))
        if not 0 <= self.count <= U32_MAX:
            raise ValueError(f"count out of range: {self.count}")
        if not isinstance(self.data, bytes):
            object.__setattr__(self, "data", bytes(self.data))

    @property
    def bits_per_int(self) -> float:
        if self.count == 0:
            return 0.0
        return 8.0 * len(self.data) / self.count


def as_u32(values) -> np.ndarray:
    """Coerce ``values`` to a contiguous uint32 array, rejecting out-of-range input."""
    if isinstance(values, np.ndarray) and values.dtype == np.uint32:
        return np.ascontiguousarray(values)
    arr = np.asarray(values)
    if arr.ndim != 1:
        arr = arr.reshape(-1)
    if arr.size == 0:
        return np.zeros(0, dtype=np.uint32)
    if arr.dtype.kind not in "iu":
        if arr.dtype == object:
            lo, hi = min(values), max(values)
            if lo < 0 or hi > U32_MAX:
                raise ValueError("values must lie in [0, 2**32)")
            return np.array([int(v) for v in values], dtype=np.uint32)
        raise TypeError(f"integer input required, got dtype {arr.dtype}")
    if arr.min() < 0 or arr.max() > U32_MAX:
        raise ValueError("values must lie in [0, 2**32)")
    return arr.astype(np.uint32)


def byte_length(x: int) -> int:
    """Number of little-endian bytes needed to store ``x``; zero takes one byte."""
    if not 0 <= x <= U32_MAX:
        raise ValueError(f"{x} is not a 32-bit unsigned integer")
    return max(1, (x.bit_length() + 7) // 8)


def vbyte_length(x: int) -> int:
    """Number of 7-bit groups VByte spends on ``x`` (1..5)."""
    if not 0 <= x <= U32_MAX:
        raise ValueError(f"{x} is not a 32-bit unsigned integer")
    return max(1, (x.bit_length() + 6) // 7)


def byte_lengths(values: np.ndarray) -> np.ndarray:
    """Vectorised :func:`byte_length` over a uint32 array."""
    v = np.asarray(values, dtype=np.uint32)
    return (
        1
        + (v >= 1 << 8).astype(np.uint8)
        + (v >= 1 << 16).astype(np.uint8)
        + (v >= 1 << 24).astype(np.uint8)
    )


def vbyte_lengths(values: np.ndarray) -> np.ndarray:
    v = np.asarray(values, dtype=np.uint32)
    return (
        1
        + (v >= 1 << 7).astype(np.uint8)
        + (v >= 1 << 14).astype(np.uint8)
        + (v >= 1 << 21).astype(np.uint8)
        + (v >= 1 << 28).astype(np.uint8)
    )
