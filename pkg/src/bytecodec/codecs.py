"""Codec-independent entry points: encode/decode by :class:`CodecId`."""

from __future__ import annotations

import numpy as np

from . import g8iu, streamvbyte, varintgb, vbyte
from .delta import delta_encode
from .model import CodecId, EncodedBuffer, as_u32


def _vbyte_payload_length(data, count):
    return vbyte.vbyte_payload_length(data, count)


_ENCODERS = {
    CodecId.VBYTE: vbyte.vbyte_encode,
    CodecId.VARINT_GB: varintgb.encode_bytes,
    CodecId.VARINT_G8IU: g8iu.encode_bytes,
    CodecId.STREAM_VBYTE: streamvbyte.encode_bytes,
}

_DECODERS = {
    CodecId.VBYTE: vbyte.vbyte_decode,
    CodecId.VARINT_GB: varintgb.decode_bytes,
    CodecId.VARINT_G8IU: g8iu.decode_bytes,
    CodecId.STREAM_VBYTE: streamvbyte.decode_bytes,
}

# Compiled decoders sharing the signature (data, count, out, delta, base) -> status.
DECODE_KERNELS = {
    CodecId.VBYTE: vbyte.decode_kernel,
    CodecId.VARINT_GB: varintgb.decode_kernel,
    CodecId.VARINT_G8IU: g8iu.decode_kernel,
    CodecId.STREAM_VBYTE: streamvbyte.decode_kernel,
}

_PAYLOAD_LENGTH = {
    CodecId.VBYTE: _vbyte_payload_length,
    CodecId.VARINT_GB: varintgb.payload_length,
    CodecId.VARINT_G8IU: g8iu.payload_length,
    CodecId.STREAM_VBYTE: streamvbyte.payload_length,
}


def encode(codec, values, *, delta: bool = False) -> EncodedBuffer:
    """Compress ``values`` with ``codec``; ``delta`` stores successive differences."""
    codec = CodecId(codec)
    arr = as_u32(values)
    stored = delta_encode(arr) if delta else arr
    return EncodedBuffer(codec, arr.size, delta, _ENCODERS[codec](stored))


def encode_bytes(codec, values) -> bytes:
    """Raw payload for ``values`` with no delta transform and no header."""
    return _ENCODERS[CodecId(codec)](as_u32(values))


def decode(buffer: EncodedBuffer) -> np.ndarray:
    """Decompress to a uint32 array, undoing the delta transform if flagged."""
    return _DECODERS[buffer.codec](buffer.data, buffer.count, delta=buffer.delta)


def payload_length(codec, data, count: int) -> int:
    """Payload size implied by the stream's own framing for ``count`` integers.

    Returns -1 when ``data`` is too short to even describe ``count`` integers.
    """
    return _PAYLOAD_LENGTH[CodecId(codec)](data, count)
