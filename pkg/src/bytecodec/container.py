"""Single-array file container.

Header (14 bytes, little-endian)::

    magic   4s   b"SVB1"
    codec   B    CodecId tag
    flags   B    bit 0 = delta, other bits reserved (zero)
    count   I    number of integers
    length  I    payload byte count

The payload follows immediately.
"""

from __future__ import annotations

import os
import struct
import tempfile
from pathlib import Path
from typing import BinaryIO

from .codecs import payload_length
from .errors import (
    BadMagicError,
    LengthMismatchError,
    ReservedFlagsError,
    TruncatedSourceError,
    UnknownCodecError,
)
from .model import CodecId, EncodedBuffer

MAGIC = b"SVB1"
HEADER = struct.Struct("<4sBBII")
HEADER_SIZE = HEADER.size
FLAG_DELTA = 0x01


def pack(buffer: EncodedBuffer) -> bytes:
    flags = FLAG_DELTA if buffer.delta else 0
    return HEADER.pack(MAGIC, int(buffer.codec), flags, buffer.count, len(buffer.data)) + buffer.data


def unpack(blob: bytes) -> EncodedBuffer:
    if len(blob) < HEADER_SIZE:
        raise TruncatedSourceError(f"need {HEADER_SIZE} header bytes, got {len(blob)}")
    magic, tag, flags, count, length = HEADER.unpack_from(blob)
    if magic != MAGIC:
        raise BadMagicError(f"bad magic {magic!r}")
    try:
        codec = CodecId(tag)
    except ValueError:
        raise UnknownCodecError(f"unknown codec tag {tag}") from None
    if flags & ~FLAG_DELTA:
        raise ReservedFlagsError(f"reserved flag bits set: {flags:#04x}")
    payload = blob[HEADER_SIZE:]
    if len(payload) < length:
        raise TruncatedSourceError(f"payload truncated: {len(payload)} of {length} bytes")
    if len(payload) > length:
        raise LengthMismatchError(f"{len(payload) - length} bytes after the payload")
    implied = payload_length(codec, payload, count)
    if implied != length:
        raise LengthMismatchError(
            f"{codec.name} framing implies {implied} payload bytes for {count} integers, "
            f"header says {length}"
        )
    return EncodedBuffer(codec, count, bool(flags & FLAG_DELTA), payload)


def write_container(buffer: EncodedBuffer, sink: BinaryIO) -> int:
    blob = pack(buffer)
    sink.write(blob)
    return len(blob)


def read_container(source: BinaryIO) -> EncodedBuffer:
    return unpack(source.read())


def save(buffer: EncodedBuffer, path) -> int:
    """Write ``buffer`` to ``path`` atomically (temp file + rename)."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "wb") as fh:
            n = write_container(buffer, fh)
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return n


def load(path) -> EncodedBuffer:
    with open(path, "rb") as fh:
        return read_container(fh)
