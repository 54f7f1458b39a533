"""Byte-oriented 32-bit integer compression: VByte, varint-GB, varint-G8IU and
Stream VByte, with delta coding, in-stream seek/select and a benchmark suite."""

from .codecs import decode, encode
from .delta import delta_encode, prefix_sum
from .errors import MalformedInputError
from .g8iu import g8_decode, g8_encode
from .model import CodecId, EncodedBuffer, byte_length, vbyte_length
from .query import SeekResult, seek, select
from .streamvbyte import StreamVByteBuilder, build_tables, svb_append, svb_decode, svb_encode
from .varintgb import gb_decode, gb_encode
from .vbyte import vbyte_decode, vbyte_decode_accelerated, vbyte_encode

__all__ = [
    "CodecId", "EncodedBuffer", "MalformedInputError", "SeekResult", "StreamVByteBuilder",
    "build_tables", "byte_length", "decode", "delta_encode", "encode", "g8_decode",
    "g8_encode", "gb_decode", "gb_encode", "prefix_sum", "seek", "select", "svb_append",
    "svb_decode", "svb_encode", "vbyte_decode", "vbyte_decode_accelerated", "vbyte_encode",
    "vbyte_length",
]
