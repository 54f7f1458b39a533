import numpy as np
import pytest

import oracles
from conftest import BOUNDARIES, mixed_values

from bytecodec import g8_decode, g8_encode, vbyte_encode
from bytecodec.errors import (
    BlockStructureError,
    OverlongRunError,
    TrailingBytesError,
    TruncatedInputError,
)
from bytecodec.g8iu import decode_bytes, encode_bytes, payload_length


def wasted_bytes(blob: bytes, count: int) -> int:
    """Data bytes that complete no integer, counted from the control bits."""
    ends = sum(8 - bin(blob[p]).count("1") for p in range(0, len(blob), 9))
    assert ends == count
    used = 0
    for p in range(0, len(blob), 9):
        ctrl = blob[p]
        last_end = max((j for j in range(8) if not ctrl >> j & 1), default=-1)
        used += last_end + 1
    return 8 * (len(blob) // 9) - used


def test_full_block_without_waste():
    blob = encode_bytes([1024, 12, 10, 2**30])
    assert blob.hex() == "7100040c0a00000040"
    assert wasted_bytes(blob, 4) == 0


def test_block_with_one_wasted_byte():
    blob = encode_bytes([1, 2, 3, 1024, 1024])
    assert len(blob) == 9
    assert blob[0] == 0b1010_1000
    assert blob[-1] == 0x00
    assert wasted_bytes(blob, 5) == 1


def test_matches_loop_oracle(rng):
    xs = np.concatenate([np.array(BOUNDARIES, dtype=np.uint32), mixed_values(rng, 20_003)])
    blob = encode_bytes(xs)
    assert blob == oracles.g8iu(xs.tolist())
    assert decode_bytes(blob, xs.size).tolist() == xs.tolist()


@pytest.mark.parametrize("n", [0, 1, 2, 7, 8, 9, 16, 17, 500])
def test_roundtrip(rng, n):
    xs = mixed_values(rng, n)
    blob = encode_bytes(xs)
    assert len(blob) % 9 == 0
    assert decode_bytes(blob, n).tolist() == xs.tolist()


def test_delta_buffer(rng):
    xs = np.sort(mixed_values(rng, 3000))
    buf = g8_encode(xs, delta=True)
    assert buf.data == oracles.g8iu(oracles.deltas(xs.tolist()))
    assert g8_decode(buf).tolist() == xs.tolist()


def test_can_lose_to_vbyte():
    # three-byte integers: two per block, two wasted bytes each time
    xs = [2**16] * 100
    assert len(encode_bytes(xs)) == 9 * 50
    assert len(vbyte_encode(xs)) == 3 * 100
    assert len(encode_bytes(xs)) > len(vbyte_encode(xs))


def test_one_byte_values_fill_blocks():
    blob = encode_bytes(range(16))
    assert len(blob) == 18
    assert blob[0] == 0 and blob[9] == 0


@pytest.mark.parametrize(
    "blob, count, error",
    [
        (bytes(8), 1, BlockStructureError),  # not a whole number of blocks
        (b"", 1, TruncatedInputError),
        (bytes(9), 9, TruncatedInputError),
        (bytes(9), 2, BlockStructureError),  # integer boundaries beyond the count
        (bytes([0b0001_1111]) + bytes(8), 4, OverlongRunError),
        (bytes([0xFE]) + bytes(8) + bytes([0xFE]) + bytes(8), 1, TrailingBytesError),
    ],
)
def test_malformed_input(blob, count, error):
    with pytest.raises(error):
        decode_bytes(blob, count)


def test_payload_length(rng):
    xs = mixed_values(rng, 41)
    blob = encode_bytes(xs)
    assert payload_length(blob + bytes(9), 41) == len(blob)
    assert payload_length(blob[:-9], 41) == -1
