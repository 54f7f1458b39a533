import numpy as np
import pytest

import oracles
from conftest import BOUNDARIES, mixed_values

from bytecodec import CodecId, EncodedBuffer, byte_length, vbyte_length
from bytecodec.model import as_u32, byte_lengths, vbyte_lengths


@pytest.mark.parametrize("x", BOUNDARIES)
def test_lengths_at_boundaries(x):
    assert byte_length(x) == oracles.nbytes(x)
    assert vbyte_length(x) == oracles.vbyte_nbytes(x)


def test_lengths_match_division_oracle_on_a_million_inputs(rng):
    xs = np.concatenate([np.array(BOUNDARIES, dtype=np.uint32), mixed_values(rng, 10**6)])
    ints = xs.tolist()
    assert byte_lengths(xs).tolist() == [oracles.nbytes(x) for x in ints]
    assert vbyte_lengths(xs).tolist() == [oracles.vbyte_nbytes(x) for x in ints]
    assert [byte_length(x) for x in ints[:10**5]] == [oracles.nbytes(x) for x in ints[:10**5]]


@pytest.mark.parametrize("bad", [[-1], [2**32], [1.5]])
def test_as_u32_rejects_out_of_range(bad):
    with pytest.raises((ValueError, TypeError)):
        as_u32(bad)


def test_as_u32_accepts_lists_and_arrays():
    assert as_u32([0, 2**32 - 1]).dtype == np.uint32
    assert as_u32(np.arange(3, dtype=np.int64)).tolist() == [0, 1, 2]
    assert as_u32([]).size == 0


def test_codec_names_roundtrip():
    for c in CodecId:
        assert CodecId.from_name(c.cli_name) is c
    assert [c.cli_name for c in CodecId] == ["vbyte", "gb", "g8iu", "svb"]
    with pytest.raises(ValueError):
        CodecId.from_name("pfor")


def test_bits_per_int():
    buf = EncodedBuffer(CodecId.VBYTE, 4, False, b"\x01\x02\x03\x04")
    assert buf.bits_per_int == 8.0
    assert EncodedBuffer(CodecId.VBYTE, 0, False, b"").bits_per_int == 0.0
