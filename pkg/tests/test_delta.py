import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import mixed_values

from bytecodec import delta_encode, prefix_sum, svb_encode, vbyte_encode
from bytecodec.delta import prefix_sum_block

u32 = st.integers(min_value=0, max_value=2**32 - 1)


@pytest.mark.parametrize(
    "values, expected",
    [
        ([3, 7, 19, 20], [3, 4, 12, 1]),
        ([5], [5]),
        ([0, 2**32 - 1, 1], [0, 2**32 - 1, 2]),
        ([], []),
    ],
)
def test_delta_examples(values, expected):
    assert delta_encode(values).tolist() == expected
    assert oracles.deltas(values) == expected


@pytest.mark.parametrize("blocked", [True, False])
def test_prefix_sum_examples(blocked):
    assert prefix_sum([3, 4, 12, 1], blocked=blocked).tolist() == [3, 7, 19, 20]
    assert prefix_sum([0, 0, 0, 0], 42, blocked=blocked).tolist() == [42] * 4
    assert prefix_sum([1, 2**32 - 1], 2**32 - 1, blocked=blocked).tolist() == [0, 2**32 - 1]


def test_block_step():
    assert prefix_sum_block((3, 4, 12, 1)) == (3, 7, 19, 20)
    assert prefix_sum_block((1, 1, 1, 1), base=10) == (11, 12, 13, 14)
    with pytest.raises(ValueError):
        prefix_sum_block((1, 2, 3))


def test_block_step_matches_scalar_on_many_blocks(rng):
    blocks = mixed_values(rng, 4 * 10**5).reshape(-1, 4).tolist()
    bases = mixed_values(rng, len(blocks)).tolist()
    for block, base in zip(blocks, bases):
        assert prefix_sum_block(block, base) == tuple(oracles.running_sum(block, base))


def test_blocked_kernel_chains_the_running_base(rng):
    deltas = mixed_values(rng, 10**5 + 3)
    expected = oracles.running_sum(deltas.tolist())
    assert prefix_sum(deltas).tolist() == expected
    assert prefix_sum(deltas, blocked=False).tolist() == expected


@given(st.lists(u32, max_size=200), u32)
def test_prefix_sum_paths_agree(deltas, base):
    expected = oracles.running_sum(deltas, base)
    assert prefix_sum(deltas, base).tolist() == expected
    assert prefix_sum(deltas, base, blocked=False).tolist() == expected


@given(st.lists(u32, max_size=200))
def test_delta_then_prefix_is_identity(values):
    assert prefix_sum(delta_encode(values)).tolist() == values


@settings(max_examples=50)
@given(st.lists(st.integers(min_value=0, max_value=2**31), min_size=1, max_size=300, unique=True))
def test_sorted_input_never_grows(values):
    values = sorted(values)
    d = delta_encode(values)
    if values[0] > 0:
        assert d.min() >= 1
    assert len(vbyte_encode(d)) <= len(vbyte_encode(values))
    assert len(svb_encode(values, delta=True).data) <= len(svb_encode(values).data)
