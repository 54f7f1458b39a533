import numpy as np
import pytest


def mixed_values(rng, n):
    """Values whose byte lengths are spread evenly over 1..4 (and VByte's 1..5)."""
    widths = rng.integers(1, 33, size=n)
    raw = rng.integers(0, 2**32, size=n, dtype=np.uint64)
    return (raw >> (32 - widths).astype(np.uint64)).astype(np.uint32)


@pytest.fixture
def rng():
    return np.random.default_rng(20260917)


BOUNDARIES = sorted({
    0, 1, 2**32 - 1,
    *(v for k in (7, 8, 14, 16, 21, 24, 28) for v in (2**k - 1, 2**k, 2**k + 1)),
})
