"""Deterministic synthetic inputs for the benchmark suite."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

GENERATORS = ("uniform_bitwidth", "clustered_gaps", "constant")


@dataclass(frozen=True)
class SyntheticSpec:
    """A generator name, its parameters, a length and a seed.

    ``uniform_bitwidth`` draws from ``[0, 2**b)``; ``clustered_gaps`` produces a
    strictly increasing posting list whose gaps are 1 with probability
    ``burstiness`` and geometric otherwise, averaging ``mean_gap``;
    ``constant`` repeats ``v``. With ``cumulative`` the draws are prefix-summed
    (mod 2**32) so they can be stored delta-coded.
    """

    generator: str
    n: int
    seed: int = 0
    params: dict = field(default_factory=dict)
    cumulative: bool = False

    def __post_init__(self):
        if self.generator not in GENERATORS:
            raise ValueError(f"unknown generator {self.generator!r}")
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if self.generator == "uniform_bitwidth":
            b = int(self.params.get("b", 0))
            if not 1 <= b <= 32:
                raise ValueError(f"bit width must be in 1..32, got {b}")
        if self.generator == "clustered_gaps":
            if float(self.params.get("mean_gap", 0)) < 1:
                raise ValueError("mean_gap must be at least 1")
            if not 0 <= float(self.params.get("burstiness", 0)) < 1:
                raise ValueError("burstiness must lie in [0, 1)")

    @property
    def label(self) -> str:
        parts = [self.generator] + [f"{k}={v}" for k, v in sorted(self.params.items())]
        if self.cumulative:
            parts.append("cum")
        return ":".join(parts)


def generate(spec: SyntheticSpec) -> np.ndarray:
    """Materialise ``spec`` as a uint32 array; same spec and seed, same output."""
    rng = np.random.default_rng(spec.seed)
    n = spec.n
    if spec.generator == "uniform_bitwidth":
        b = int(spec.params["b"])
        values = rng.integers(0, 1 << b, size=n, dtype=np.uint64).astype(np.uint32)
    elif spec.generator == "constant":
        values = np.full(n, int(spec.params.get("v", 0)), dtype=np.uint32)
    else:
        return _clustered(rng, n, float(spec.params["mean_gap"]), float(spec.params["burstiness"]))
    if spec.cumulative:
        values = np.cumsum(values, dtype=np.uint64).astype(np.uint32)
    return values


def _clustered(rng, n, mean_gap, burstiness):
    if n == 0:
        return np.zeros(0, dtype=np.uint32)
    tail_mean = (mean_gap - burstiness) / (1 - burstiness)
    gaps = rng.geometric(1.0 / tail_mean, size=n).astype(np.uint64)
    gaps[rng.random(n) < burstiness] = 1
    ids = np.cumsum(gaps)
    if ids[-1] > 0xFFFFFFFF:
        raise ValueError("posting list overflows 32 bits; lower n or mean_gap")
    return ids.astype(np.uint32)
