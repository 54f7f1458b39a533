"""Decode, seek and select throughput measurement.

Decoding follows a fixed methodology: the data is encoded ahead of time in
chunks of at most ``chunk`` integers (4096 by default, half a 32 kB L1
cache), then decoded chunk after chunk into one reused output buffer. Delta
decoding, when enabled, is part of the timed work. Each configuration is
checked end to end before any timing starts.
"""

from __future__ import annotations

import logging
import statistics
import time
from dataclasses import dataclass, field

import numpy as np
from numba import njit

from ..codecs import DECODE_KERNELS, encode, encode_bytes
from ..delta import delta_encode
from ..model import CodecId, as_u32
from ..query import SCANNERS, SEEK, SELECT
from .data import SyntheticSpec, generate

log = logging.getLogger(__name__)

MEMCPY = "memcpy"
DEFAULT_CHUNK = 4096
MIN_REPETITIONS = 10
DISPERSION_WARN = 0.5  # (max - min) / median


class CorrectnessError(RuntimeError):
    """A configuration failed its round-trip check before timing."""


@dataclass
class BenchRow:
    codec: str
    dataset: str
    n: int
    bits_per_int: float
    decode_mips: float
    seek_mops: float | None = None
    select_mops: float | None = None
    reps: int = 0
    min: float = 0.0
    median: float = 0.0
    max: float = 0.0
    suite: str = "decode"


@dataclass
class BenchReport:
    rows: list[BenchRow] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def select_rows(self, suite=None, codec=None):
        return [
            r for r in self.rows
            if (suite is None or r.suite == suite) and (codec is None or r.codec == codec)
        ]


@njit
def _decode_chunks(kernel, data, offsets, counts, out, delta, sink):
    base = 0
    o = 0
    for j in range(counts.shape[0]):
        m = counts[j]
        status = kernel(data[offsets[j]:offsets[j + 1]], m, out, delta, base)
        if status < 0:
            return status
        if delta and m > 0:
            base = out[m - 1]
        if sink.shape[0] > 0:
            sink[o:o + m] = out[:m]
        o += m
    return 0


@njit
def _copy_chunks(src, chunk, out):
    n = src.shape[0]
    i = 0
    while i < n:
        m = min(chunk, n - i)
        for j in range(m):
            out[j] = src[i + j]
        i += m
    return out[0] if n else 0


@njit
def _query_loop(scan, data, count, delta, mode, keys):
    total = 0
    for q in range(keys.shape[0]):
        status, idx, value = scan(data, count, delta, mode, keys[q])
        if status < 0:
            return -1
        total += value
    return total


@dataclass
class ChunkedPayload:
    data: np.ndarray
    offsets: np.ndarray
    counts: np.ndarray

    @property
    def nbytes(self) -> int:
        return int(self.offsets[-1])


def chunk_encode(codec, values, delta: bool, chunk: int = DEFAULT_CHUNK) -> ChunkedPayload:
    """Encode ``values`` as consecutive independent chunks of at most ``chunk``."""
    stored = delta_encode(values) if delta else as_u32(values)
    pieces = [encode_bytes(codec, stored[i:i + chunk]) for i in range(0, stored.size, chunk)]
    sizes = [len(p) for p in pieces]
    offsets = np.zeros(len(pieces) + 1, dtype=np.int64)
    np.cumsum(sizes, out=offsets[1:])
    counts = np.array([min(chunk, stored.size - i) for i in range(0, stored.size, chunk)], dtype=np.int64)
    data = np.frombuffer(b"".join(pieces), dtype=np.uint8)
    return ChunkedPayload(data, offsets, counts)


def _time(fn, repetitions):
    fn()  # warmup, also triggers compilation
    times = []
    for _ in range(repetitions):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return times


def _rates(n, times):
    rates = sorted(n / t / 1e6 for t in times)
    return rates[0], statistics.median(rates), rates[-1]


def _check_dispersion(label, lo, med, hi, report):
    if med > 0 and (hi - lo) / med > DISPERSION_WARN:
        msg = f"{label}: high timing dispersion (min {lo:.1f}, median {med:.1f}, max {hi:.1f})"
        log.warning(msg)
        if report is not None:
            report.warnings.append(msg)


def measure_decode(
    codec,
    data,
    delta: bool,
    *,
    label: str = "",
    repetitions: int = 11,
    chunk: int = DEFAULT_CHUNK,
    report: BenchReport | None = None,
) -> BenchRow:
    """Time chunked decoding of ``data`` under ``codec`` (or the memcpy baseline).

    ``bits_per_int`` comes from the one-shot encoding of the whole array.
    Raises :class:`CorrectnessError` if the decoded output differs from ``data``.
    """
    values = as_u32(data)
    n = values.size
    if repetitions < MIN_REPETITIONS:
        raise ValueError(f"at least {MIN_REPETITIONS} repetitions required")
    out = np.empty(chunk, dtype=np.uint32)
    if codec == MEMCPY:
        sink = np.empty(n, dtype=np.uint32)
        for i in range(0, n, chunk):
            sink[i:i + chunk] = values[i:i + chunk]
        if not np.array_equal(sink, values):
            raise CorrectnessError(f"memcpy baseline mismatch on {label}")
        times = _time(lambda: _copy_chunks(values, chunk, out), repetitions)
        name, bits = MEMCPY, 32.0
    else:
        codec = CodecId(codec)
        kernel = DECODE_KERNELS[codec]
        payload = chunk_encode(codec, values, delta, chunk)
        sink = np.empty(n, dtype=np.uint32)
        status = _decode_chunks(kernel, payload.data, payload.offsets, payload.counts, out, delta, sink)
        if status < 0 or not np.array_equal(sink, values):
            raise CorrectnessError(f"{codec.cli_name} failed round trip on {label}")
        empty = np.empty(0, dtype=np.uint32)
        times = _time(
            lambda: _decode_chunks(kernel, payload.data, payload.offsets, payload.counts, out, delta, empty),
            repetitions,
        )
        name, bits = codec.cli_name, encode(codec, values, delta=delta).bits_per_int
    lo, med, hi = _rates(n, times) if n else (0.0, 0.0, 0.0)
    _check_dispersion(f"{name}/{label}", lo, med, hi, report)
    return BenchRow(name, label, n, bits, med, reps=repetitions, min=lo, median=med, max=hi)


def measure_queries(
    codec,
    values,
    *,
    label: str = "",
    queries: int = 10_000,
    repetitions: int = 11,
    seed: int = 0,
    report: BenchReport | None = None,
) -> BenchRow:
    """Decode, seek and select throughput on a delta-coded sorted array."""
    codec = CodecId(codec)
    if codec not in SCANNERS:
        raise ValueError(f"seek/select are not available for {codec.name}")
    values = as_u32(values)
    buf = encode(codec, values, delta=True)
    scan = SCANNERS[codec]
    data = np.frombuffer(buf.data, dtype=np.uint8)
    rng = np.random.default_rng(seed)
    top = int(values[-1]) if values.size else 0
    targets = rng.integers(0, top + 1, size=queries, dtype=np.int64)
    indices = rng.integers(0, max(values.size, 1), size=queries, dtype=np.int64)

    # correctness gate against a decode-then-scan oracle
    wide = values.astype(np.int64)
    for t in targets[:256]:
        status, idx, v = scan(data, buf.count, True, SEEK, t)
        j = int(np.searchsorted(wide, t, side="left"))
        if status != 0 or idx != j or v != wide[j]:
            raise CorrectnessError(f"{codec.cli_name} seek mismatch on {label}")
    for i in indices[:256]:
        status, idx, v = scan(data, buf.count, True, SELECT, i)
        if status != 0 or v != wide[i]:
            raise CorrectnessError(f"{codec.cli_name} select mismatch on {label}")

    decode_row = measure_decode(codec, values, True, label=label, repetitions=repetitions, report=report)
    seek_t = _time(lambda: _query_loop(scan, data, buf.count, True, SEEK, targets), repetitions)
    select_t = _time(lambda: _query_loop(scan, data, buf.count, True, SELECT, indices), repetitions)
    decode_row.seek_mops = _rates(queries, seek_t)[1]
    decode_row.select_mops = _rates(queries, select_t)[1]
    decode_row.suite = "seek_select"
    return decode_row


@dataclass
class BenchConfig:
    codecs: list[CodecId] = field(default_factory=lambda: list(CodecId))
    datasets: list[SyntheticSpec] = field(default_factory=list)
    delta: bool = True
    repetitions: int = 11
    chunk: int = DEFAULT_CHUNK
    memcpy: bool = True
    seek_bitwidths: list[int] = field(default_factory=list)
    seek_n: int = 256
    seek_queries: int = 10_000
    seed: int = 1


def run_suite(config: BenchConfig) -> BenchReport:
    """Run every (codec, dataset) cell, then the seek/select sweep."""
    report = BenchReport()
    if not config.codecs:
        return report
    for spec in config.datasets:
        values = generate(spec)
        names = list(config.codecs) + ([MEMCPY] if config.memcpy else [])
        for codec in names:
            row = measure_decode(
                codec, values, config.delta, label=spec.label,
                repetitions=config.repetitions, chunk=config.chunk, report=report,
            )
            report.rows.append(row)
            log.info("%-6s %-40s %6.2f bits/int %9.1f Mi/s", row.codec, row.dataset, row.bits_per_int, row.decode_mips)
    query_codecs = [c for c in config.codecs if c in SCANNERS]
    for b in config.seek_bitwidths:
        spec = SyntheticSpec("uniform_bitwidth", config.seek_n, seed=config.seed + b, params={"b": b}, cumulative=True)
        values = generate(spec)
        for codec in query_codecs:
            row = measure_queries(
                codec, values, label=f"seek_b{b}", queries=config.seek_queries,
                repetitions=config.repetitions, seed=config.seed + 1000 + b, report=report,
            )
            report.rows.append(row)
    return report


@dataclass
class RatioCheck:
    dataset: str
    faster: str
    slower: str
    ratio: float
    threshold: float

    @property
    def passed(self) -> bool:
        return self.ratio >= self.threshold


def throughput_checks(report: BenchReport, threshold: float = 1.5) -> list[RatioCheck]:
    """Stream VByte vs VByte decode ratio on every decode dataset where VByte
    spends a single byte per integer (the highly compressible regime)."""
    checks = []
    by_key = {(r.codec, r.dataset): r for r in report.select_rows("decode")}
    for (codec, dataset), row in by_key.items():
        if codec != CodecId.VBYTE.cli_name or row.bits_per_int > 8.0:
            continue
        svb = by_key.get((CodecId.STREAM_VBYTE.cli_name, dataset))
        if svb is None or row.decode_mips <= 0:
            continue
        checks.append(RatioCheck(dataset, "svb", "vbyte", svb.decode_mips / row.decode_mips, threshold))
    return checks
