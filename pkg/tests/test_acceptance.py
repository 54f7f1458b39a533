"""Acceptance suite: one check per release criterion, each printing a PASS/FAIL line.

    pytest tests/test_acceptance.py -s      # or
    python tests/test_acceptance.py

The throughput ratio is reported but only enforced when BYTECODEC_STRICT=1.
"""

from __future__ import annotations

import os
import sys
import time
from pathlib import Path

import numpy as np
import pytest
from numba import njit

sys.path.insert(0, str(Path(__file__).parent))

import oracles  # noqa: E402
from conftest import mixed_values  # noqa: E402

from bytecodec import CodecId, decode, encode, seek, select, svb_append, svb_encode  # noqa: E402
from bytecodec import vbyte  # noqa: E402
from bytecodec.bench import SyntheticSpec, generate, measure_decode  # noqa: E402
from bytecodec.delta import prefix_sum  # noqa: E402
from bytecodec.errors import OK  # noqa: E402
from bytecodec.g8iu import encode_bytes as g8_bytes  # noqa: E402
from bytecodec.streamvbyte import TABLES, decode_block, decode_block_scalar  # noqa: E402
from bytecodec.varintgb import encode_bytes as gb_bytes  # noqa: E402

STRICT = os.environ.get("BYTECODEC_STRICT", "") not in ("", "0")
SEED = 20260917


def verdict(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] AC{number} {title}"
    if detail:
        line += f": {detail}"
    print(line, flush=True)


def test_ac1_roundtrip_suite():
    sequences, max_len, budget = 10**5, 10**4, 120.0
    rng = np.random.default_rng(SEED)
    pool = mixed_values(rng, 2 * 10**6)
    sorted_pool = np.cumsum(mixed_values(rng, 2 * 10**6) >> 12, dtype=np.uint64).astype(np.uint32)
    start = time.perf_counter()
    failures = []
    for codec in CodecId:
        starts = rng.integers(0, pool.size - max_len, size=sequences)
        lengths = rng.integers(0, max_len + 1, size=sequences)
        for k in range(sequences):
            # delta on every other sequence; half of those use a sorted source
            delta = bool(k & 1)
            src = sorted_pool if k % 4 == 3 else pool
            x = src[starts[k]:starts[k] + lengths[k]]
            if not np.array_equal(decode(encode(codec, x, delta=delta)), x):
                failures.append((codec.cli_name, k))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < budget
    verdict(1, "roundtrip", ok, f"4 codecs x {sequences} sequences, {len(failures)} mismatches, {elapsed:.1f}s (limit {budget:.0f}s)")
    assert not failures, failures[:5]
    assert elapsed < budget


def test_ac2_golden_vectors():
    checks = {
        "vbyte 32": list(vbyte.vbyte_encode([32])) == [0x20],
        "vbyte 128": list(vbyte.vbyte_encode([128])) == [0x80, 0x01],
        "gb (1024,12,10,2^30) = 9 bytes": len(gb_bytes([1024, 12, 10, 2**30])) == 9,
        "gb (1,2,3,1024) = 6 bytes": len(gb_bytes([1, 2, 3, 1024])) == 6,
    }
    blob = g8_bytes([1, 2, 3, 1024, 1024])
    # waste = data bytes after the last integer boundary (trailing 1 control bits)
    last_end = max(j for j in range(8) if not blob[0] >> j & 1)
    checks["g8iu (1,2,3,1024,1024) = 9 bytes"] = len(blob) == 9
    integers = 8 - bin(blob[0]).count("1")
    checks["g8iu one wasted byte"] = integers == 5 and 7 - last_end == 1
    failed = [k for k, v in checks.items() if not v]
    verdict(2, "golden vectors", not failed, "all match" if not failed else f"mismatch: {failed}")
    assert not failed


def test_ac3_size_arithmetic():
    rng = np.random.default_rng(SEED + 3)
    values = rng.integers(2**7, 2**8, size=1000).astype(np.uint32)
    want = {CodecId.VBYTE: 16.0, CodecId.VARINT_GB: 10.0, CodecId.STREAM_VBYTE: 10.0, CodecId.VARINT_G8IU: 9.0}
    got = {c: encode(c, values).bits_per_int for c in want}
    ok = all(got[c] == want[c] for c in want)
    verdict(3, "bits per integer on [2^7, 2^8)", ok, ", ".join(f"{c.cli_name}={got[c]:.3f}" for c in want))
    assert ok


def test_ac4_stream_vbyte_structure():
    rng = np.random.default_rng(SEED + 4)
    fills = 100
    mismatches = 0
    for c in range(256):
        windows = rng.integers(0, 256, size=(fills, 16), dtype=np.uint8)
        for w in windows:
            window = w.tobytes()
            if decode_block(c, window) != decode_block_scalar(c, window):
                mismatches += 1
    lengths_ok = TABLES.length[0x00] == 4 and TABLES.length[0xFF] == 16
    prefix = prefix_sum([3, 4, 12, 1]).tolist()
    prefix_ok = prefix == [3, 7, 19, 20] == oracles.running_sum([3, 4, 12, 1])
    ok = lengths_ok and prefix_ok and mismatches == 0
    verdict(4, "stream vbyte tables", ok,
            f"length[0x00]={TABLES.length[0x00]} length[0xFF]={TABLES.length[0xFF]}, "
            f"{256 * fills} block decodes, {mismatches} mismatches, prefix {prefix}")
    assert ok


def test_ac5_append_canonical():
    rng = np.random.default_rng(SEED + 5)
    values = mixed_values(rng, 10**4)
    start = time.perf_counter()
    buf = svb_encode([])
    for v in values.tolist():
        buf = svb_append(buf, v)
    elapsed = time.perf_counter() - start
    ok = buf.data == svb_encode(values).data and buf.count == values.size and elapsed < 10.0
    verdict(5, "append canonicality", ok, f"10^4 appends in {elapsed:.2f}s, byte-identical={buf.data == svb_encode(values).data}")
    assert ok


def test_ac6_seek_select_oracle():
    rng = np.random.default_rng(SEED + 6)
    queries = 10**4
    bad = 0
    for codec in (CodecId.VBYTE, CodecId.VARINT_GB, CodecId.STREAM_VBYTE):
        for b in range(1, 25):
            values = np.cumsum(rng.integers(0, 1 << b, size=256, dtype=np.uint64)).astype(np.int64)
            buf = encode(codec, values, delta=True)
            plain = decode(buf).astype(np.int64)
            assert np.array_equal(plain, values)
            # decode-then-scan oracle for all targets at once
            targets = rng.integers(0, int(values[-1]) + 2, size=queries)
            expected = np.searchsorted(plain, targets, side="left")
            for t, j in zip(targets.tolist(), expected.tolist()):
                want = None if j == plain.size else (j, int(plain[j]))
                if seek(buf, t) != want:
                    bad += 1
            for i in rng.integers(0, plain.size, size=queries).tolist():
                if select(buf, i) != int(plain[i]):
                    bad += 1
    verdict(6, "seek/select vs decode-then-scan", bad == 0,
            f"3 codecs x 24 bit widths x {queries} seeks + {queries} selects, {bad} mismatches")
    assert bad == 0


def test_ac7_throughput_ratio():
    values = generate(SyntheticSpec("uniform_bitwidth", 1 << 20, seed=SEED, params={"b": 4}, cumulative=True))
    svb = measure_decode(CodecId.STREAM_VBYTE, values, True, label="b4", repetitions=15)
    vb = measure_decode(CodecId.VBYTE, values, True, label="b4", repetitions=15)
    ratio = svb.decode_mips / vb.decode_mips
    ok = ratio >= 1.5
    mode = "strict" if STRICT else "report-only"
    verdict(7, f"svb/vbyte decode ratio ({mode})", ok,
            f"{ratio:.2f}x (svb {svb.decode_mips:.0f} Mi/s, vbyte {vb.decode_mips:.0f} Mi/s, target 1.5x)")
    if STRICT:
        assert ok


@njit
def _fuzz(seed, trials, max_len):
    np.random.seed(seed)
    scalar_out = np.empty(max_len + 2, dtype=np.uint32)
    fast_out = np.empty(max_len + 2, dtype=np.uint32)
    mismatches = 0
    decoded = 0
    for _ in range(trials):
        n = np.random.randint(0, max_len + 1)
        data = np.empty(n, dtype=np.uint8)
        p_cont = np.random.random()
        ends = 0
        for j in range(n):
            b = np.random.randint(0, 256)
            if np.random.random() >= p_cont:
                b &= 0x7F
            data[j] = b
            ends += b < 128
        # aim at exact-count streams most of the time so decodes can succeed
        r = np.random.random()
        if r < 0.6:
            count = ends
        elif r < 0.8:
            count = max(0, ends - np.random.randint(0, 3))
        else:
            count = np.random.randint(0, n + 2)
        delta = np.random.random() < 0.5
        s1 = vbyte.decode_kernel(data, count, scalar_out, delta, 0)
        s2 = vbyte.decode_masked_kernel(data, count, fast_out, delta, 0)
        if s1 != s2:
            mismatches += 1
        elif s1 == OK:
            decoded += 1
            for i in range(count):
                if scalar_out[i] != fast_out[i]:
                    mismatches += 1
                    break
    return mismatches, decoded


def test_ac8_differential_fuzz():
    trials = 10**6
    start = time.perf_counter()
    mismatches, decoded = _fuzz(SEED, trials, 96)
    # the public wrappers turn equal status codes into equal exception classes
    rng = np.random.default_rng(SEED + 8)
    for _ in range(2000):
        raw = rng.integers(0, 256, size=int(rng.integers(0, 40)), dtype=np.uint8)
        count = int(rng.integers(0, 12))
        outcome = []
        for fn in (vbyte.vbyte_decode, vbyte.vbyte_decode_accelerated):
            try:
                outcome.append(fn(raw, count).tolist())
            except ValueError as exc:
                outcome.append(type(exc))
        if outcome[0] != outcome[1]:
            mismatches += 1
    elapsed = time.perf_counter() - start
    verdict(8, "accelerated vs scalar vbyte", mismatches == 0,
            f"{trials} random byte strings ({decoded} decoded cleanly), {mismatches} mismatches, {elapsed:.1f}s")
    assert mismatches == 0


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-s", "-q", "-p", "no:cacheprovider"]))
