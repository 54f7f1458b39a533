"""Command-line interface.

Exit status: 0 on success (or found), 1 when seek/select find nothing or a
benchmark gate fails, 2 on malformed input or bad flags.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

import numpy as np

from . import container
from .codecs import decode, encode
from .model import CodecId, as_u32
from .query import seek, select
from .streamvbyte import svb_append

EXIT_OK = 0
EXIT_NOT_FOUND = 1
EXIT_ERROR = 2


class CliError(Exception):
    pass


def read_values(path: Path) -> np.ndarray:
    suffix = path.suffix.lower()
    if suffix == ".u32le":
        raw = path.read_bytes()
        if len(raw) % 4:
            raise CliError(f"{path}: size {len(raw)} is not a multiple of 4")
        return np.frombuffer(raw, dtype="<u4").astype(np.uint32)
    if suffix == ".txt":
        tokens = path.read_text().split()
        try:
            ints = [int(t) for t in tokens]
        except ValueError as exc:
            raise CliError(f"{path}: {exc}") from None
        return as_u32(np.array(ints, dtype=object)) if ints else np.zeros(0, dtype=np.uint32)
    raise CliError(f"{path}: unknown input format (expected .u32le or .txt)")


def write_values(values: np.ndarray, path: Path) -> None:
    if path.suffix.lower() == ".txt":
        path.write_text("".join(f"{v}\n" for v in values.tolist()))
    else:
        path.write_bytes(values.astype("<u4").tobytes())


def cmd_compress(args) -> int:
    values = read_values(Path(args.input))
    buf = encode(CodecId.from_name(args.codec), values, delta=args.delta)
    container.save(buf, args.output)
    return EXIT_OK


def cmd_decompress(args) -> int:
    buf = container.load(args.input)
    write_values(decode(buf), Path(args.output))
    return EXIT_OK


def cmd_inspect(args) -> int:
    buf = container.load(args.input)
    print(f"codec: {buf.codec.cli_name}")
    print(f"count: {buf.count}")
    print(f"delta: {'yes' if buf.delta else 'no'}")
    print(f"payload_bytes: {len(buf.data)}")
    print(f"bits_per_int: {buf.bits_per_int:.3f}")
    return EXIT_OK


def cmd_append(args) -> int:
    buf = container.load(args.file)
    if buf.codec != CodecId.STREAM_VBYTE:
        raise CliError(f"append requires a Stream VByte container, got {buf.codec.cli_name}")
    container.save(svb_append(buf, args.value), args.file)
    return EXIT_OK


def cmd_seek(args) -> int:
    hit = seek(container.load(args.file), args.target)
    if hit is None:
        print("not-found")
        return EXIT_NOT_FOUND
    print(f"{hit.index} {hit.value}")
    return EXIT_OK


def cmd_select(args) -> int:
    buf = container.load(args.file)
    if not 0 <= args.index < buf.count:
        print("not-found")
        return EXIT_NOT_FOUND
    print(select(buf, args.index))
    return EXIT_OK


def cmd_bench_run(args) -> int:
    from .bench import DEFAULT_CONFIG, emit, parse_config, run_suite, throughput_checks
    from .bench.harness import CorrectnessError

    text = Path(args.config).read_text() if args.config else DEFAULT_CONFIG
    config = parse_config(text)
    try:
        report = run_suite(config)
    except CorrectnessError as exc:
        print(f"correctness gate failed: {exc}", file=sys.stderr)
        return EXIT_NOT_FOUND
    for path in emit(report, args.out):
        print(f"wrote {path}")
    status = EXIT_OK
    for check in throughput_checks(report):
        verdict = "ok" if check.passed else ("FAIL" if args.strict else "below target")
        print(f"{check.faster}/{check.slower} on {check.dataset}: {check.ratio:.2f}x "
              f"(target {check.threshold:.1f}x) {verdict}")
        if args.strict and not check.passed:
            status = EXIT_NOT_FOUND
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bytecodec", description="Byte-oriented integer compression tool.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compress", help="compress .u32le or .txt integers into a container")
    c.add_argument("--codec", required=True, choices=["vbyte", "gb", "g8iu", "svb"])
    c.add_argument("--delta", action="store_true", help="store successive differences")
    c.add_argument("input")
    c.add_argument("output")
    c.set_defaults(func=cmd_compress)

    d = sub.add_parser("decompress", help="restore integers (.txt output is decimal, otherwise .u32le)")
    d.add_argument("input")
    d.add_argument("output")
    d.set_defaults(func=cmd_decompress)

    i = sub.add_parser("inspect", help="print container metadata")
    i.add_argument("input")
    i.set_defaults(func=cmd_inspect)

    a = sub.add_parser("append", help="append one integer to a Stream VByte container")
    a.add_argument("--value", required=True, type=int)
    a.add_argument("file")
    a.set_defaults(func=cmd_append)

    s = sub.add_parser("seek", help="first value >= target")
    s.add_argument("--target", required=True, type=int)
    s.add_argument("file")
    s.set_defaults(func=cmd_seek)

    sel = sub.add_parser("select", help="value at index")
    sel.add_argument("--index", required=True, type=int)
    sel.add_argument("file")
    sel.set_defaults(func=cmd_select)

    b = sub.add_parser("bench", help="throughput and size benchmarks")
    bsub = b.add_subparsers(dest="bench_command", required=True)
    run = bsub.add_parser("run", help="run a benchmark suite")
    run.add_argument("--config", help="flat key=value config file (default: built-in suite)")
    run.add_argument("--out", required=True, help="output directory for CSV, .dat and figures")
    run.add_argument("--strict", action="store_true", help="fail when throughput ratios miss their targets")
    run.set_defaults(func=cmd_bench_run)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except (CliError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
