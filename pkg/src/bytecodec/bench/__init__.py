"""Benchmark harness: synthetic data, timing, reports and figures."""

from __future__ import annotations

from pathlib import Path

from .config import DEFAULT_CONFIG, ConfigError, parse_config
from .data import SyntheticSpec, generate
from .harness import (
    BenchConfig,
    BenchReport,
    BenchRow,
    CorrectnessError,
    measure_decode,
    measure_queries,
    run_suite,
    throughput_checks,
)
from .report import write_csv, write_decode_dat, write_seek_dat


def emit(report: BenchReport, out_dir) -> list[Path]:
    """Write ``report.csv``, the ``.dat`` files and PNG figures into ``out_dir``."""
    from . import plotting

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = [
        write_csv(report, out / "report.csv"),
        write_decode_dat(report, out / "decode.dat"),
        write_seek_dat(report, out / "seek_select.dat"),
    ]
    for fn, name in (
        (plotting.plot_decode_speed, "decode_speed.png"),
        (plotting.plot_extra_bits, "extra_bits.png"),
        (plotting.plot_seek_select, "seek_select.png"),
    ):
        path = fn(report, out / name)
        if path is not None:
            written.append(path)
    return written


__all__ = [
    "DEFAULT_CONFIG", "BenchConfig", "BenchReport", "BenchRow", "ConfigError",
    "CorrectnessError", "SyntheticSpec", "emit", "generate", "measure_decode",
    "measure_queries", "parse_config", "run_suite", "throughput_checks",
]
