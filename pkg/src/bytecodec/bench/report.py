"""CSV and gnuplot ``.dat`` emission for benchmark reports."""

from __future__ import annotations

import csv
from pathlib import Path

from .harness import BenchReport

CSV_COLUMNS = [
    "codec", "dataset", "n", "bits_per_int", "decode_mips",
    "seek_mops", "select_mops", "reps", "min", "median", "max",
]


def _fmt(value):
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.6g}"
    return value


def write_csv(report: BenchReport, path) -> Path:
    path = Path(path)
    with path.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(CSV_COLUMNS)
        for row in report.rows:
            w.writerow([_fmt(getattr(row, c)) for c in CSV_COLUMNS])
    return path


def vbyte_bits(report: BenchReport) -> dict[str, float]:
    return {r.dataset: r.bits_per_int for r in report.select_rows("decode", "vbyte")}


def write_decode_dat(report: BenchReport, path) -> Path:
    """One gnuplot index block per codec: VByte bits/int, bits/int, extra bits, Bis."""
    path = Path(path)
    ref = vbyte_bits(report)
    codecs = list(dict.fromkeys(r.codec for r in report.select_rows("decode")))
    with path.open("w") as fh:
        fh.write("# vbyte_bits_per_int bits_per_int extra_bits_vs_vbyte bis dataset\n")
        for codec in codecs:
            fh.write(f"# codec {codec}\n")
            rows = sorted(
                (r for r in report.select_rows("decode", codec) if r.dataset in ref),
                key=lambda r: ref[r.dataset],
            )
            for r in rows:
                x = ref[r.dataset]
                fh.write(f"{x:.4f} {r.bits_per_int:.4f} {r.bits_per_int - x:.4f} {r.decode_mips / 1e3:.4f} {r.dataset}\n")
            fh.write("\n\n")
    return path


def write_seek_dat(report: BenchReport, path) -> Path:
    path = Path(path)
    rows = report.select_rows("seek_select")
    codecs = list(dict.fromkeys(r.codec for r in rows))
    with path.open("w") as fh:
        fh.write("# bit_width seek_mops select_mops decode_mips\n")
        for codec in codecs:
            fh.write(f"# codec {codec}\n")
            for r in report.select_rows("seek_select", codec):
                b = int(r.dataset.rsplit("b", 1)[1])
                fh.write(f"{b} {r.seek_mops:.4f} {r.select_mops:.4f} {r.decode_mips:.4f}\n")
            fh.write("\n\n")
    return path
