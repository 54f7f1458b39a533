"""Figures for benchmark reports (written to files, never shown)."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .harness import BenchReport  # noqa: E402
from .report import vbyte_bits  # noqa: E402

STYLE = {
    "svb": dict(marker="o", color="tab:red"),
    "g8iu": dict(marker="s", color="tab:blue"),
    "gb": dict(marker="^", color="tab:green"),
    "vbyte": dict(marker="v", color="tab:purple"),
    "memcpy": dict(marker="x", color="0.4", linestyle="--"),
}


def _finish(fig, ax, path):
    ax.grid(True, alpha=0.3)
    ax.legend(frameon=False, fontsize="small")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return Path(path)


def plot_decode_speed(report: BenchReport, path) -> Path | None:
    ref = vbyte_bits(report)
    if not ref:
        return None
    fig, ax = plt.subplots(figsize=(5.5, 4))
    for codec in dict.fromkeys(r.codec for r in report.select_rows("decode")):
        rows = sorted(
            (r for r in report.select_rows("decode", codec) if r.dataset in ref),
            key=lambda r: ref[r.dataset],
        )
        ax.plot([ref[r.dataset] for r in rows], [r.decode_mips / 1e3 for r in rows],
                label=codec, **STYLE.get(codec, {}))
    ax.set_xlabel("bits per integer (VByte)")
    ax.set_ylabel("decoding speed (Bis)")
    return _finish(fig, ax, path)


def plot_extra_bits(report: BenchReport, path) -> Path | None:
    ref = vbyte_bits(report)
    if not ref:
        return None
    fig, ax = plt.subplots(figsize=(5.5, 4))
    for codec in ("svb", "gb", "g8iu"):
        rows = sorted(
            (r for r in report.select_rows("decode", codec) if r.dataset in ref),
            key=lambda r: ref[r.dataset],
        )
        if rows:
            ax.plot([ref[r.dataset] for r in rows], [r.bits_per_int - ref[r.dataset] for r in rows],
                    label=codec, **STYLE.get(codec, {}))
    ax.axhline(0, color="0.5", lw=0.8)
    ax.set_xlabel("bits per integer (VByte)")
    ax.set_ylabel("extra bits per integer vs VByte")
    return _finish(fig, ax, path)


def plot_seek_select(report: BenchReport, path) -> Path | None:
    rows = report.select_rows("seek_select")
    if not rows:
        return None
    fig, (left, right) = plt.subplots(1, 2, figsize=(10, 4), sharex=True)
    for codec in dict.fromkeys(r.codec for r in rows):
        mine = report.select_rows("seek_select", codec)
        bits = [int(r.dataset.rsplit("b", 1)[1]) for r in mine]
        left.plot(bits, [r.seek_mops for r in mine], label=codec, **STYLE.get(codec, {}))
        right.plot(bits, [r.select_mops for r in mine], label=codec, **STYLE.get(codec, {}))
    left.set_title("seek")
    right.set_title("select")
    for ax in (left, right):
        ax.set_xlabel("bit width of deltas")
        ax.set_ylabel("million queries per second")
        ax.grid(True, alpha=0.3)
    left.legend(frameon=False, fontsize="small")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return Path(path)
