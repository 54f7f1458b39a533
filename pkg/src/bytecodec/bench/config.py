"""Flat key-value configuration for ``bench run``.

Example::

    # codecs to time, comma separated (vbyte, gb, g8iu, svb)
    codecs = vbyte, gb, g8iu, svb
    delta = yes
    repetitions = 11
    seed = 7
    # one line per dataset: generator, then key=value parameters
    dataset = clustered_gaps mean_gap=8 burstiness=0.3 n=1048576
    dataset = uniform_bitwidth b=4 n=1048576 cumulative
    # seek/select sweep over bit widths (ranges allowed)
    seek_bitwidths = 1-24
    seek_queries = 10000

Other keys: ``memcpy`` (yes/no, add the copy baseline), ``chunk`` (integers
per decode call, default 4096) and ``seek_n`` (array length for the seek
sweep, default 256).
"""

from __future__ import annotations

from .data import SyntheticSpec
from .harness import DEFAULT_CHUNK, MIN_REPETITIONS, BenchConfig
from ..model import CodecId


class ConfigError(ValueError):
    pass


DEFAULT_CONFIG = """\
codecs = vbyte, gb, g8iu, svb
delta = yes
repetitions = 11
seed = 1
memcpy = yes
dataset = uniform_bitwidth b=4 n=1048576 cumulative
dataset = clustered_gaps mean_gap=2 burstiness=0.5 n=1048576
dataset = clustered_gaps mean_gap=16 burstiness=0.5 n=1048576
dataset = clustered_gaps mean_gap=128 burstiness=0.5 n=1048576
dataset = clustered_gaps mean_gap=1024 burstiness=0.3 n=1048576
dataset = clustered_gaps mean_gap=4096 burstiness=0.1 n=524288
dataset = clustered_gaps mean_gap=65536 burstiness=0.0 n=32768
seek_bitwidths = 1-24
seek_queries = 10000
"""

_BOOL = {"yes": True, "true": True, "1": True, "on": True, "no": False, "false": False, "0": False, "off": False}


def _bool(key, value):
    try:
        return _BOOL[value.lower()]
    except KeyError:
        raise ConfigError(f"{key}: expected yes/no, got {value!r}") from None


def _int(key, value):
    try:
        return int(value)
    except ValueError:
        raise ConfigError(f"{key}: expected an integer, got {value!r}") from None


def _int_list(key, value):
    out = []
    for part in filter(None, (p.strip() for p in value.split(","))):
        if "-" in part:
            lo, hi = part.split("-", 1)
            out.extend(range(_int(key, lo), _int(key, hi) + 1))
        else:
            out.append(_int(key, part))
    return out


def _dataset(value, seed):
    fields = value.split()
    if not fields:
        raise ConfigError("dataset: empty definition")
    generator, params, n, cumulative = fields[0], {}, None, False
    for item in fields[1:]:
        if item == "cumulative":
            cumulative = True
            continue
        if "=" not in item:
            raise ConfigError(f"dataset: cannot parse {item!r}")
        k, v = item.split("=", 1)
        if k == "n":
            n = _int("n", v)
        elif k == "seed":
            seed = _int("seed", v)
        else:
            try:
                params[k] = int(v)
            except ValueError:
                try:
                    params[k] = float(v)
                except ValueError:
                    raise ConfigError(f"dataset: bad value for {k}: {v!r}") from None
    if n is None:
        raise ConfigError(f"dataset {value!r}: n= is required")
    try:
        return SyntheticSpec(generator, n, seed=seed, params=params, cumulative=cumulative)
    except ValueError as exc:
        raise ConfigError(f"dataset {value!r}: {exc}") from None


def parse_config(text: str) -> BenchConfig:
    cfg = BenchConfig()
    datasets = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        if key == "codecs":
            try:
                cfg.codecs = [CodecId.from_name(c.strip()) for c in value.split(",") if c.strip()]
            except ValueError as exc:
                raise ConfigError(f"line {lineno}: {exc}") from None
        elif key == "dataset":
            datasets.append(value)
        elif key == "delta":
            cfg.delta = _bool(key, value)
        elif key == "memcpy":
            cfg.memcpy = _bool(key, value)
        elif key == "repetitions":
            cfg.repetitions = _int(key, value)
        elif key == "chunk":
            cfg.chunk = _int(key, value)
        elif key == "seed":
            cfg.seed = _int(key, value)
        elif key == "seek_bitwidths":
            cfg.seek_bitwidths = _int_list(key, value)
        elif key == "seek_n":
            cfg.seek_n = _int(key, value)
        elif key == "seek_queries":
            cfg.seek_queries = _int(key, value)
        else:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
    if cfg.repetitions < MIN_REPETITIONS:
        raise ConfigError(f"repetitions must be at least {MIN_REPETITIONS}")
    if not 1 <= cfg.chunk <= 1 << 20:
        raise ConfigError(f"chunk out of range: {cfg.chunk}")
    if any(not 1 <= b <= 32 for b in cfg.seek_bitwidths):
        raise ConfigError("seek_bitwidths must lie in 1..32")
    cfg.datasets = [_dataset(v, cfg.seed + i) for i, v in enumerate(datasets)]
    if cfg.chunk != DEFAULT_CHUNK and cfg.chunk % 8:
        raise ConfigError("chunk must be a multiple of 8")
    return cfg
