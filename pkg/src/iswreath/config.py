"""Size bounds for exhaustive sweeps.

Bounds are read from a ``key=value`` file. The path comes from an explicit
argument, else the ``IW_CONFIG`` environment variable; without either the
defaults below are used.
"""
from __future__ import annotations

import dataclasses
import os
from dataclasses import dataclass
from pathlib import Path

ENV_VAR = "IW_CONFIG"


@dataclass(frozen=True)
class Bounds:
    max_n: int = 4                 # full enumeration of IS_n
    max_wreath_m: int = 2          # full sweeps of IS_m wr IS_n
    max_wreath_n: int = 2
    spot_wreath_m: int = 2         # enumeration allowed with spot=True
    spot_wreath_n: int = 3
    max_iso_size: int = 64         # find_isomorphisms / classify
    max_oracle_size: int = 256     # find_all_cross_sections
    max_oracle_classes: int = 32
    max_validate_n: int = 8


DEFAULT_BOUNDS = Bounds()


def parse_config(text: str) -> Bounds:
    fields = {f.name for f in dataclasses.fields(Bounds)}
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"config line {lineno}: expected key=value, got {raw!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in fields:
            raise ValueError(f"config line {lineno}: unknown key {key!r}")
        values[key] = int(value)
    return dataclasses.replace(DEFAULT_BOUNDS, **values)


def load_bounds(path: str | os.PathLike | None = None) -> Bounds:
    if path is None:
        path = os.environ.get(ENV_VAR)
    if not path:
        return DEFAULT_BOUNDS
    return parse_config(Path(path).read_text())
