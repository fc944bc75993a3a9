"""Run configuration: caps, seed, catalog override and output format.

An optional config file holds ``key = value`` lines; command-line flags win.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass, replace
from enum import Enum
from pathlib import Path

from .algebra import DEFAULT_ENUM_CAP
from .errors import InvalidArgument
from .structures import DEFAULT_MAX_ORDER


class Output(str, Enum):
    TEXT = "text"
    JSON = "json"


@dataclass(frozen=True)
class RunConfig:
    max_group_order: int = DEFAULT_MAX_ORDER
    max_enum_elements: int = DEFAULT_ENUM_CAP
    seed: int = 0
    catalog: Path | None = None
    output: Output = Output.TEXT
    witness_count: int = 100
    timings: bool = False

    def __post_init__(self):
        for name in ("max_group_order", "max_enum_elements", "witness_count"):
            if getattr(self, name) <= 0:
                raise InvalidArgument(f"{name} must be positive, got {getattr(self, name)}")

    def merged(self, **overrides) -> RunConfig:
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


_INT_KEYS = {"max_group_order", "max_enum_elements", "seed", "witness_count"}


def load_config(path: str | Path) -> RunConfig:
    parser = configparser.ConfigParser()
    try:
        parser.read_string("[run]\n" + Path(path).read_text())
    except configparser.Error as exc:
        raise InvalidArgument(f"bad config file {path}: {exc}") from None
    values: dict = {}
    for key, raw in parser["run"].items():
        if key in _INT_KEYS:
            try:
                values[key] = int(raw)
            except ValueError:
                raise InvalidArgument(f"config key {key} needs an integer, got {raw!r}") from None
        elif key == "catalog":
            values[key] = Path(raw)
        elif key == "output":
            values[key] = Output(raw.lower())
        elif key == "timings":
            values[key] = parser["run"].getboolean(key)
        else:
            raise InvalidArgument(f"unknown config key {key!r}")
    return RunConfig(**values)
