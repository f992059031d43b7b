"""Run configuration: caps and output format, with ISOB_* env overrides."""

from __future__ import annotations

import os
from dataclasses import dataclass

ENV_PREFIX = "ISOB_"

DEFAULT_ORBIT_CAP = 10**7
DEFAULT_FREUDENTHAL_CAP = 10**5
DEFAULT_KERNEL_SEARCH_BOUND = 6


@dataclass(frozen=True)
class RunConfig:
    orbit_cap: int = DEFAULT_ORBIT_CAP
    freudenthal_cap: int = DEFAULT_FREUDENTHAL_CAP
    kernel_search_bound: int = DEFAULT_KERNEL_SEARCH_BOUND
    output_format: str = "text"  # "text" | "json"

    def __post_init__(self):
        if self.orbit_cap <= 0 or self.freudenthal_cap <= 0 or self.kernel_search_bound <= 0:
            raise ValueError("caps must be positive")
        if self.output_format not in ("text", "json"):
            raise ValueError("output_format must be 'text' or 'json'")


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(ENV_PREFIX + name)
    return int(raw) if raw else fallback


def from_env(**overrides) -> RunConfig:
    """Config from environment, with explicit keyword overrides winning."""
    values = {
        "orbit_cap": _env_int("ORBIT_CAP", DEFAULT_ORBIT_CAP),
        "freudenthal_cap": _env_int("FREUDENTHAL_CAP", DEFAULT_FREUDENTHAL_CAP),
        "kernel_search_bound": _env_int("KERNEL_BOUND", DEFAULT_KERNEL_SEARCH_BOUND),
        "output_format": os.environ.get(ENV_PREFIX + "FORMAT", "text"),
    }
    values.update({k: v for k, v in overrides.items() if v is not None})
    return RunConfig(**values)
