"""Size guards for the exhaustive sweeps.

Defaults can be overridden through the ``CONNWIDTH_GUARDS`` environment
variable, which accepts either a JSON object, a path to a JSON file, or a
comma-separated ``key=value`` list.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, fields, replace
from pathlib import Path

ENV_VAR = "CONNWIDTH_GUARDS"


@dataclass(frozen=True)
class Guards:
    max_explicit_n: int = 24
    max_validate_n: int = 13
    max_dp_n: int = 24
    max_bruteforce_n: int = 9
    max_efficient: int = 22
    max_pairs: int = 20
    max_mismatches: int = 100

    def updated(self, overrides: dict) -> "Guards":
        known = {f.name for f in fields(self)}
        unknown = set(overrides) - known
        if unknown:
            raise ValueError(f"unknown guard(s): {', '.join(sorted(unknown))}")
        return replace(self, **{key: int(val) for key, val in overrides.items()})


class GuardExceeded(RuntimeError):
    """A size guard refused to start an exponential sweep."""

    def __init__(self, guard: str, limit: int, actual: int):
        self.guard = guard
        self.limit = limit
        self.actual = actual
        super().__init__(f"{guard} exceeded: {actual} > {limit}")


def parse_overrides(text: str) -> dict:
    text = text.strip()
    if not text:
        return {}
    if text.startswith("{"):
        return dict(json.loads(text))
    path = Path(text)
    if path.is_file():
        return dict(json.loads(path.read_text()))
    out = {}
    for item in text.split(","):
        key, sep, val = item.partition("=")
        if not sep:
            raise ValueError(f"malformed guard override {item!r}; expected key=value")
        out[key.strip()] = int(val)
    return out


def load_guards(env: dict | None = None) -> Guards:
    env = os.environ if env is None else env
    raw = env.get(ENV_VAR)
    if not raw:
        return Guards()
    return Guards().updated(parse_overrides(raw))


def default_guards() -> Guards:
    return load_guards()
