"""Run configuration: one JSON document, strict keys, dotted overrides.

Each scenario declares which fields it needs; anything unknown anywhere in
the document is rejected so typos cannot silently change a run.
"""

from __future__ import annotations

import json
from pathlib import Path


class ConfigError(ValueError):
    """Invalid, unknown or missing configuration content."""


_FLOAT = ("float",)
_INT = ("int",)
_STR = ("str",)
_LIST = ("list",)

# full key space; section -> field -> expected kind
SCHEMA = {
    "scenario": _STR,
    "output_dir": _STR,
    "seed": _INT,
    "grid": {"n_points": _INT, "q_min": _FLOAT, "q_max": _FLOAT},
    "physics": {
        "m": _FLOAT,
        "h0": _FLOAT,
        "h1": _FLOAT,
        "eps0": _FLOAT,
        "potential": {"kind": _STR, "omega": _FLOAT},
    },
    "dirac": {"m": _FLOAT, "c": _FLOAT, "p": _LIST, "n_draws": _INT},
    "generator": {"mu": _FLOAT, "nu": _FLOAT},
    "schedule": {"t_final": _FLOAT, "dt": _FLOAT, "snapshot_stride": _INT},
    "initial_state": {
        "kind": _STR,
        "center": _FLOAT,
        "width": _FLOAT,
        "momentum": _FLOAT,
        "weights": _LIST,
        "path": _STR,
        "window_center": _FLOAT,
        "window_width": _FLOAT,
    },
    "timeline": {"n": _INT, "xi_bar": _FLOAT},
}

# dotted paths each scenario must be given
REQUIRED = {
    "group-demo": ["seed"],
    "continuum-limit": ["seed", "timeline.n", "timeline.xi_bar"],
    "two-level": ["generator.mu", "generator.nu", "schedule.t_final", "schedule.dt"],
    "pse-free": [
        "grid.n_points", "grid.q_min", "grid.q_max",
        "physics.m", "physics.eps0",
        "schedule.t_final", "schedule.dt", "schedule.snapshot_stride",
        "initial_state.kind",
    ],
    "pse-potential": [
        "grid.n_points", "grid.q_min", "grid.q_max",
        "physics.m", "physics.eps0", "physics.potential.kind",
        "schedule.t_final", "schedule.dt", "schedule.snapshot_stride",
        "initial_state.kind",
    ],
    "nu-zero": [
        "grid.n_points", "grid.q_min", "grid.q_max",
        "physics.m", "physics.eps0",
        "schedule.t_final", "schedule.dt", "schedule.snapshot_stride",
        "initial_state.kind",
    ],
    "dirac-verify": ["seed", "dirac.m", "dirac.c", "dirac.p"],
}

SCENARIO_NAMES = tuple(REQUIRED)


def load_config(path) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ConfigError("config document must be a JSON object")
    return doc


def apply_overrides(doc: dict, assignments) -> dict:
    """Apply ``--set key.path=value`` pairs; values parse as JSON when possible."""
    out = json.loads(json.dumps(doc))  # deep copy of plain JSON data
    for item in assignments:
        if "=" not in item:
            raise ConfigError(f"override {item!r} is not of the form key=value")
        path, raw = item.split("=", 1)
        keys = path.strip().split(".")
        if not all(keys):
            raise ConfigError(f"override {item!r} has an empty key component")
        try:
            value = json.loads(raw)
        except json.JSONDecodeError:
            value = raw
        node = out
        for k in keys[:-1]:
            node = node.setdefault(k, {})
            if not isinstance(node, dict):
                raise ConfigError(f"override {item!r} descends into a non-object")
        node[keys[-1]] = value
    return out


def _check_kind(path: str, value, kind) -> None:
    if kind is _FLOAT:
        ok = isinstance(value, (int, float)) and not isinstance(value, bool)
    elif kind is _INT:
        ok = isinstance(value, int) and not isinstance(value, bool)
    elif kind is _STR:
        ok = isinstance(value, str)
    elif kind is _LIST:
        ok = isinstance(value, list)
    else:  # pragma: no cover - schema bug
        raise AssertionError(kind)
    if not ok:
        raise ConfigError(f"field {path!r} has wrong type (expected {kind[0]})")


def _validate_node(doc: dict, schema: dict, prefix: str = "") -> None:
    for key, value in doc.items():
        path = f"{prefix}{key}"
        if key not in schema:
            raise ConfigError(f"unknown config key {path!r}")
        entry = schema[key]
        if isinstance(entry, dict):
            if not isinstance(value, dict):
                raise ConfigError(f"field {path!r} must be an object")
            _validate_node(value, entry, prefix=path + ".")
        else:
            _check_kind(path, value, entry)


def _lookup(doc: dict, dotted: str):
    node = doc
    for k in dotted.split("."):
        if not isinstance(node, dict) or k not in node:
            return None
        node = node[k]
    return node


class RunConfig:
    """A validated configuration bound to one scenario."""

    def __init__(self, scenario: str, doc: dict):
        if scenario not in REQUIRED:
            raise ConfigError(f"unknown scenario {scenario!r}")
        _validate_node(doc, SCHEMA)
        declared = doc.get("scenario")
        if declared is not None and declared != scenario:
            raise ConfigError(
                f"config declares scenario {declared!r} but {scenario!r} was requested"
            )
        missing = [p for p in REQUIRED[scenario] if _lookup(doc, p) is None]
        if missing:
            raise ConfigError(
                f"scenario {scenario!r} is missing required fields: {', '.join(missing)}"
            )
        self.scenario = scenario
        self.doc = doc

    def get(self, dotted: str, default=None):
        value = _lookup(self.doc, dotted)
        return default if value is None else value

    @property
    def seed(self) -> int:
        return int(self.doc.get("seed", 0))
