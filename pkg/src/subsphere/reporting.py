"""Small shared report structures and JSON-serialization helpers."""

from __future__ import annotations

import dataclasses
import hashlib
import json
from dataclasses import dataclass, field

import numpy as np

__all__ = ["CheckResult", "to_jsonable", "canonical_json", "config_hash"]


@dataclass
class CheckResult:
    """Outcome of one named numerical check."""

    name: str
    worst: float
    tolerance: float
    passed: bool
    info: dict = field(default_factory=dict)


def to_jsonable(obj):
    """Recursively convert dataclasses / numpy values into JSON-safe types."""
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [to_jsonable(v) for v in obj.tolist()]
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, float) and not np.isfinite(obj):
        return repr(obj)  # "inf" / "-inf" / "nan" stay readable in JSON
    return obj


def canonical_json(payload: dict) -> str:
    """Deterministic JSON text (sorted keys, fixed separators, newline)."""
    return json.dumps(to_jsonable(payload), sort_keys=True, indent=2) + "\n"


def config_hash(config: dict) -> str:
    """sha256 of the canonical form of a config dict."""
    text = json.dumps(to_jsonable(config), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode("utf-8")).hexdigest()
