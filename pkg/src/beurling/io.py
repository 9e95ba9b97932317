"""JSON wire formats.

group:    {"type": "cyclic_product", "moduli": [4]} | {"type": "cayley_table", "table": [[...]]}
weight:   [w_0, ..., w_{n-1}]
function: [[re, im], ...]  (bare reals are accepted on input)
rep:      {"dim": d, "matrices": {"<index>": [[[re, im], ...], ...]}}
"""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .algebra import AlgElement
from .group import GroupSpec
from .weight import InvalidWeightError, Weight, make_weight, trivial_weight


class FormatError(ValueError):
    pass


def _load(path) -> object:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


def load_group(path) -> GroupSpec:
    obj = _load(path)
    if not isinstance(obj, dict):
        raise FormatError("group file must hold a JSON object")
    return GroupSpec.from_json(obj)


def parse_weight_values(obj) -> np.ndarray:
    if isinstance(obj, dict) and "values" in obj:
        obj = obj["values"]
    if not isinstance(obj, list):
        raise FormatError("weight must be a JSON array of positive numbers")
    try:
        return np.asarray(obj, dtype=float)
    except (TypeError, ValueError) as exc:
        raise InvalidWeightError(f"invalid weight: {exc}") from exc


def load_weight(G: GroupSpec, path=None) -> Weight:
    if path is None:
        return trivial_weight(G)
    return make_weight(G, parse_weight_values(_load(path)))


def parse_function(obj, n: int) -> np.ndarray:
    if not isinstance(obj, list) or len(obj) != n:
        raise FormatError(f"function must be a JSON array of length {n}")
    out = np.empty(n, dtype=complex)
    for i, z in enumerate(obj):
        if isinstance(z, (int, float)):
            out[i] = z
        elif isinstance(z, list) and len(z) == 2:
            out[i] = complex(float(z[0]), float(z[1]))
        else:
            raise FormatError(f"entry {i} is neither a number nor an [re, im] pair")
    return out


def load_function(weight: Weight, path) -> AlgElement:
    return AlgElement(parse_function(_load(path), weight.group.order), weight)


def complex_list(z) -> list[list[float]]:
    return [[float(c.real), float(c.imag)] for c in np.asarray(z).ravel()]


def dump(obj, compact: bool = False) -> str:
    if compact:
        return json.dumps(obj, separators=(",", ":"))
    return json.dumps(obj, indent=2)
