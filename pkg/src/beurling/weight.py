"""Weights: strictly positive submultiplicative functions with value 1 at e."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .group import GroupSpec, word_lengths

__all__ = [
    "InvalidWeightError",
    "Weight",
    "WeightReport",
    "verify_weight",
    "is_symmetric",
    "make_weight",
    "make_length_weight",
    "trivial_weight",
]

# slack for rounding in products like a**l1 * a**l2 vs a**(l1+l2)
SUBMULT_RTOL = 1e-12

_CHUNK = 1 << 20
LENGTH_AUDIT_LIMIT = 1 << 13


class InvalidWeightError(ValueError):
    pass


@dataclass(frozen=True)
class WeightReport:
    ok: bool
    worst_pair: tuple[int, int]
    worst_ratio: float
    identity_ok: bool = True

    def to_json(self) -> dict:
        return {"ok": self.ok, "worst_pair": list(self.worst_pair), "worst_ratio": self.worst_ratio}


@dataclass(frozen=True, eq=False)
class Weight:
    """A weight on ``group``.  Build through :func:`make_weight` or
    :func:`make_length_weight` so that ``verified`` means something."""

    group: GroupSpec
    values: np.ndarray = field(repr=False)
    verified: bool = False
    symmetric: bool = False

    def __post_init__(self):
        v = np.array(self.values, dtype=float)
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, s):
        return self.values[s]

    def __eq__(self, other):
        if not isinstance(other, Weight):
            return NotImplemented
        return self.group == other.group and np.array_equal(self.values, other.values)

    def __hash__(self):
        return hash((self.group, self.values.tobytes()))

    def to_json(self) -> list[float]:
        return self.values.tolist()


def _as_values(G: GroupSpec, values) -> np.ndarray:
    v = np.asarray(values, dtype=float)
    if v.ndim != 1 or v.shape[0] != G.order:
        raise InvalidWeightError(f"weight must have length {G.order}, got shape {v.shape}")
    if not np.all(np.isfinite(v)) or np.any(v <= 0):
        raise InvalidWeightError("weight values must be finite and strictly positive")
    return v


def verify_weight(G: GroupSpec, values, rtol: float = SUBMULT_RTOL) -> WeightReport:
    """Exhaustive check of w(e) == 1 and w(st) <= w(s) w(t) over all n^2 pairs.

    ``worst_ratio`` is max w(st) / (w(s) w(t)); ``worst_pair`` is the first pair
    (row-major) attaining it.
    """
    v = _as_values(G, values)
    n = G.order
    idx = np.arange(n)
    worst, pair = -np.inf, (0, 0)
    rows = max(1, _CHUNK // n)
    for start in range(0, n, rows):
        s = idx[start:start + rows]
        st = G.mul(s[:, None], idx[None, :])
        ratio = v[st] / (v[s][:, None] * v[None, :])
        k = int(np.argmax(ratio))
        r = float(ratio.flat[k])
        if r > worst:
            worst = r
            pair = (int(s[k // n]), int(k % n))
    identity_ok = bool(v[G.identity] == 1.0)
    ok = identity_ok and worst <= 1.0 + rtol
    return WeightReport(ok=ok, worst_pair=pair, worst_ratio=worst, identity_ok=identity_ok)


def _symmetric(G: GroupSpec, v: np.ndarray) -> bool:
    return bool(np.array_equal(v[G.inverse_table], v))


def is_symmetric(G: GroupSpec, w) -> bool:
    """Exact test of w(s^-1) == w(s)."""
    v = w.values if isinstance(w, Weight) else _as_values(G, w)
    return _symmetric(G, v)


def make_weight(G: GroupSpec, values, rtol: float = SUBMULT_RTOL) -> Weight:
    """Validate ``values`` and return a verified :class:`Weight`.

    Weights with w(e) != 1 are rejected, never rescaled.
    """
    v = _as_values(G, values)
    rep = verify_weight(G, v, rtol=rtol)
    if not rep.identity_ok:
        raise InvalidWeightError(f"invalid weight: w(e) = {v[G.identity]!r}, must be 1")
    if not rep.ok:
        s, t = rep.worst_pair
        raise InvalidWeightError(
            f"invalid weight: not submultiplicative at ({s}, {t}), ratio {rep.worst_ratio:.6g}")
    return Weight(G, v, verified=True, symmetric=_symmetric(G, v))


def trivial_weight(G: GroupSpec) -> Weight:
    return Weight(G, np.ones(G.order), verified=True, symmetric=True)


def make_length_weight(G: GroupSpec, generators: Iterable[int], form: str = "exponential",
                       param: float = 2.0) -> Weight:
    """Weight from the word length l over an inverse-closed generating set.

    ``form="exponential"`` gives ``param ** l`` (param >= 1),
    ``form="polynomial"`` gives ``(1 + l) ** param`` (param >= 0).
    Submultiplicativity holds by construction; the exhaustive audit is still
    run when the group has at most ``LENGTH_AUDIT_LIMIT`` elements.
    """
    gens = sorted({int(g) for g in generators})
    for g in gens:
        G.check(g)
    inv = set(int(i) for i in G.inverse_table[gens]) if gens else set()
    if not inv <= set(gens):
        raise InvalidWeightError("generator set must be closed under inverses")
    lengths = word_lengths(G, gens)
    if np.any(lengths < 0):
        raise InvalidWeightError("generators do not generate the group")
    if form == "exponential":
        if param < 1:
            raise InvalidWeightError("exponential base must be >= 1")
        v = float(param) ** lengths.astype(float)
    elif form == "polynomial":
        if param < 0:
            raise InvalidWeightError("polynomial exponent must be >= 0")
        v = (1.0 + lengths.astype(float)) ** float(param)
    else:
        raise InvalidWeightError(f"unknown weight form {form!r}")
    if G.order > LENGTH_AUDIT_LIMIT:
        # subadditive length composed with a monotone submultiplicative map
        return Weight(G, v, verified=True, symmetric=True)
    return make_weight(G, v)
