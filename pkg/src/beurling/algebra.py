"""The weighted group algebra with the weight-dependent convolution.

For a finite group G with counting measure and a weight w,

    (f *_w g)(t) = sum_s f(s) g(s^-1 t) w(s) w(s^-1 t) / w(t)

The map sigma(f) = f w carries *_w onto the classical convolution, which is
what the FFT fast path exploits on products of cyclic groups.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .group import GroupError, GroupSpec
from .weight import Weight, trivial_weight

__all__ = [
    "ContextMismatchError",
    "UnsupportedGroupError",
    "AlgElement",
    "element",
    "delta",
    "zero",
    "conv_w_naive",
    "conv_classical",
    "conv_w_fast",
    "involution",
    "sigma",
    "sigma_inv",
    "norm_w1",
    "norm_triple_p",
    "norm_script_p",
    "rel_err",
]

DEFAULT_TOL = 1e-10

# entries of the s^-1 t index block materialised per step
_BLOCK = 1 << 20


class ContextMismatchError(ValueError):
    pass


class UnsupportedGroupError(GroupError):
    pass


@dataclass(frozen=True, eq=False)
class AlgElement:
    """A complex function on ``weight.group``, viewed as an element of the
    weighted algebra defined by ``weight``."""

    coeffs: np.ndarray = field(repr=False)
    weight: Weight

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex)
        if c.shape != (self.weight.group.order,):
            raise ValueError(
                f"coefficient vector must have shape ({self.weight.group.order},), got {c.shape}")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def group(self) -> GroupSpec:
        return self.weight.group

    def _same(self, other: "AlgElement"):
        _check_context(self, other)

    def __add__(self, other):
        self._same(other)
        return AlgElement(self.coeffs + other.coeffs, self.weight)

    def __sub__(self, other):
        self._same(other)
        return AlgElement(self.coeffs - other.coeffs, self.weight)

    def __neg__(self):
        return AlgElement(-self.coeffs, self.weight)

    def __mul__(self, c):
        if isinstance(c, AlgElement):
            return NotImplemented
        return AlgElement(complex(c) * self.coeffs, self.weight)

    __rmul__ = __mul__

    def __matmul__(self, other):
        return conv_w_naive(self, other)

    def __repr__(self):
        return f"AlgElement({np.array2string(self.coeffs, precision=4)}, {self.group!r})"

    def to_json(self) -> list[list[float]]:
        return [[float(z.real), float(z.imag)] for z in self.coeffs]


def _check_context(f: AlgElement, g: AlgElement):
    if f.weight is not g.weight and f.weight != g.weight:
        raise ContextMismatchError("elements live in different (group, weight) contexts")


def element(weight: Weight, coeffs) -> AlgElement:
    return AlgElement(coeffs, weight)


def delta(weight: Weight, t: int) -> AlgElement:
    weight.group.check(t)
    c = np.zeros(weight.group.order, dtype=complex)
    c[t] = 1.0
    return AlgElement(c, weight)


def zero(weight: Weight) -> AlgElement:
    return AlgElement(np.zeros(weight.group.order, dtype=complex), weight)


def _left_quotient_blocks(G: GroupSpec):
    """Yield ``(s, J)`` with ``J[i, t] = s[i]^-1 t`` in row blocks."""
    n = G.order
    idx = np.arange(n, dtype=np.int64)
    rows = max(1, _BLOCK // n)
    for start in range(0, n, rows):
        s = idx[start:start + rows]
        yield s, G.mul(G.inv(s)[:, None], idx[None, :])


def conv_w_naive(f: AlgElement, g: AlgElement) -> AlgElement:
    """Direct O(n^2) evaluation of the weight-dependent convolution."""
    _check_context(f, g)
    w = f.weight.values
    fc, gc = f.coeffs, g.coeffs
    out = np.zeros(f.group.order, dtype=complex)
    for s, J in _left_quotient_blocks(f.group):
        # divide before multiplying: w(s) w(s^-1 t) alone can overflow
        kernel = (w[s][:, None] / w[None, :]) * w[J]
        out += np.einsum("i,it->t", fc[s], gc[J] * kernel)
    return AlgElement(out, f.weight)


def conv_classical(f: AlgElement, g: AlgElement) -> AlgElement:
    """Unweighted convolution sum_s f(s) g(s^-1 t); the result keeps f's context."""
    _check_context(f, g)
    fc, gc = f.coeffs, g.coeffs
    out = np.zeros(f.group.order, dtype=complex)
    for s, J in _left_quotient_blocks(f.group):
        out += fc[s] @ gc[J]
    return AlgElement(out, f.weight)


def involution(f: AlgElement) -> AlgElement:
    """f*(s) = conj(f(s^-1)); the modular factor is 1 on discrete groups."""
    return AlgElement(np.conj(f.coeffs[f.group.inverse_table]), f.weight)


def sigma(f: AlgElement) -> AlgElement:
    """Pointwise multiplication by the weight, landing in the unweighted algebra."""
    return AlgElement(f.coeffs * f.weight.values, trivial_weight(f.group))


def sigma_inv(h: AlgElement, weight: Weight) -> AlgElement:
    if h.group != weight.group:
        raise ContextMismatchError("weight lives on a different group")
    return AlgElement(h.coeffs / weight.values, weight)


def _fft_shape(G: GroupSpec) -> tuple[int, ...]:
    if G.kind != "cyclic_product":
        raise UnsupportedGroupError("fast path needs a cyclic_product group")
    return G.moduli


def conv_w_fast(f: AlgElement, g: AlgElement) -> AlgElement:
    """Weighted convolution as sigma^-1( fftconv(sigma f, sigma g) )."""
    _check_context(f, g)
    shape = _fft_shape(f.group)
    w = f.weight.values
    a = np.fft.fftn((f.coeffs * w).reshape(shape))
    b = np.fft.fftn((g.coeffs * w).reshape(shape))
    h = np.fft.ifftn(a * b).reshape(-1)
    return AlgElement(h / w, f.weight)


def norm_w1(f: AlgElement) -> float:
    return float(np.sum(np.abs(f.coeffs) * f.weight.values))


def _check_p(p):
    if not p >= 1:
        raise ValueError(f"p must be >= 1, got {p}")


def norm_triple_p(f: AlgElement, p: float) -> float:
    """(sum |f|^p w)^(1/p), the L^p norm for the measure w dmu."""
    _check_p(p)
    return float(np.sum(np.abs(f.coeffs) ** p * f.weight.values) ** (1.0 / p))


def norm_script_p(f: AlgElement, p: float) -> float:
    """(sum |f|^p w^p)^(1/p) = ||f w||_p."""
    _check_p(p)
    return float(np.sum(np.abs(f.coeffs * f.weight.values) ** p) ** (1.0 / p))


def rel_err(a: AlgElement, b: AlgElement) -> float:
    """||a - b||_{w,1} relative to the larger of the two norms (0 if both vanish)."""
    _check_context(a, b)
    scale = max(norm_w1(a), norm_w1(b))
    diff = norm_w1(a - b)
    if scale == 0.0:
        return diff
    return diff / scale
