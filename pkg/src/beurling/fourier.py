"""Characters of Z_{m_1} x ... x Z_{m_d} and the weighted Fourier transform.

Character k acts by chi_k(s) = exp(2 pi i sum_j k_j s_j / m_j).  Characters
are indexed exactly like group elements (mixed radix over the same moduli),
so ``fourier_w(f)[i]`` is the transform at the character whose frequency
tuple is ``G.to_tuple(i)``.

    fhat_w(chi) = sum_s f(s) conj(chi(s)) w(s)

which is the ordinary transform of f w; the fast path is ``np.fft.fftn``
(negative exponent) applied to f w reshaped to the moduli.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .algebra import AlgElement, UnsupportedGroupError
from .group import GroupSpec

__all__ = [
    "Character",
    "characters",
    "char_value",
    "char_table",
    "fourier_w",
    "fourier_w_fast",
    "mult_functional",
    "functional_matrix",
    "min_functional_separation",
]

_BLOCK = 1 << 20


def _require_dual(G: GroupSpec):
    if G.kind != "cyclic_product":
        raise UnsupportedGroupError("characters are only materialised for cyclic_product groups")


class Character(tuple):
    """Frequency tuple (k_1, ..., k_d), 0 <= k_j < m_j."""

    def __new__(cls, freqs: Sequence[int]):
        return super().__new__(cls, (int(k) for k in freqs))

    def index(self, G: GroupSpec) -> int:
        return G.from_tuple(self)


def characters(G: GroupSpec) -> list[Character]:
    _require_dual(G)
    return [Character(G.to_tuple(i)) for i in range(G.order)]


def _phase_numerators(G: GroupSpec, k: np.ndarray, s: np.ndarray) -> np.ndarray:
    """Integer r with chi_k(s) = exp(2 pi i r / n), reduced mod n."""
    n = G.order
    kd = G.digits(k)
    sd = G.digits(s)
    scale = np.array([n // m for m in G.moduli], dtype=np.int64).reshape((-1,) + (1,) * (kd.ndim - 1))
    # integer arithmetic keeps the phase exact before the exp
    return (kd * sd * scale).sum(axis=0) % n


def char_table(G: GroupSpec, ks=None, ss=None) -> np.ndarray:
    """Values chi_k(s) for k in ``ks`` (rows) and s in ``ss`` (cols)."""
    _require_dual(G)
    ks = np.arange(G.order) if ks is None else np.asarray(ks, dtype=np.int64)
    ss = np.arange(G.order) if ss is None else np.asarray(ss, dtype=np.int64)
    r = _phase_numerators(G, ks[:, None], ss[None, :])
    return np.exp(2j * np.pi * r / G.order)


def char_value(G: GroupSpec, chi: Sequence[int] | int, s: int) -> complex:
    _require_dual(G)
    k = chi if isinstance(chi, (int, np.integer)) else Character(chi).index(G)
    G.check(k)
    G.check(s)
    return complex(char_table(G, [k], [s])[0, 0])


def fourier_w(f: AlgElement) -> np.ndarray:
    """Direct O(n^2) summation over the character table."""
    G = f.group
    _require_dual(G)
    h = f.coeffs * f.weight.values
    n = G.order
    out = np.empty(n, dtype=complex)
    rows = max(1, _BLOCK // n)
    for start in range(0, n, rows):
        ks = np.arange(start, min(n, start + rows))
        out[ks] = np.conj(char_table(G, ks)) @ h
    return out


def fourier_w_fast(f: AlgElement) -> np.ndarray:
    G = f.group
    _require_dual(G)
    h = (f.coeffs * f.weight.values).reshape(G.moduli)
    return np.fft.fftn(h).reshape(-1)


def mult_functional(chi: Sequence[int] | int, f: AlgElement) -> complex:
    """The multiplicative functional attached to ``chi``, evaluated at f."""
    G = f.group
    _require_dual(G)
    k = chi if isinstance(chi, (int, np.integer)) else Character(chi).index(G)
    G.check(k)
    row = np.conj(char_table(G, [k]))[0]
    return complex(row @ (f.coeffs * f.weight.values))


def functional_matrix(weight) -> np.ndarray:
    """M[k, t] = d_k(delta_t / w(t)); row k determines functional k on a basis."""
    G = weight.group
    _require_dual(G)
    n = G.order
    M = np.empty((n, n), dtype=complex)
    for t in range(n):
        basis = np.zeros(n, dtype=complex)
        basis[t] = 1.0 / weight.values[t]
        M[:, t] = fourier_w(AlgElement(basis, weight))
    return M


def min_functional_separation(weight) -> float:
    """Smallest sup-norm distance between two distinct rows of :func:`functional_matrix`."""
    M = functional_matrix(weight)
    n = M.shape[0]
    if n < 2:
        return np.inf
    best = np.inf
    for i in range(n - 1):
        d = np.max(np.abs(M[i + 1:] - M[i]), axis=1).min()
        best = min(best, float(d))
    return best
