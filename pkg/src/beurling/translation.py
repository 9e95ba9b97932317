"""Translations and their weighted transports.

    L_s f(t) = f(s^-1 t)          R_s f(t) = f(t s)
    gamma(s) = sigma^-1 L_s sigma  theta(s) = sigma^-1 R_s sigma

Right translation uses f(t s) so that theta agrees with the pointwise
formula f(ts) w(ts) / w(t).
"""
from __future__ import annotations

import numpy as np

from .algebra import AlgElement

__all__ = ["L", "R", "gamma", "theta", "gamma_via_sigma", "theta_via_sigma"]


def _left_index(f: AlgElement, s: int) -> np.ndarray:
    G = f.group
    G.check(s)
    return G.mul(G.inv(s), np.arange(G.order))


def _right_index(f: AlgElement, s: int) -> np.ndarray:
    G = f.group
    G.check(s)
    return G.mul(np.arange(G.order), s)


def L(s: int, f: AlgElement) -> AlgElement:
    return AlgElement(f.coeffs[_left_index(f, s)], f.weight)


def R(s: int, f: AlgElement) -> AlgElement:
    return AlgElement(f.coeffs[_right_index(f, s)], f.weight)


def gamma(s: int, f: AlgElement) -> AlgElement:
    """(gamma(s) f)(t) = f(s^-1 t) w(s^-1 t) / w(t)."""
    J = _left_index(f, s)
    w = f.weight.values
    return AlgElement(f.coeffs[J] * w[J] / w, f.weight)


def theta(s: int, f: AlgElement) -> AlgElement:
    """(theta(s) f)(t) = f(ts) w(ts) / w(t)."""
    J = _right_index(f, s)
    w = f.weight.values
    return AlgElement(f.coeffs[J] * w[J] / w, f.weight)


# The commuting-diagram forms; kept separate so tests can compare the two routes.

def gamma_via_sigma(s: int, f: AlgElement) -> AlgElement:
    w = f.weight.values
    return AlgElement(L(s, AlgElement(f.coeffs * w, f.weight)).coeffs / w, f.weight)


def theta_via_sigma(s: int, f: AlgElement) -> AlgElement:
    w = f.weight.values
    return AlgElement(R(s, AlgElement(f.coeffs * w, f.weight)).coeffs / w, f.weight)
