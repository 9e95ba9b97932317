"""Seeded random instances: groups, weights, algebra elements, representations.

All randomness flows through ``numpy.random.Generator`` (PCG64), so a seed
pins every report.
"""
from __future__ import annotations

import numpy as np

from .algebra import AlgElement, norm_w1
from .group import GroupSpec, cyclic_product, dihedral_group, symmetric_group, word_lengths
from .representations import UnitaryRep
from .weight import Weight, make_weight

__all__ = [
    "rng_from",
    "random_moduli",
    "random_group",
    "random_generating_set",
    "random_weight",
    "random_element",
    "random_unitary",
    "random_unitary_rep",
    "small_nonabelian_groups",
]


def rng_from(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.PCG64(seed))


def random_moduli(rng, max_order: int, max_factors: int = 3) -> list[int]:
    moduli: list[int] = []
    n = 1
    for _ in range(rng.integers(1, max_factors + 1)):
        cap = max_order // n
        if cap < 2:
            break
        m = int(rng.integers(2, cap + 1))
        moduli.append(m)
        n *= m
    return moduli or [2]


_NONABELIAN: dict = {}


def small_nonabelian_groups() -> dict[str, tuple[GroupSpec, list]]:
    """S3, D4, D5, S4 as Cayley tables, with their permutation labels."""
    if not _NONABELIAN:
        _NONABELIAN["S3"] = symmetric_group(3)
        _NONABELIAN["D4"] = dihedral_group(4)
        _NONABELIAN["D5"] = dihedral_group(5)
        _NONABELIAN["S4"] = symmetric_group(4)
    return _NONABELIAN


def random_group(rng, max_order: int = 64, nonabelian_prob: float = 0.0) -> GroupSpec:
    if nonabelian_prob and rng.random() < nonabelian_prob:
        choices = [G for G, _ in small_nonabelian_groups().values() if G.order <= max_order]
        if choices:
            return choices[int(rng.integers(len(choices)))]
    return cyclic_product(random_moduli(rng, max_order))


def random_generating_set(G: GroupSpec, rng, inverse_closed: bool = True) -> list[int]:
    """Random subset of G, grown until it generates."""
    n = G.order
    if n == 1:
        return [G.identity]
    gens: set[int] = set()
    while True:
        gens.add(int(rng.integers(n)))
        if inverse_closed:
            gens |= {int(G.inverse_table[g]) for g in gens}
        if np.all(word_lengths(G, sorted(gens)) >= 0):
            return sorted(gens)


def random_weight(G: GroupSpec, rng, symmetric: bool = True) -> Weight:
    """Verified random weight.

    Product of one or two length-type weights: a**l or (1 + l)**alpha with l the
    word length over a random generating set.  With ``symmetric=False`` the
    generating sets are not inverse-closed, so l (and the weight) is typically
    asymmetric, but still subadditive and hence submultiplicative.
    """
    v = np.ones(G.order)
    for _ in range(int(rng.integers(1, 3))):
        gens = random_generating_set(G, rng, inverse_closed=symmetric)
        l = word_lengths(G, gens).astype(float)
        if rng.random() < 0.5:
            v = v * float(rng.uniform(1.0, 3.0)) ** l
        else:
            v = v * (1.0 + l) ** float(rng.uniform(0.0, 3.0))
    return make_weight(G, v)


def random_element(weight: Weight, rng, normalize: bool = True) -> AlgElement:
    n = weight.group.order
    c = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    f = AlgElement(c, weight)
    if normalize:
        f = AlgElement(c / norm_w1(f), weight)
    return f


def random_unitary(d: int, rng) -> np.ndarray:
    """Haar-distributed unitary via QR with phase correction."""
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    ph = np.diagonal(r) / np.abs(np.diagonal(r))
    return q * ph[None, :]


def random_unitary_rep(G: GroupSpec, d: int, rng, blocks: list[UnitaryRep] | None = None) -> UnitaryRep:
    """A d-dimensional unitary representation in a random orthonormal basis.

    On cyclic products it is a random direct sum of d characters.  Otherwise it
    is a direct sum of reps drawn from ``blocks`` (default: the left-regular
    permutation rep when it fits) padded with trivial reps.
    """
    n = G.order
    if d < 1:
        raise ValueError("dimension must be >= 1")
    if G.kind == "cyclic_product":
        from .fourier import char_table

        ks = rng.integers(n, size=d)
        diag = char_table(G, ks).T  # (n, d): chi_{k_j}(s)
        base = np.zeros((n, d, d), dtype=complex)
        base[:, np.arange(d), np.arange(d)] = diag
    else:
        if blocks is None:
            idx = np.arange(n)
            reg = np.zeros((n, n, n))
            for s in idx:
                reg[s, G.mul(s, idx), idx] = 1.0
            blocks = [UnitaryRep(G, reg)]
        base = np.zeros((n, d, d), dtype=complex)
        pos = 0
        order = list(rng.permutation(len(blocks)))
        for b in order:
            B = blocks[b]
            if pos + B.dim <= d:
                base[:, pos:pos + B.dim, pos:pos + B.dim] = B.matrices
                pos += B.dim
        base[:, np.arange(pos, d), np.arange(pos, d)] = 1.0
    V = random_unitary(d, rng)
    mats = V[None] @ base @ V.conj().T[None]
    return UnitaryRep(G, mats)
