"""Finite groups as dense index sets.

Elements are integers in ``[0, n)``.  Two presentations are supported:

* ``cyclic_product``: Z_{m_1} x ... x Z_{m_d}, element index is the C-order
  mixed-radix encoding of the tuple (first modulus most significant), so
  ``np.reshape(f, moduli)`` gives the natural d-dimensional array.
* ``cayley_table``: an explicit multiplication table, validated eagerly.

Haar measure is counting measure, so every integral over G is a plain sum
and the modular function is identically 1.
"""
from __future__ import annotations

from collections import deque
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "GroupError",
    "InvalidElementError",
    "GroupSpec",
    "cyclic_product",
    "cayley_table",
    "from_permutations",
    "symmetric_group",
    "dihedral_group",
    "compose",
    "inverse",
    "is_abelian",
]

MAX_CAYLEY_CHECK = 256


class GroupError(ValueError):
    """Raised for tables or moduli that do not define a group."""


class InvalidElementError(IndexError):
    pass


class GroupSpec:
    """An immutable finite group.

    Use :func:`cyclic_product` or :func:`cayley_table` to build one.
    """

    def __init__(self, kind: str, *, moduli: Sequence[int] | None = None,
                 table: np.ndarray | None = None, identity: int = 0):
        self.kind = kind
        if kind == "cyclic_product":
            self.moduli = tuple(int(m) for m in moduli)
            self._table = None
            self.order = int(np.prod(self.moduli, dtype=np.int64)) if self.moduli else 1
        elif kind == "cayley_table":
            self.moduli = None
            self._table = np.asarray(table, dtype=np.int64)
            self._table.setflags(write=False)
            self.order = int(self._table.shape[0])
        else:
            raise GroupError(f"unknown group kind {kind!r}")
        self.identity = int(identity)

    # -- element plumbing -------------------------------------------------

    def check(self, a) -> None:
        arr = np.asarray(a)
        if arr.dtype.kind not in "iu":
            raise InvalidElementError(f"element index must be an integer, got {a!r}")
        if arr.size and (arr.min() < 0 or arr.max() >= self.order):
            raise InvalidElementError(f"element index {a!r} out of range for group of order {self.order}")

    @cached_property
    def _strides(self) -> np.ndarray:
        m = np.asarray(self.moduli, dtype=np.int64)
        return np.concatenate([np.cumprod(m[::-1])[::-1][1:], [1]]).astype(np.int64)

    def to_tuple(self, a: int) -> tuple[int, ...]:
        """Mixed-radix digits of ``a`` (cyclic_product only)."""
        self._require_cyclic()
        self.check(a)
        return tuple(int(d) for d in self.digits(np.asarray(a)))

    def from_tuple(self, digits: Sequence[int]) -> int:
        self._require_cyclic()
        if len(digits) != len(self.moduli):
            raise InvalidElementError(f"expected {len(self.moduli)} digits, got {len(digits)}")
        for d, m in zip(digits, self.moduli):
            if not 0 <= d < m:
                raise InvalidElementError(f"digit {d} out of range for modulus {m}")
        return int(np.dot(np.asarray(digits, dtype=np.int64), self._strides))

    def digits(self, a: np.ndarray) -> np.ndarray:
        """Vectorised index -> digit array; digits are on the leading axis."""
        a = np.asarray(a, dtype=np.int64)
        m = np.asarray(self.moduli, dtype=np.int64).reshape((-1,) + (1,) * a.ndim)
        s = self._strides.reshape((-1,) + (1,) * a.ndim)
        return (a[None, ...] // s) % m

    def undigits(self, d: np.ndarray) -> np.ndarray:
        s = self._strides.reshape((-1,) + (1,) * (d.ndim - 1))
        return (d * s).sum(axis=0)

    def _require_cyclic(self):
        if self.kind != "cyclic_product":
            raise GroupError("operation requires a cyclic_product group")

    # -- the group law, vectorised ----------------------------------------

    def mul(self, a, b) -> np.ndarray:
        """Elementwise product ``a b`` of (broadcastable) index arrays."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self._table is not None:
            return self._table[a, b]
        a, b = np.broadcast_arrays(a, b)
        m = np.asarray(self.moduli, dtype=np.int64).reshape((-1,) + (1,) * a.ndim)
        return self.undigits((self.digits(a) + self.digits(b)) % m)

    def inv(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        return self.inverse_table[a]

    @cached_property
    def inverse_table(self) -> np.ndarray:
        idx = np.arange(self.order, dtype=np.int64)
        if self._table is not None:
            # row a of the table hits the identity exactly once
            out = np.argmax(self._table == self.identity, axis=1).astype(np.int64)
        else:
            m = np.asarray(self.moduli, dtype=np.int64).reshape(-1, 1)
            out = self.undigits((-self.digits(idx)) % m)
        out.setflags(write=False)
        return out

    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def table(self) -> np.ndarray:
        """Full Cayley table (materialised on demand for cyclic products)."""
        if self._table is not None:
            return self._table
        idx = np.arange(self.order)
        return self.mul(idx[:, None], idx[None, :])

    # -- equality / serialisation -----------------------------------------

    def __eq__(self, other):
        if not isinstance(other, GroupSpec) or self.kind != other.kind:
            return NotImplemented if not isinstance(other, GroupSpec) else False
        if self.kind == "cyclic_product":
            return self.moduli == other.moduli
        return self.identity == other.identity and np.array_equal(self._table, other._table)

    def __hash__(self):
        if self.kind == "cyclic_product":
            return hash(("cyclic_product", self.moduli))
        return hash(("cayley_table", self._table.tobytes()))

    def __repr__(self):
        if self.kind == "cyclic_product":
            return "GroupSpec(" + " x ".join(f"Z{m}" for m in self.moduli) + ")"
        return f"GroupSpec(cayley_table, order={self.order})"

    def to_json(self) -> dict:
        if self.kind == "cyclic_product":
            return {"type": "cyclic_product", "moduli": list(self.moduli)}
        return {"type": "cayley_table", "table": self._table.tolist()}

    @classmethod
    def from_json(cls, obj: dict) -> "GroupSpec":
        kind = obj.get("type")
        if kind == "cyclic_product":
            return cyclic_product(obj["moduli"])
        if kind == "cayley_table":
            return cayley_table(obj["table"])
        raise GroupError(f"unknown group type {kind!r}")


def cyclic_product(moduli: Sequence[int] | int) -> GroupSpec:
    if isinstance(moduli, (int, np.integer)):
        moduli = [int(moduli)]
    moduli = list(moduli)
    if not moduli:
        raise GroupError("need at least one modulus")
    for m in moduli:
        if int(m) != m or m < 1:
            raise GroupError(f"modulus must be a positive integer, got {m!r}")
    # the trivial group is Z_1; larger factors must be >= 2
    if len(moduli) > 1 and any(m < 2 for m in moduli):
        raise GroupError("moduli of a product must be >= 2")
    return GroupSpec("cyclic_product", moduli=moduli)


def cayley_table(table) -> GroupSpec:
    """Validate ``table`` as a group law and wrap it.

    The identity is located by search; associativity is checked exhaustively
    for orders up to 256.
    """
    t = np.asarray(table)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] < 1:
        raise GroupError("Cayley table must be a non-empty square array")
    if t.dtype.kind not in "iu":
        if not np.all(np.equal(np.mod(t, 1), 0)):
            raise GroupError("Cayley table entries must be integers")
    t = t.astype(np.int64)
    n = t.shape[0]
    if t.min() < 0 or t.max() >= n:
        raise GroupError("Cayley table entries out of range")
    idx = np.arange(n)
    ids = [e for e in range(n) if np.array_equal(t[e], idx) and np.array_equal(t[:, e], idx)]
    if len(ids) != 1:
        raise GroupError("Cayley table has no two-sided identity")
    e = ids[0]
    # Latin square <=> every element has unique left/right quotients
    for row in t:
        if len(np.unique(row)) != n:
            raise GroupError("Cayley table row is not a permutation")
    for col in t.T:
        if len(np.unique(col)) != n:
            raise GroupError("Cayley table column is not a permutation")
    if n <= MAX_CAYLEY_CHECK:
        # (ab)c == a(bc) for all triples
        lhs = t[t[:, :, None], idx[None, None, :]]
        rhs = t[idx[:, None, None], t[None, :, :]]
        if not np.array_equal(lhs, rhs):
            raise GroupError("Cayley table is not associative")
    inv_ok = np.all(np.sum(t == e, axis=1) == 1)
    if not inv_ok:
        raise GroupError("some element lacks an inverse")
    return GroupSpec("cayley_table", table=t, identity=e)


def from_permutations(generators: Iterable[Sequence[int]]) -> tuple[GroupSpec, list[tuple[int, ...]]]:
    """Close a set of permutations under composition and return its Cayley table.

    Permutations are tuples ``p`` with ``p[i]`` the image of ``i``; the product
    ``p q`` means "apply q, then p".  The identity is index 0.  Returns the group
    together with the list of permutations in index order.
    """
    gens = [tuple(int(x) for x in g) for g in generators]
    if not gens:
        raise GroupError("need at least one generator")
    k = len(gens[0])
    ident = tuple(range(k))
    elems = [ident]
    seen = {ident: 0}
    queue = deque([ident])
    while queue:
        p = queue.popleft()
        for g in gens:
            q = tuple(g[p[i]] for i in range(k))
            if q not in seen:
                seen[q] = len(elems)
                elems.append(q)
                queue.append(q)
    n = len(elems)
    table = np.empty((n, n), dtype=np.int64)
    for i, p in enumerate(elems):
        for j, q in enumerate(elems):
            table[i, j] = seen[tuple(p[q[x]] for x in range(k))]
    return cayley_table(table), elems


def symmetric_group(k: int) -> tuple[GroupSpec, list[tuple[int, ...]]]:
    if k < 1:
        raise GroupError("symmetric group needs k >= 1")
    if k == 1:
        return from_permutations([(0,)])
    cycle = tuple(list(range(1, k)) + [0])
    swap = tuple([1, 0] + list(range(2, k)))
    return from_permutations([swap, cycle])


def dihedral_group(m: int) -> tuple[GroupSpec, list[tuple[int, ...]]]:
    """Symmetries of the regular m-gon (order 2m), as vertex permutations."""
    if m < 3:
        raise GroupError("dihedral group needs m >= 3")
    rot = tuple((i + 1) % m for i in range(m))
    ref = tuple((-i) % m for i in range(m))
    return from_permutations([rot, ref])


# -- functional surface ----------------------------------------------------

def compose(G: GroupSpec, a: int, b: int) -> int:
    G.check(a)
    G.check(b)
    return int(G.mul(a, b))


def inverse(G: GroupSpec, a: int) -> int:
    G.check(a)
    return int(G.inverse_table[a])


def is_abelian(G: GroupSpec) -> bool:
    if G.kind == "cyclic_product":
        return True
    t = G.table
    return bool(np.array_equal(t, t.T))


def generated_subgroup(G: GroupSpec, generators: Iterable[int]) -> list[int]:
    """Elements of the subgroup generated by ``generators``."""
    return sorted(i for i, l in enumerate(word_lengths(G, generators)) if l >= 0)


def word_lengths(G: GroupSpec, generators: Iterable[int]) -> np.ndarray:
    """Word length of each element over ``generators`` (-1 if unreachable).

    Words are right products ``e g_1 g_2 ...``; for a generator set closed
    under inverses this is the usual Cayley-graph distance from the identity.
    """
    gens = [int(g) for g in generators]
    for g in gens:
        G.check(g)
    dist = np.full(G.order, -1, dtype=np.int64)
    dist[G.identity] = 0
    frontier = np.array([G.identity], dtype=np.int64)
    gens_arr = np.asarray(gens, dtype=np.int64)
    d = 0
    while frontier.size and gens_arr.size:
        d += 1
        nxt = np.unique(G.mul(frontier[:, None], gens_arr[None, :]).ravel())
        nxt = nxt[dist[nxt] < 0]
        dist[nxt] = d
        frontier = nxt
    return dist


def check_axioms(G: GroupSpec) -> None:
    """Exhaustive check of identity, inverse and associativity (n <= 256)."""
    n = G.order
    if n > MAX_CAYLEY_CHECK:
        raise GroupError(f"exhaustive check limited to order <= {MAX_CAYLEY_CHECK}")
    t = G.table
    idx = np.arange(n)
    e = G.identity
    if not (np.array_equal(t[e], idx) and np.array_equal(t[:, e], idx)):
        raise GroupError("identity axiom fails")
    inv = G.inverse_table
    if not (np.all(t[idx, inv] == e) and np.all(t[inv, idx] == e)):
        raise GroupError("inverse axiom fails")
    lhs = t[t[:, :, None], idx[None, None, :]]
    rhs = t[idx[:, None, None], t[None, :, :]]
    if not np.array_equal(lhs, rhs):
        raise GroupError("associativity fails")
