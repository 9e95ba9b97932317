"""Unitary representations of G and *-representations of the weighted algebra.

Everything is finite dimensional: a unitary representation is a stack of
``n`` unitary ``d x d`` matrices, and its integrated form is

    pi(f) = sum_s f(s) w(s) pi(s).

In the other direction an algebra representation is given by its values on
the point masses, and the group representation is recovered from
pi~(s) pi(f) xi = pi(gamma(s) f) xi by least squares over the spanning family
{pi(delta_t) e_k}.
"""
from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass, field

import numpy as np

from .algebra import AlgElement, conv_w_naive, delta, involution, norm_w1
from .group import GroupSpec, is_abelian
from .translation import gamma, theta
from .weight import Weight

__all__ = [
    "RepresentationError",
    "NonDegeneracyError",
    "ConditioningError",
    "UnitaryRep",
    "AlgebraRep",
    "integrate",
    "integrated_form",
    "check_star_rep",
    "StarRepReport",
    "check_intertwining",
    "regular_rep",
    "reconstruct",
    "op_norm",
]

log = logging.getLogger(__name__)

COND_LIMIT = 1e8


class RepresentationError(ValueError):
    pass


class NonDegeneracyError(RepresentationError):
    pass


class ConditioningError(RepresentationError):
    pass


def op_norm(A: np.ndarray) -> float:
    return float(np.linalg.norm(A, 2))


def _frozen(a, dtype=complex):
    a = np.array(a, dtype=dtype)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class UnitaryRep:
    group: GroupSpec
    matrices: np.ndarray = field(repr=False)  # shape (n, d, d)

    def __post_init__(self):
        m = _frozen(self.matrices)
        if m.ndim != 3 or m.shape[0] != self.group.order or m.shape[1] != m.shape[2]:
            raise RepresentationError(
                f"expected matrices of shape ({self.group.order}, d, d), got {m.shape}")
        object.__setattr__(self, "matrices", m)

    @property
    def dim(self) -> int:
        return self.matrices.shape[1]

    def __getitem__(self, s) -> np.ndarray:
        return self.matrices[s]

    def unitarity_residual(self) -> float:
        d = self.dim
        U = self.matrices
        prod = U @ np.conj(np.swapaxes(U, 1, 2))
        return float(max(op_norm(p - np.eye(d)) for p in prod))

    def homomorphism_residual(self) -> float:
        """max over (s, t) of ||pi(st) - pi(s) pi(t)||."""
        G, U = self.group, self.matrices
        idx = np.arange(G.order)
        worst = 0.0
        for s in idx:
            st = G.mul(s, idx)
            diff = U[st] - U[s][None] @ U
            worst = max(worst, float(np.max(np.linalg.norm(diff, 2, axis=(1, 2)))))
        return worst

    def identity_residual(self) -> float:
        return op_norm(self.matrices[self.group.identity] - np.eye(self.dim))

    def residuals(self) -> dict:
        return {
            "unitarity": self.unitarity_residual(),
            "homomorphism": self.homomorphism_residual(),
            "identity": self.identity_residual(),
        }

    def is_valid(self, tol: float = 1e-10) -> bool:
        return all(v <= tol for v in self.residuals().values())

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "matrices": {str(s): [[[float(z.real), float(z.imag)] for z in row] for row in M]
                         for s, M in enumerate(self.matrices)},
        }

    @classmethod
    def from_json(cls, group: GroupSpec, obj: dict) -> "UnitaryRep":
        d = int(obj["dim"])
        mats = np.zeros((group.order, d, d), dtype=complex)
        seen = set()
        for key, M in obj["matrices"].items():
            s = int(key)
            group.check(s)
            arr = np.asarray(M, dtype=float)
            if arr.shape != (d, d, 2):
                raise RepresentationError(f"matrix for element {s} has shape {arr.shape[:2]}, expected ({d}, {d})")
            mats[s] = arr[..., 0] + 1j * arr[..., 1]
            seen.add(s)
        if len(seen) != group.order:
            raise RepresentationError("representation must give a matrix for every element")
        return cls(group, mats)


@dataclass(frozen=True, eq=False)
class AlgebraRep:
    """Linear map f -> pi(f), stored as its values on the point masses."""

    weight: Weight
    basis_matrices: np.ndarray = field(repr=False)  # pi(delta_t), shape (n, d, d)

    def __post_init__(self):
        m = _frozen(self.basis_matrices)
        if m.ndim != 3 or m.shape[0] != self.weight.group.order or m.shape[1] != m.shape[2]:
            raise RepresentationError(
                f"expected matrices of shape ({self.weight.group.order}, d, d), got {m.shape}")
        object.__setattr__(self, "basis_matrices", m)

    @property
    def dim(self) -> int:
        return self.basis_matrices.shape[1]

    @property
    def group(self) -> GroupSpec:
        return self.weight.group

    def __call__(self, f: AlgElement) -> np.ndarray:
        if f.weight != self.weight:
            raise RepresentationError("element belongs to a different algebra")
        return np.tensordot(f.coeffs, self.basis_matrices, axes=1)

    def spanning_matrix(self) -> np.ndarray:
        """Columns pi(delta_t) e_k for all t, k; shape (d, n d)."""
        return np.concatenate(list(self.basis_matrices), axis=1)


def integrate(rep: UnitaryRep, f: AlgElement) -> np.ndarray:
    if rep.group != f.group:
        raise RepresentationError("representation and element live on different groups")
    return np.tensordot(f.coeffs * f.weight.values, rep.matrices, axes=1)


def integrated_form(rep: UnitaryRep, weight: Weight) -> AlgebraRep:
    if rep.group != weight.group:
        raise RepresentationError("representation and weight live on different groups")
    return AlgebraRep(weight, weight.values[:, None, None] * rep.matrices)


@dataclass
class StarRepReport:
    trials: int
    multiplicativity: float = 0.0
    star: float | None = 0.0  # None when the weight is not symmetric
    norm_excess: float = 0.0  # max(||pi(f)|| - ||f||_{w,1}), <= 0 when the bound holds
    rank: int = 0
    dim: int = 0
    tol: float = 1e-9

    @property
    def nondegenerate(self) -> bool:
        return self.rank == self.dim

    @property
    def ok(self) -> bool:
        if self.trials == 0:
            return True
        star_ok = self.star is None or self.star < self.tol
        return (self.multiplicativity < self.tol and star_ok
                and self.norm_excess <= self.tol and self.nondegenerate)

    def to_json(self) -> dict:
        return {
            "trials": self.trials,
            "multiplicativity": self.multiplicativity,
            "star": "skipped" if self.star is None else self.star,
            "norm_excess": self.norm_excess,
            "rank": self.rank,
            "dim": self.dim,
            "ok": self.ok,
        }


def _random_coeffs(rng, n):
    return rng.standard_normal(n) + 1j * rng.standard_normal(n)


def check_star_rep(rep: UnitaryRep, weight: Weight, trials: int, rng=None,
                   tol: float = 1e-9) -> StarRepReport:
    """Residuals of the *-representation axioms of the integrated form.

    Multiplicativity and residuals are taken relative to ||f||_{w,1} ||g||_{w,1}
    (resp. ||f||_{w,1}).  The *-compatibility check needs a symmetric weight and
    is reported as ``None`` otherwise.
    """
    rng = np.random.default_rng(rng)
    report = StarRepReport(trials=trials, dim=rep.dim, tol=tol)
    if trials == 0:
        report.rank = rep.dim
        report.star = report.star if weight.symmetric else None
        return report
    n = weight.group.order
    for _ in range(trials):
        f = AlgElement(_random_coeffs(rng, n), weight)
        g = AlgElement(_random_coeffs(rng, n), weight)
        nf, ng = norm_w1(f), norm_w1(g)
        Pf, Pg = integrate(rep, f), integrate(rep, g)
        mult = op_norm(integrate(rep, conv_w_naive(f, g)) - Pf @ Pg) / (nf * ng)
        report.multiplicativity = max(report.multiplicativity, mult)
        if weight.symmetric:
            star = op_norm(integrate(rep, involution(f)) - Pf.conj().T) / nf
            report.star = max(report.star, star)
        report.norm_excess = max(report.norm_excess, op_norm(Pf) - nf)
    if not weight.symmetric:
        report.star = None
    # span of pi(delta_t) xi over t and a basis of xi; a single xi only spans a
    # cyclic subspace, which is smaller than d when characters repeat
    report.rank = int(np.linalg.matrix_rank(integrated_form(rep, weight).spanning_matrix()))
    return report


def check_intertwining(rep: UnitaryRep, s: int, f: AlgElement) -> tuple[float, float]:
    """(||pi(s) pi(f) - pi(gamma(s) f)||, ||pi(f) pi(s) - pi(theta(s^-1) f)||)."""
    rep.group.check(s)
    Pf = integrate(rep, f)
    Us = rep.matrices[s]
    r1 = op_norm(Us @ Pf - integrate(rep, gamma(s, f)))
    s_inv = int(rep.group.inverse_table[s])
    r2 = op_norm(Pf @ Us - integrate(rep, theta(s_inv, f)))
    return r1, r2


def regular_rep(G: GroupSpec, w: Weight) -> UnitaryRep:
    """gamma(s) on the square-integrable space, in the orthonormal basis
    u_t = delta_t / w(t).  Since gamma(s) u_r = u_{sr} the matrices are the
    permutation matrices of left multiplication, whatever the weight."""
    if w.group != G:
        raise RepresentationError("weight lives on a different group")
    if not is_abelian(G):
        warnings.warn("regular representation on a non-abelian group: identities are only guaranteed for abelian groups",
                      stacklevel=2)
    n = G.order
    idx = np.arange(n)
    mats = np.zeros((n, n, n))
    for s in idx:
        mats[s, G.mul(s, idx), idx] = 1.0
    return UnitaryRep(G, mats)


def gamma_matrix(w: Weight, s: int) -> np.ndarray:
    """Matrix of gamma(s) in the basis u_t = delta_t / w(t), computed by
    applying the operator to each basis vector (independent of :func:`regular_rep`)."""
    n = w.group.order
    out = np.empty((n, n), dtype=complex)
    for r in range(n):
        u = AlgElement(np.eye(n)[r] / w.values[r], w)
        out[:, r] = gamma(s, u).coeffs * w.values
    return out


def reconstruct(alg: AlgebraRep, check: bool = True, tol: float = 1e-8) -> UnitaryRep:
    """Recover the unitary representation whose integrated form is ``alg``.

    Raises :class:`NonDegeneracyError` if the vectors pi(delta_t) e_k do not
    span, :class:`ConditioningError` if their matrix has condition number above
    1e8, and (with ``check``) :class:`RepresentationError` if the solution is
    not a unitary homomorphism to ``tol``.
    """
    w = alg.weight
    G = w.group
    d = alg.dim
    M = alg.spanning_matrix()
    sv = np.linalg.svd(M, compute_uv=False)
    rank = int(np.linalg.matrix_rank(M))
    if rank < d:
        raise NonDegeneracyError(f"algebra representation is degenerate: span has rank {rank} < {d}")
    cond = float(sv[0] / sv[-1])
    if cond > COND_LIMIT:
        raise ConditioningError(f"spanning family is ill-conditioned (cond = {cond:.3g})")
    M_pinv = np.linalg.pinv(M)
    deltas = [delta(w, t) for t in range(G.order)]
    mats = np.empty((G.order, d, d), dtype=complex)
    for s in range(G.order):
        N = np.concatenate([alg(gamma(s, dt)) for dt in deltas], axis=1)
        mats[s] = N @ M_pinv
    rep = UnitaryRep(G, mats)
    if check:
        res = rep.residuals()
        bad = {k: v for k, v in res.items() if v > tol}
        if bad:
            raise RepresentationError(f"reconstructed operators fail the unitary-rep axioms: {bad}")
        log.debug("reconstruct: cond=%.3g residuals=%s", cond, res)
    return rep
