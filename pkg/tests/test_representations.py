import numpy as np
import pytest

from beurling.algebra import conv_w_naive, delta, involution, norm_w1
from beurling.fourier import mult_functional
from beurling.group import cyclic_product, symmetric_group
from beurling.representations import (
    AlgebraRep,
    ConditioningError,
    NonDegeneracyError,
    RepresentationError,
    UnitaryRep,
    check_intertwining,
    check_star_rep,
    gamma_matrix,
    integrate,
    integrated_form,
    op_norm,
    reconstruct,
    regular_rep,
)
from beurling.sampling import random_element, random_unitary_rep, random_weight
from beurling.weight import make_weight, trivial_weight


@pytest.fixture
def chi_rep(z4):
    # pi(s) = i^s
    return UnitaryRep(z4, np.array([[[1j ** s]] for s in range(4)]))


def test_integrate_examples(w1222, chi_rep, rng):
    assert np.array_equal(integrate(chi_rep, delta(w1222, 0)), [[1]])
    assert integrate(chi_rep, delta(w1222, 1))[0, 0] == pytest.approx(2j)
    f, g = random_element(w1222, rng), random_element(w1222, rng)
    assert np.allclose(integrate(chi_rep, conv_w_naive(f, g)),
                       integrate(chi_rep, f) @ integrate(chi_rep, g), atol=1e-13)


def test_intertwining_scalar_example(w1222, chi_rep):
    # pi(1) pi(d_1) = i * 2i = -2
    Pf = integrate(chi_rep, delta(w1222, 1))
    assert (chi_rep[1] @ Pf)[0, 0] == pytest.approx(-2)
    r1, r2 = check_intertwining(chi_rep, 1, delta(w1222, 1))
    assert r1 < 1e-15 and r2 < 1e-15


def test_intertwining_identity_element(w1222, chi_rep, rng):
    f = random_element(w1222, rng)
    assert max(check_intertwining(chi_rep, 0, f)) < 1e-12


def test_intertwining_regular_z6(rng):
    G = cyclic_product([6])
    w = random_weight(G, rng)
    rep = regular_rep(G, w)
    for s in range(6):
        f = random_element(w, rng)
        assert max(check_intertwining(rep, s, f)) < 1e-9


def test_intertwining_nonabelian(rng):
    # pointwise derivation needs no commutativity
    G, _ = symmetric_group(3)
    w = random_weight(G, rng)
    with pytest.warns(UserWarning):
        rep = regular_rep(G, w)
    f = random_element(w, rng)
    for s in range(6):
        assert max(check_intertwining(rep, s, f)) < 1e-12


def test_star_rep_report(rng):
    G = cyclic_product([2, 3])
    w = random_weight(G, rng)
    rep = random_unitary_rep(G, 4, rng)
    report = check_star_rep(rep, w, trials=30, rng=rng)
    assert report.ok and report.nondegenerate
    assert report.multiplicativity < 1e-9 and report.star < 1e-9 and report.norm_excess <= 1e-9
    empty = check_star_rep(rep, w, trials=0)
    assert empty.ok and empty.trials == 0


def test_star_rep_asymmetric_weight_skips_star(z4, rng):
    w = make_weight(z4, [1, 2, 2, 3])
    rep = random_unitary_rep(z4, 2, rng)
    report = check_star_rep(rep, w, trials=10, rng=rng)
    assert report.star is None
    assert report.to_json()["star"] == "skipped"
    # and the star identity does in fact fail for this weight
    f = random_element(w, rng)
    assert op_norm(integrate(rep, involution(f)) - integrate(rep, f).conj().T) > 1e-3


def test_trivial_rep_matches_trivial_character(w1222, rng):
    rep = UnitaryRep(w1222.group, np.ones((4, 1, 1)))
    f, g = random_element(w1222, rng), random_element(w1222, rng)
    assert integrate(rep, f)[0, 0] == pytest.approx(np.sum(f.coeffs * w1222.values))
    h = conv_w_naive(f, g)
    assert integrate(rep, h)[0, 0] == pytest.approx(mult_functional(0, h))
    assert check_star_rep(rep, w1222, 20, rng=rng).ok


def test_norm_bound(rng):
    G = cyclic_product([12])
    w = random_weight(G, rng)
    rep = random_unitary_rep(G, 5, rng)
    for _ in range(20):
        f = random_element(w, rng, normalize=False)
        assert op_norm(integrate(rep, f)) <= norm_w1(f) + 1e-9


def test_regular_rep_is_cyclic_shift(z4, w1222, rng):
    rep = regular_rep(z4, w1222)
    shift = np.roll(np.eye(4), 1, axis=0)
    for s in range(4):
        assert np.array_equal(rep[s], np.linalg.matrix_power(shift, s))
        assert np.allclose(gamma_matrix(w1222, s), rep[s], rtol=0, atol=1e-15)
    assert np.array_equal(rep[0], np.eye(4))
    assert rep.unitarity_residual() == 0 and rep.homomorphism_residual() == 0
    # independent of the weight
    other = regular_rep(z4, make_weight(z4, [1, 3, 5, 3]))
    assert np.array_equal(other.matrices, rep.matrices)


def test_regular_rep_reproduces_cayley_action(rng):
    G = cyclic_product([2, 3])
    rep = regular_rep(G, random_weight(G, rng))
    for s in range(6):
        for r in range(6):
            assert np.argmax(rep[s][:, r]) == G.table[s, r]


@pytest.mark.parametrize("moduli", [[6], [2, 4]])
def test_round_trip(moduli, rng):
    G = cyclic_product(moduli)
    for _ in range(10):
        w = random_weight(G, rng)
        d = int(rng.integers(1, 6))
        rep = random_unitary_rep(G, d, rng)
        back = reconstruct(integrated_form(rep, w))
        assert np.max(np.abs(back.matrices - rep.matrices)) < 1e-8
        assert back.unitarity_residual() < 1e-8
        f = random_element(w, rng)
        assert op_norm(integrate(back, f) - integrated_form(rep, w)(f)) < 1e-8


def test_reconstruct_trivial(w1222):
    alg = AlgebraRep(w1222, w1222.values[:, None, None].astype(complex))
    back = reconstruct(alg)
    assert np.allclose(back.matrices, 1, atol=1e-12)


def test_reconstruct_degenerate(z4, w1222, rng):
    rep = random_unitary_rep(z4, 2, rng)
    base = integrated_form(rep, w1222).basis_matrices
    padded = np.zeros((4, 3, 3), dtype=complex)
    padded[:, :2, :2] = base  # pi vanishes on the third coordinate
    with pytest.raises(NonDegeneracyError):
        reconstruct(AlgebraRep(w1222, padded))


def test_reconstruct_ill_conditioned(z4):
    w = trivial_weight(z4)
    mats = np.zeros((4, 2, 2), dtype=complex)
    mats[:, 0, 0] = 1
    mats[:, 1, 1] = 1e-10
    with pytest.raises(ConditioningError):
        reconstruct(AlgebraRep(w, mats))


def test_reconstruct_rejects_non_star_rep(z4, w1222):
    # linear but not multiplicative: pi(delta_t) = w(t) * I for a 2x2 non-unitary twist
    mats = np.stack([w1222.values[t] * np.array([[1, t], [0, 1]], dtype=complex) for t in range(4)])
    with pytest.raises(RepresentationError):
        reconstruct(AlgebraRep(w1222, mats))


def test_rep_json_round_trip(z4, chi_rep):
    back = UnitaryRep.from_json(z4, chi_rep.to_json())
    assert np.array_equal(back.matrices, chi_rep.matrices)
    with pytest.raises(RepresentationError):
        UnitaryRep.from_json(z4, {"dim": 1, "matrices": {"0": [[[1, 0]]]}})


def test_nonabelian_random_rep(rng):
    G, perms = symmetric_group(3)
    w = random_weight(G, rng)
    nat = UnitaryRep(G, np.stack([np.eye(3)[list(p)].T for p in perms]))
    assert nat.is_valid()
    rep = random_unitary_rep(G, 5, rng, blocks=[nat])
    assert rep.is_valid()
    assert check_star_rep(rep, w, 10, rng=rng).ok
    back = reconstruct(integrated_form(rep, w))
    assert np.max(np.abs(back.matrices - rep.matrices)) < 1e-8
