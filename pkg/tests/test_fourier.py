import cmath

import numpy as np
import pytest

from beurling.algebra import AlgElement, UnsupportedGroupError, conv_w_naive, delta, norm_w1
from beurling.fourier import (
    Character,
    char_table,
    char_value,
    characters,
    fourier_w,
    fourier_w_fast,
    functional_matrix,
    min_functional_separation,
    mult_functional,
)
from beurling.group import cyclic_product, symmetric_group
from beurling.sampling import random_element, random_weight
from beurling.weight import make_length_weight, trivial_weight

from conftest import oracle_fourier_w


def test_char_value_examples():
    G = cyclic_product([4])
    assert char_value(G, (1,), 1) == pytest.approx(1j, abs=1e-15)
    for s in range(4):
        assert char_value(G, (0,), s) == 1
    H = cyclic_product([2, 3])
    v = char_value(H, (1, 1), H.from_tuple((1, 1)))
    assert v == pytest.approx(cmath.exp(5j * cmath.pi / 3), abs=1e-15)


def test_characters_are_homomorphisms_into_circle():
    for G in (cyclic_product([8]), cyclic_product([2, 3]), cyclic_product([4, 4, 4])):
        T = char_table(G)
        assert np.allclose(np.abs(T), 1, atol=1e-14)
        tab = G.table
        for k in range(G.order):
            assert np.allclose(T[k][tab], T[k][:, None] * T[k][None, :], atol=1e-12)


def test_characters_enumeration():
    G = cyclic_product([2, 3])
    assert characters(G)[0] == Character((0, 0))
    assert characters(G)[5] == (1, 2)


def test_fourier_examples(w1222):
    vals = fourier_w(delta(w1222, 1))
    # 2 (-i)^k
    assert np.allclose(vals, [2 * (-1j) ** k for k in range(4)], atol=1e-14)
    assert vals[1] == pytest.approx(-2j)
    assert np.allclose(fourier_w(delta(w1222, 0)), 1, atol=0)


def test_fourier_matches_oracle(rng):
    for moduli in ([5], [2, 3], [2, 2, 3]):
        G = cyclic_product(moduli)
        w = random_weight(G, rng)
        f = random_element(w, rng)
        ref = oracle_fourier_w(moduli, w.values, f.coeffs)
        assert np.allclose(fourier_w(f), ref, atol=1e-12)
        assert np.allclose(fourier_w_fast(f), ref, atol=1e-12)


def test_trivial_weight_is_plain_dft(rng):
    G = cyclic_product([8])
    w = trivial_weight(G)
    f = random_element(w, rng)
    dft = [sum(f.coeffs[s] * cmath.exp(-2j * cmath.pi * k * s / 8) for s in range(8)) for k in range(8)]
    assert np.allclose(fourier_w(f), dft, atol=1e-13)


def test_fast_matches_naive(rng):
    G = cyclic_product([8])
    w = random_weight(G, rng)
    for _ in range(10):
        f = random_element(w, rng)
        a, b = fourier_w_fast(f), fourier_w(f)
        assert np.max(np.abs(a - b)) / np.max(np.abs(b)) < 1e-9
    assert np.allclose(fourier_w_fast(delta(w, 0)), 1)
    f, g = random_element(w, rng), random_element(w, rng)
    al, be = 0.3 - 2j, 1.7
    lin = fourier_w_fast(AlgElement(al * f.coeffs + be * g.coeffs, w))
    assert np.allclose(lin, al * fourier_w_fast(f) + be * fourier_w_fast(g), atol=1e-12)


def test_fast_large():
    rng = np.random.default_rng(4096)
    for moduli in ([4096], [16, 256]):
        G = cyclic_product(moduli)
        w = make_length_weight(G, [1, G.order - 1], "polynomial", 1.0) if len(moduli) == 1 else trivial_weight(G)
        f = random_element(w, rng)
        a, b = fourier_w_fast(f), fourier_w(f)
        assert np.max(np.abs(a - b)) / np.max(np.abs(b)) < 1e-9


def test_convolution_theorem_and_functionals(rng):
    G = cyclic_product([3, 4])
    w = random_weight(G, rng)
    for _ in range(10):
        f, g = random_element(w, rng), random_element(w, rng)
        lhs = fourier_w(conv_w_naive(f, g))
        assert np.allclose(lhs, fourier_w(f) * fourier_w(g), rtol=0, atol=1e-12)
        assert np.all(np.abs(fourier_w(f)) <= norm_w1(f) * (1 + 1e-12))
        chi = int(rng.integers(G.order))
        assert mult_functional(chi, conv_w_naive(f, g)) == pytest.approx(
            mult_functional(chi, f) * mult_functional(chi, g), abs=1e-12)
        # trivial character sums f w
        assert mult_functional((0, 0), f) == pytest.approx(np.sum(f.coeffs * w.values), abs=1e-13)
    for chi in range(G.order):
        assert mult_functional(chi, delta(w, 0)) == 1


def test_functionals_pairwise_distinct(rng):
    G = cyclic_product([2, 6])
    w = random_weight(G, rng)
    M = functional_matrix(w)
    # on the basis delta_t / w(t) the functional at chi_k is conj(chi_k(t))
    assert np.allclose(M, np.conj(char_table(G)), atol=1e-12)
    assert min_functional_separation(w) > 0.5


def test_cayley_group_unsupported():
    G, _ = symmetric_group(3)
    w = trivial_weight(G)
    with pytest.raises(UnsupportedGroupError):
        fourier_w(delta(w, 0))
    with pytest.raises(UnsupportedGroupError):
        char_value(G, 0, 0)
