import cmath
import itertools

import numpy as np
import pytest

from beurling.group import cyclic_product, symmetric_group
from beurling.weight import make_weight, trivial_weight


@pytest.fixture
def z4():
    return cyclic_product([4])


@pytest.fixture
def w1222(z4):
    return make_weight(z4, [1, 2, 2, 2])


@pytest.fixture
def s3():
    return symmetric_group(3)


@pytest.fixture
def rng():
    return np.random.default_rng(20261015)


# -- brute-force oracles, written against the definitions with plain Python loops --

def oracle_conv_w(G, w, f, g):
    n = G.order
    out = [0j] * n
    for t in range(n):
        acc = 0j
        for s in range(n):
            u = G.table[G.inverse_table[s], t]
            acc += f[s] * g[u] * w[s] * w[u] / w[t]
        out[t] = acc
    return np.array(out)


def oracle_conv(G, f, g):
    return oracle_conv_w(G, np.ones(G.order), f, g)


def oracle_fourier_w(moduli, w, f):
    """Transform indexed by frequency tuples in itertools.product order."""
    tuples = list(itertools.product(*[range(m) for m in moduli]))
    out = []
    for k in tuples:
        acc = 0j
        for i, s in enumerate(tuples):
            phase = sum(kj * sj / mj for kj, sj, mj in zip(k, s, moduli))
            acc += f[i] * cmath.exp(-2j * cmath.pi * phase) * w[i]
        out.append(acc)
    return np.array(out)


def perm_compose(p, q):
    """p after q."""
    return tuple(p[q[i]] for i in range(len(q)))


def perm_inverse(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)
