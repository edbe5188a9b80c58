"""Hypothesis strategies for small codes."""
import numpy as np
from hypothesis import assume
from hypothesis import strategies as st

from conftest import ring

CODE_RINGS = ["GF(2)", "GF(3)", "Z4", "GF(4)", "Z2xZ2", "Z6"]


@st.composite
def generators(draw, rings=CODE_RINGS, max_k=2, max_n=4):
    spec = draw(st.sampled_from(rings))
    r = ring(spec)
    k = draw(st.integers(1, max_k))
    n = draw(st.integers(1, max_n))
    g = draw(st.lists(st.lists(st.integers(0, r.order - 1), min_size=n, max_size=n), min_size=k, max_size=k))
    g = np.array(g, dtype=np.int32)
    assume(g.any(axis=0).all())
    return spec, g


def right_scale(r, g, units_, rng):
    """Multiply each column on the right by a random unit."""
    out = g.copy()
    for j in range(g.shape[1]):
        u = units_[rng.integers(len(units_))]
        out[:, j] = r.mul[g[:, j], u]
    return out


def invertible_matrix(r, k, units_, rng):
    """A random product of elementary row operations over ``r``."""
    m = np.zeros((k, k), dtype=np.int32)
    for i in range(k):
        m[i, i] = units_[rng.integers(len(units_))]
    for _ in range(3 * k):
        i, j = rng.integers(k, size=2)
        if i != j:
            c = rng.integers(r.order)
            m[i] = r.add[m[i], r.mul[c, m[j]]]
    return m


def matmul(r, a, b):
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int32)
    for t in range(a.shape[1]):
        out = r.add[out, r.mul[a[:, t][:, None], b[t][None, :]]]
    return out
