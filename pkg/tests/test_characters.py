import cmath
import itertools

import numpy as np
import pytest

from conftest import ring
from frobtwo.characters import (
    additive_structure,
    character_count_check,
    characters,
    element_orders,
    is_frobenius,
    is_generating,
    smith_diagonal,
)

SPECS = ["Z4", "Z6", "Z2xZ2", "GF(4)", "GF(9)", "Z2xZ4", "M2(GF(2))", "table:f2xy"]


@pytest.mark.parametrize("spec", SPECS)
def test_characters_are_homomorphisms(spec):
    r = ring(spec)
    chars = list(characters(r))
    assert len(chars) == r.order
    assert len({tuple(c.exponent.tolist()) for c in chars}) == r.order
    for chi in chars:
        v = chi.values()
        assert np.allclose(v[r.add], v[:, None] * v[None, :])


@pytest.mark.parametrize("spec", SPECS)
def test_character_count(spec):
    assert character_count_check(ring(spec))


@pytest.mark.parametrize("spec", SPECS)
def test_element_orders(spec):
    r = ring(spec)
    add = r.add.tolist()
    for x, o in enumerate(element_orders(r).tolist()):
        y, n = x, 1
        while y != 0:
            y, n = add[y][x], n + 1
        assert n == o


@pytest.mark.parametrize(
    "spec,factors", [("Z4", (4,)), ("Z2xZ4", (2, 4)), ("GF(9)", (3, 3)), ("Z6", (6,)), ("M2(GF(2))", (2, 2, 2, 2))]
)
def test_invariant_factors(spec, factors):
    assert additive_structure(ring(spec)).invariant_factors == factors


def test_smith_diagonal():
    assert smith_diagonal([[2, 4], [6, 8]]) == [2, 4]
    assert smith_diagonal([[2, 0], [0, 3]]) == [1, 6]


@pytest.mark.parametrize("spec", ["Z4", "Z12", "GF(8)", "Z2xZ2", "Z3xZ4", "M2(GF(2))"])
def test_frobenius_rings(spec):
    r = ring(spec)
    chi = is_frobenius(r)
    assert chi is not None
    assert is_generating(r, chi)
    # brute force: no nonzero left ideal inside ker(chi)
    kernel = set(chi.kernel().tolist())
    for x in range(1, r.order):
        assert not {int(r.mul[a, x]) for a in range(r.order)} <= kernel


def test_non_frobenius_table_ring():
    t = ring("table:f2xy")
    assert is_frobenius(t) is None
    # every character kills one of the three minimal ideals
    for chi in characters(t):
        assert not is_generating(t, chi)


def test_z4_character_values():
    chi = is_frobenius(ring("Z4"))
    assert cmath.isclose(chi(1), 1j)
    values = [chi(x) for x in range(4)]
    for a, b in itertools.product(range(4), repeat=2):
        assert cmath.isclose(chi((a + b) % 4), values[a] * values[b])
