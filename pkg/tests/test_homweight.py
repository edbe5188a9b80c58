import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import ring, weights
from frobtwo.corpus import base_ring_specs
from frobtwo.errors import NotFrobeniusError
from frobtwo.homweight import (
    character_sum_weights,
    compute_S0,
    compute_weight_table,
    corr_sum_ideal,
    corr_sum_vectors,
    equivalent_vectors,
    left_unit_invariant,
    right_unit_invariant,
    unit_orbit_size,
    verify_egal,
)
from frobtwo.ideals import enumerate_ideals, units

F = Fraction
RINGS = ["Z4", "Z6", "Z8", "Z9", "GF(4)", "Z2xZ2", "Z2xZ4", "Z3xZ3", "GF(4)xZ2", "M2(GF(2))"]


def test_z4_is_lee():
    assert weights("Z4").values == (0, 1, 2, 1)


@pytest.mark.parametrize("m", range(2, 25))
def test_zm_closed_form(m):
    assert weights(f"Z{m}").values == tuple(oracles.zm_weight(m, x) for x in range(m))


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16])
def test_fields_scaled_hamming(q):
    assert weights(f"GF({q})").values == (0,) + (F(q, q - 1),) * (q - 1)


@pytest.mark.parametrize("spec", RINGS + ["Z2xZ3", "GF(8)xZ4"])
def test_float_path_agrees(spec):
    exact = np.array([float(v) for v in weights(spec).values])
    approx = character_sum_weights(ring(spec))
    assert np.abs(approx.imag).max() < 1e-9
    assert np.abs(approx.real - exact).max() < 1e-9


def test_product_weight_is_not_additive():
    # w_A + w_B would give (0,2,2,4); the normalized per-ideal sums force w(1,1) = 0
    assert weights("Z2xZ2").values == (0, 2, 2, 0)
    assert sum(weights("Z2xZ3").values) == 6


def test_non_frobenius_rejected():
    with pytest.raises(NotFrobeniusError):
        compute_weight_table(ring("table:f2xy"))


@pytest.mark.parametrize("spec", RINGS)
def test_unit_invariance_both_sides(spec):
    wt = weights(spec)
    assert left_unit_invariant(wt)
    # observed for every built-in ring, reported as information only
    assert right_unit_invariant(wt)


@given(st.sampled_from(RINGS), st.data())
def test_unit_invariance_property(spec, data):
    r, wt = ring(spec), weights(spec)
    u = data.draw(st.sampled_from(units(r).elements))
    x = data.draw(st.integers(0, r.order - 1))
    assert wt[r.mul[u, x]] == wt[x] == wt[r.mul[x, u]]


@pytest.mark.parametrize("spec", RINGS)
def test_egal_all_ideals(spec):
    r, wt = ring(spec), weights(spec)
    for side in ("left", "right", "two-sided"):
        for ideal in enumerate_ideals(r, side):
            if ideal.is_zero():
                continue
            for c in range(r.order):
                check = verify_egal(r, wt, ideal, c)
                assert check.ok, (side, ideal.elements, c)
                brute = sum(wt[r.add[x, c]] for x in ideal.elements)
                assert check.lhs == brute


def _brute_corr(r, wt, ideal, a, s):
    return sum(wt[x] * wt[int(r.add[r.mul[x, a], s])] for x in ideal.elements)


@pytest.mark.parametrize("spec", ["Z4", "Z6", "Z8", "Z2xZ2", "GF(4)", "Z2xZ4", "M2(GF(2))"])
def test_ideal_correlation_exhaustive(spec):
    r, wt = ring(spec), weights(spec)
    for ideal in enumerate_ideals(r, "left"):
        if ideal.is_zero():
            continue
        for a, s in itertools.product(range(r.order), repeat=2):
            check = corr_sum_ideal(r, wt, ideal, a, s)
            assert check.ok, (ideal.elements, a, s)
            assert check.lhs == _brute_corr(r, wt, ideal, a, s)


@pytest.mark.parametrize("spec,value", [("Z4", 6), ("Z6", 9), ("GF(2)", 4), ("GF(4)", F(16, 3)), ("Z8", 10)])
def test_sum_of_squares(spec, value):
    r, wt = ring(spec), weights(spec)
    full = enumerate_ideals(r, "left")[-1]
    assert sum(v * v for v in wt.values) == value == r.order + F(r.order, len(units(r)))
    assert corr_sum_ideal(r, wt, full, r.one, 0).rhs == value


def test_annihilated_case_named_separately():
    r, wt = ring("Z4"), weights("Z4")
    full = enumerate_ideals(r, "left")[-1]
    check = corr_sum_ideal(r, wt, full, 0, 0)
    assert check.name == "corr-ideal.annihilated"
    assert check.lhs == check.rhs == 0


@pytest.mark.parametrize("spec", ["Z2", "Z3", "Z4", "GF(4)", "Z2xZ2"])
def test_vector_correlation_exhaustive(spec):
    r, wt = ring(spec), weights(spec)
    for k in (1, 2):
        vectors = [v for v in itertools.product(range(r.order), repeat=k) if any(v)]
        for g, h in itertools.product(vectors, repeat=2):
            for s in range(r.order):
                check = corr_sum_vectors(r, wt, g, h, s)
                assert check.ok, (g, h, s)


def test_vector_correlation_brute_lhs():
    r, wt = ring("Z4"), weights("Z4")
    g, h = (1, 2), (3, 2)
    brute = F(0)
    for x in itertools.product(range(4), repeat=2):
        xg = sum(a * b for a, b in zip(x, g)) % 4
        xh = sum(a * b for a, b in zip(x, h)) % 4
        brute += wt[xg] * wt[(xh + 1) % 4]
    assert corr_sum_vectors(r, wt, g, h, 1).lhs == brute


def test_equivalent_vectors():
    r = ring("Z4")
    assert equivalent_vectors(r, [1, 2], [3, 2])
    assert not equivalent_vectors(r, [1, 2], [1, 0])
    assert unit_orbit_size(r, [1, 2]) == 2
    assert unit_orbit_size(r, [2, 0]) == 1


@pytest.mark.parametrize(
    "spec,tau,elements", [("Z4", 1, (0,)), ("Z2xZ2", 2, (0, 3)), ("GF(8)", 0, (0,)), ("Z2xZ2xZ2", 3, None)]
)
def test_zero_weight_subgroup(spec, tau, elements):
    r, wt = ring(spec), weights(spec)
    s0 = compute_S0(r, wt)
    assert s0.tau == tau
    if elements is not None:
        assert s0.elements == elements
    assert len(s0) == max(1, 2 ** (tau - 1))
    assert set(s0.elements) == {x for x in range(r.order) if wt[x] == 0}


@pytest.mark.parametrize("spec", base_ring_specs()[:10])
def test_weights_average_one_on_ring(spec):
    wt = weights(spec)
    assert sum(wt.values) == ring(spec).order


def test_weight_table_helpers():
    wt = weights("Z4")
    assert wt.scale == 1
    assert wt.word_weight([1, 2, 3]) == 4
    assert wt.as_strings() == ["0", "1", "2", "1"]
    w6 = weights("Z6")
    assert w6.scale == 2
    assert w6.exact(w6.scaled[1]) == F(1, 2)
    assert weights("M2(GF(2))").opposite().ring.is_opposite
