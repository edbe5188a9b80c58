from fractions import Fraction

import numpy as np
import pytest

import oracles
from frobtwo.codes import CodeAnalysis, LinearCode, weight_distribution
from frobtwo.corpus import load_corpus_code
from frobtwo.duality import (
    build_dual,
    predicted_dual_srg,
    predicted_dual_weights,
    verify_dual_theorem,
    verify_gamma_dual,
    weight_class_matrix,
)
from frobtwo.errors import NotApplicable
from frobtwo.homweight import compute_weight_table

TWO_WEIGHT_MODULAR = ["clebsch", "z4_diagonal", "z4_shrikhande", "gf2_hyperplane_complement", "gf4_two_weight", "m2gf2_full", "z2xz2_idempotents"]


def parent(name):
    code = load_corpus_code(name)
    return CodeAnalysis(code, compute_weight_table(code.ring))


@pytest.mark.parametrize("name", TWO_WEIGHT_MODULAR)
def test_dual_theorem(name):
    dual = build_dual(parent(name))
    report = verify_dual_theorem(dual)
    assert report.ok, report.to_json()
    graph = verify_gamma_dual(dual)
    assert graph.ok, graph.to_json()


@pytest.mark.parametrize("name", TWO_WEIGHT_MODULAR)
def test_dual_words_are_the_right_span(name):
    a = parent(name)
    dual = build_dual(a)
    ring = a.code.ring
    brute = oracles.brute_column_span(ring, dual.m1.tolist())
    assert {tuple(w) for w in dual.code.words.tolist()} == brute


def test_clebsch_dual_values():
    a = parent("clebsch")
    first, second, w2 = predicted_dual_weights(a)
    assert first == second == 8 and w2 == 12
    dual = build_dual(a)
    assert dual.length == 10
    assert dual.analysis.distribution.counts == {0: 1, 8: 5, 12: 10}
    assert predicted_dual_srg(a).as_tuple() == (16, 5, 0, 2)
    assert dual.modularity.index == 1


def test_trivial_dual_values():
    a = parent("z4_diagonal")
    dual = build_dual(a)
    p = dual.analysis.profile
    assert (p.w1, p.w2) == (2, 4)
    assert verify_gamma_dual(dual).predicted.trivial


def test_m1_rows_are_weight_w1_words():
    a = parent("z4_shrikhande")
    m1 = weight_class_matrix(a, 1)
    assert len(m1) == a.profile.b1
    assert all(a.wt.word_weight(w) == a.profile.w1 for w in m1)


def test_dual_row_order_is_irrelevant():
    a = parent("gf4_two_weight")
    dual = build_dual(a)
    rng = np.random.default_rng(1)
    ref = dual.analysis.distribution.counts
    for _ in range(5):
        shuffled = LinearCode(dual.code.ring, dual.m1[rng.permutation(dual.length)].T)
        assert weight_distribution(shuffled, dual.analysis.wt).counts == ref


def test_noncommutative_dual_is_a_right_code():
    dual = build_dual(parent("m2gf2_full"))
    assert dual.code.side == "right"
    assert dual.index_check.ok and dual.index_check.lhs == Fraction(1)


def test_dual_requires_two_weight():
    with pytest.raises(NotApplicable):
        build_dual(parent("gf2_simplex"))
