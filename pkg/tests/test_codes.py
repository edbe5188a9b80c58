from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import ring, weights
from frobtwo.codes import (
    CodeAnalysis,
    DegenerateCodeError,
    LinearCode,
    classify,
    compute_alpha,
    frequency_checks,
    modularity,
    predicted_frequencies,
    verify_coordinate_remark,
    verify_corr_lemma,
    verify_coset_lemma,
    verify_w1w2_relation,
    weight_distribution,
)
from frobtwo.config import Caps
from frobtwo.corpus import code_names, load_corpus_code
from frobtwo.homweight import compute_weight_table
from frobtwo.errors import CapExceededError, NotApplicable, RingSpecError
from frobtwo.ideals import units
from strategies import generators, invertible_matrix, matmul, right_scale

F = Fraction
CLEBSCH = [[1, 0, 0, 0, 1], [0, 1, 0, 0, 1], [0, 0, 1, 0, 1], [0, 0, 0, 1, 1]]


def analysis(spec, g):
    code = LinearCode(ring(spec), g)
    return CodeAnalysis(code, weights(spec))


@given(generators())
def test_words_match_brute_force(case):
    spec, g = case
    code = LinearCode(ring(spec), g)
    brute = oracles.brute_span(ring(spec), g.tolist())
    assert {tuple(w) for w in code.words.tolist()} == brute
    assert code.size == len(brute)
    assert not code.words[0].any()


@given(generators())
def test_distribution_matches_brute_force(case):
    spec, g = case
    code = LinearCode(ring(spec), g)
    got = weight_distribution(code, weights(spec)).counts
    assert got == oracles.brute_distribution(ring(spec), weights(spec).values, g.tolist())


@given(generators(), st.integers(0, 2**32 - 1))
def test_modularity_invariant_under_monomial_and_gl(case, seed):
    spec, g = case
    r = ring(spec)
    rng = np.random.default_rng(seed)
    u = list(units(r).elements)
    base = modularity(LinearCode(r, g))
    perm = g[:, rng.permutation(g.shape[1])]
    assert modularity(LinearCode(r, perm)) == base
    assert modularity(LinearCode(r, right_scale(r, g, u, rng))) == base
    padded = np.vstack([g, np.zeros((1, g.shape[1]), dtype=np.int32)])
    assert modularity(LinearCode(r, padded)) == base
    m = invertible_matrix(r, g.shape[0], u, rng)
    changed = LinearCode(r, matmul(r, m, g))
    assert changed.size == LinearCode(r, g).size
    assert modularity(changed) == base


@given(generators(), st.integers(0, 2**32 - 1))
def test_alpha_invariant_under_column_unit_scaling(case, seed):
    spec, g = case
    r = ring(spec)
    rng = np.random.default_rng(seed)
    scaled = right_scale(r, g, list(units(r).elements), rng)
    assert compute_alpha(LinearCode(r, scaled)).key() == compute_alpha(LinearCode(r, g)).key()


@given(generators())
def test_corr_lemma_on_modular_codes(case):
    spec, g = case
    code = LinearCode(ring(spec), g)
    mod = modularity(code)
    wt = weights(spec)
    if not mod.is_modular:
        with pytest.raises(NotApplicable):
            verify_corr_lemma(code, wt, np.zeros(code.n, dtype=np.int32))
        return
    for d in code.words[:4].tolist() + [[1] * code.n]:
        check = verify_corr_lemma(code, wt, d)
        assert check.ok
        brute = sum(
            oracles.word_weight(wt.values, c) * oracles.word_weight(wt.values, [int(code.ring.add[a, b]) for a, b in zip(c, d)])
            for c in code.words.tolist()
        )
        assert check.lhs == brute


def test_clebsch_profile():
    a = analysis("GF(2)", CLEBSCH)
    assert a.distribution.counts == {0: 1, 4: 10, 8: 5}
    p = a.profile
    assert (p.w1, p.w2, p.b1, p.b2, p.c0) == (4, 8, 10, 5, 1)
    assert a.modularity.is_modular and a.modularity.index == 1
    assert predicted_frequencies(p, 5, 16, 1) == (10, 5)
    assert all(c.ok for c in frequency_checks(p))
    assert verify_w1w2_relation(p, 5, 16, 1, 1).ok


def test_clebsch_lemmas_exhaustive():
    """Every shift d in GF(2)^5."""
    a = analysis("GF(2)", CLEBSCH)
    import itertools

    for d in itertools.product(range(2), repeat=5):
        assert verify_corr_lemma(a.code, a.wt, d, 1).ok
        assert verify_coset_lemma(a.code, a.wt, a.profile, d).ok
    for j in range(5):
        for dj in range(2):
            assert all(c.ok for c in verify_coordinate_remark(a.code, a.wt, j, dj, a.profile, 1))


@pytest.mark.parametrize("name", code_names())
def test_corpus_lemmas(name):
    code = load_corpus_code(name)
    a = CodeAnalysis(code, compute_weight_table(code.ring))
    if not a.modularity.is_modular:
        return
    r = a.modularity.index
    for d in code.words[:8]:
        assert verify_corr_lemma(code, a.wt, d, r).ok
        if a.profile is not None:
            assert verify_coset_lemma(code, a.wt, a.profile, d).ok
    if a.profile is not None:
        assert verify_w1w2_relation(a.profile, code.n, code.size, a.profile.c0, r).ok


def test_alpha_and_points():
    z4 = ring("Z4")
    alpha = compute_alpha(LinearCode(z4, [[1, 3, 2]]))
    assert alpha[(1,)] == 2 and alpha[(2,)] == 1
    assert [p.orbit_size for p in alpha.points] == [2, 1]
    assert [p.cyclic_size for p in alpha.points] == [4, 2]
    assert alpha.total == 3


def test_modularity_examples():
    z4 = ring("Z4")
    assert not modularity(LinearCode(z4, [[1, 2]])).is_modular
    assert modularity(LinearCode(z4, [[1, 1, 2]])).index == 1
    assert modularity(LinearCode(z4, [[1, 0, 1], [0, 1, 1]])).index == F(1, 2)


def test_classification():
    z4 = ring("Z4")
    wt = weights("Z4")
    one = LinearCode(z4, [[1, 1, 2]])
    cls = classify(one, wt)
    assert cls.kind == "one-weight" and cls.fact_holds
    two = LinearCode(z4, [[1, 1]])
    assert classify(two, wt).kind == "two-weight"
    assert classify(LinearCode(z4, [[1, 2]]), wt).kind == "two-weight"
    assert classify(LinearCode(z4, [[1, 0], [0, 1]]), wt).kind == "other"


def test_weight_zero_subcode():
    code = load_corpus_code("z2xz2_weight_zero_subcode")
    a = CodeAnalysis(code, compute_weight_table(code.ring))
    assert a.distribution.zero_count == 4
    assert not a.c0_trivial


def test_degenerate_coordinates():
    z4 = ring("Z4")
    with pytest.raises(DegenerateCodeError):
        LinearCode(z4, [[1, 0]])
    code = LinearCode(z4, [[1, 0]], allow_degenerate=True)
    assert code.degenerate and code.zero_columns == (1,)


def test_input_validation():
    z4 = ring("Z4")
    with pytest.raises(RingSpecError):
        LinearCode(z4, [[4]])
    with pytest.raises(CapExceededError):
        LinearCode(z4, [[1]] * 13, caps=Caps(max_enumeration=2**24))


def test_index_of_and_contains():
    code = LinearCode(ring("Z4"), [[1, 1]])
    assert code.contains([2, 2]) and not code.contains([1, 2])
    assert code.index_of([0, 0]) == 0


def test_from_json_round_trip(tmp_path):
    code = load_corpus_code("z2xz2_idempotents")
    path = tmp_path / "c.json"
    import json

    path.write_text(json.dumps(code.to_json()))
    again = LinearCode.from_json(path)
    assert (again.generator == code.generator).all()
    assert code.generator_strings() == [["(0,1)", "(1,0)"]]
