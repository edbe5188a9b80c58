import csv
import io
import json
from fractions import Fraction
from math import comb

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import ring
from frobtwo.codes import LinearCode, compute_alpha
from frobtwo.config import Caps
from frobtwo.errors import CapExceededError
from frobtwo.ideals import units
from frobtwo.search import (
    CSV_COLUMNS,
    SearchSpace,
    canonical_key,
    enumerate_candidates,
    projective_points,
    scan,
)
from strategies import generators, right_scale


@pytest.mark.parametrize("spec,k,count", [("GF(2)", 3, 7), ("GF(3)", 2, 4), ("Z4", 2, 9), ("GF(4)", 2, 5), ("Z2xZ2", 2, 15)])
def test_projective_points_partition(spec, k, count):
    r = ring(spec)
    pts = projective_points(r, k)
    assert len(pts) == count
    # the orbits gR^x of the representatives partition R^k \ {0}
    assert int(pts.orbit_sizes.sum()) == r.order**k - 1
    u = units(r).array
    for g in pts.reps:
        orbit = r.mul[g][:, u].T
        assert tuple(g) == min(map(tuple, orbit.tolist()))


def test_candidate_counts():
    space = SearchSpace("GF(2)", 3, 1, 4)
    cands = list(enumerate_candidates(space))
    assert len(cands) == sum(comb(7 + n - 1, n) for n in range(1, 5))
    assert len({(c.n, c.indices) for c in cands}) == len(cands)
    assert all(list(c.indices) == sorted(c.indices) for c in cands)


def test_modular_filter():
    cands = [c.indices for c in enumerate_candidates(SearchSpace("Z4", 1, 2, 2, modular_only=True))]
    assert cands == [(0, 0), (1, 1)]
    pts = projective_points(ring("Z4"), 2)
    half = list(enumerate_candidates(SearchSpace("Z4", 2, 2, 2, index=Fraction(1, 2))))
    assert half
    for c in half:
        assert {Fraction(c.indices.count(i), int(pts.orbit_sizes[i])) for i in c.indices} == {Fraction(1, 2)}


def test_space_caps():
    with pytest.raises(CapExceededError):
        SearchSpace("Z32", 1, 1, 2).validate()
    with pytest.raises(CapExceededError):
        SearchSpace("GF(2)", 2, 1, 20).validate()
    with pytest.raises(CapExceededError):
        SearchSpace("GF(16)", 6, 1, 2, caps=Caps()).validate()
    with pytest.raises(ValueError):
        SearchSpace("GF(2)", 2, 3, 2).validate()


@pytest.fixture(scope="module")
def z4_catalog():
    return scan(SearchSpace("Z4", 2, 1, 3, modular_only=True), seed=0)


def test_catalog_contents(z4_catalog):
    cat = z4_catalog
    assert cat.all_verified
    assert cat.entries
    rows = list(csv.DictReader(io.StringIO(cat.to_csv())))
    assert list(rows[0]) == CSV_COLUMNS
    assert len(rows) == len(cat.entries)
    assert all(row["verified"] == "true" for row in rows)
    assert len({e.key for e in cat.entries}) == len(cat.entries)
    lines = cat.to_jsonl().splitlines()
    assert len(lines) == len(cat.entries)
    assert json.loads(lines[0])["report"]["schema_version"] == 1


def test_catalog_sorted_by_length(z4_catalog):
    ns = [e.n for e in z4_catalog.entries]
    assert ns == sorted(ns)


def test_scan_deterministic_across_jobs(z4_catalog):
    again = scan(SearchSpace("Z4", 2, 1, 3, modular_only=True), jobs=3, seed=0)
    assert again.to_csv() == z4_catalog.to_csv()
    assert again.to_jsonl() == z4_catalog.to_jsonl()
    assert again.stats.to_json() == z4_catalog.stats.to_json()


def test_catalog_write(tmp_path, z4_catalog):
    csv_path, jsonl_path = z4_catalog.write(tmp_path / "cat.csv")
    assert jsonl_path.suffix == ".jsonl"
    assert csv_path.read_text() == z4_catalog.to_csv()


def test_stats_account_for_every_candidate(z4_catalog):
    s = z4_catalog.stats
    assert sum(s.kinds.values()) == s.candidates
    assert s.kinds["two-weight"] == s.trivial_two_weight + s.nontrivial_two_weight
    assert sum(s.applicable_kinds.values()) == s.equivalence_checked


def _monomial_keys(spec, g, seed, count):
    r = ring(spec)
    u = list(units(r).elements)
    rng = np.random.default_rng(seed)
    out = set()
    for _ in range(count):
        h = right_scale(r, g[:, rng.permutation(g.shape[1])], u, rng)
        out.add(canonical_key(r, compute_alpha(LinearCode(r, h))))
    return out


def test_keys_invariant_on_catalog(z4_catalog):
    r = ring("Z4")
    for e in z4_catalog.entries[::4]:
        g = np.array([[r.element(x) for x in row] for row in e.generator], dtype=np.int32)
        assert _monomial_keys("Z4", g, 0, 100) == {e.key}


@given(generators(), st.integers(0, 2**32 - 1))
def test_key_invariance_property(case, seed):
    spec, g = case
    key = canonical_key(ring(spec), compute_alpha(LinearCode(ring(spec), g)))
    assert _monomial_keys(spec, g, seed, 5) == {key}


def test_key_format():
    r = ring("GF(2)")
    key = canonical_key(r, compute_alpha(LinearCode(r, [[1, 0, 1], [0, 1, 1]])))
    assert key == "1*(0,1) + 1*(1,0) + 1*(1,1)"
