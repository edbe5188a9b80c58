"""The built-in self-test: every operation on known inputs, every corpus code end to end."""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import corpus
from .characters import is_frobenius
from .codes import CodeAnalysis, LinearCode, classify, compute_alpha, modularity, weight_distribution
from .config import DEFAULT_CAPS, Caps
from .duality import build_dual
from .errors import FrobtwoError
from .graphs import CayleyGraph, PDSWitness, verify_pds, verify_srg
from .homweight import (
    compute_S0,
    compute_weight_table,
    corr_sum_ideal,
    corr_sum_vectors,
    verify_egal,
)
from .ideals import annihilators, enumerate_ideals, enumerate_left_ideals, rowspace_colspace_cardinalities, units
from .report import analysis_report
from .rings import parse_ring_spec
from .search import Catalog, SearchSpace, canonical_key, enumerate_candidates, projective_points, scan

F = Fraction


@dataclass
class Outcome:
    name: str
    ok: bool
    detail: str = ""
    seconds: float = 0.0


def _weights(spec):
    return tuple(compute_weight_table(parse_ring_spec(spec)).values)


def check_rings():
    z23 = parse_ring_spec("Z2xZ3")
    m2 = parse_ring_spec("M2(GF(2))")
    yield "parse Z4", parse_ring_spec("Z4").order == 4
    yield "parse Z2xZ3", z23.order == 6 and [z23.element_str(u) for u in units(z23).elements] == ["(1,1)", "(1,2)"]
    yield "parse M2(GF(2))", m2.order == 16 and len(units(m2)) == 6
    yield "units Z4", units(parse_ring_spec("Z4")).elements == (1, 3)
    yield "units GF(4)", len(units(parse_ring_spec("GF(4)"))) == 3
    yield "units Z6", units(parse_ring_spec("Z6")).elements == (1, 5)


def check_ideals():
    z4, z6, m2 = (parse_ring_spec(s) for s in ("Z4", "Z6", "M2(GF(2))"))
    yield "ideals Z4", [i.elements for i in enumerate_left_ideals(z4)] == [(0,), (0, 2), (0, 1, 2, 3)]
    yield "ideals Z6", [i.elements for i in enumerate_left_ideals(z6)] == [(0,), (0, 3), (0, 2, 4), tuple(range(6))]
    left = enumerate_left_ideals(m2)
    sizes = [len(i) for i in left]
    yield "ideals M2(GF(2))", sizes == [1, 4, 4, 4, 16]
    right = enumerate_ideals(m2, "right")
    yield "left and right ideals of M2(GF(2)) differ", {i.elements for i in left} != {i.elements for i in right}
    la, ra = annihilators(z4, [2])
    yield "annihilators Z4 {2}", la.elements == ra.elements == (0, 2)
    la, ra = annihilators(z6, [3])
    yield "annihilators Z6 {3}", la.elements == ra.elements == (0, 2, 4)
    la, ra = annihilators(m2, [m2.one])
    yield "annihilators of 1", la.elements == ra.elements == (0,)


def check_frobenius():
    z4 = parse_ring_spec("Z4")
    chi = is_frobenius(z4)
    yield "Z4 character is the identity exponent map", chi is not None and list(chi.exponent) == [0, 1, 2, 3]
    yield "Z2xZ3 is Frobenius", is_frobenius(parse_ring_spec("Z2xZ3")) is not None
    yield "M2(GF(2)) is Frobenius", is_frobenius(parse_ring_spec("M2(GF(2))")) is not None
    t = parse_ring_spec("table:f2xy")
    yield "F2[x,y]/(x^2,xy,y^2) is not Frobenius", is_frobenius(t) is None
    yield "same shape Z4 [[2]]", rowspace_colspace_cardinalities(z4, [[2]]) == (2, 2)
    c, d = rowspace_colspace_cardinalities(z4, [[1, 1], [0, 2]])
    yield "same shape Z4 [[1,1],[0,2]]", c == d
    witness = next(
        ((a, b) for a, b in itertools.product(range(8), repeat=2)
         if len(set(rowspace_colspace_cardinalities(t, [[a, b]]))) == 2),
        None,
    )
    yield "unequal row/column spaces over the non-Frobenius ring", witness is not None


def check_weights():
    yield "Z4 weights", _weights("Z4") == (0, 1, 2, 1)
    yield "GF(3) weights", _weights("GF(3)") == (0, F(3, 2), F(3, 2))
    yield "Z6 weights", _weights("Z6") == (0, F(1, 2), F(3, 2), 2, F(3, 2), F(1, 2))
    for q in (2, 3, 4, 8):
        yield f"GF({q}) scaled Hamming", _weights(f"GF({q})") == (0,) + (F(q, q - 1),) * (q - 1)
    # compute_weight_table cross-checks the float character sum at 1e-9
    count = 0
    for spec in corpus.builtin_ring_specs():
        compute_weight_table(parse_ring_spec(spec))
        count += 1
    yield f"exact and float weights agree on {count} built-in rings", True


def check_s0():
    for spec, tau, s0 in (("Z4", 1, (0,)), ("Z2xZ2", 2, (0, 3)), ("GF(8)", 0, (0,))):
        r = parse_ring_spec(spec)
        z = compute_S0(r, compute_weight_table(r))
        yield f"S0 {spec}", z.tau == tau and z.elements == s0 and len(z) == max(1, 2 ** (tau - 1))


def check_identities():
    for spec in ("Z4", "Z6", "Z2xZ2", "GF(4)", "Z8", "Z2xZ4", "M2(GF(2))"):
        r = parse_ring_spec(spec)
        wt = compute_weight_table(r)
        ideals = [i for side in ("left", "right", "two-sided") for i in enumerate_ideals(r, side) if not i.is_zero()]
        ok = all(verify_egal(r, wt, i, c).ok for i in ideals for c in range(r.order))
        left = [i for i in enumerate_ideals(r, "left") if not i.is_zero()]
        ok_corr = all(corr_sum_ideal(r, wt, i, x, s).ok for i in left for x in range(r.order) for s in range(r.order))
        yield f"egal {spec}", ok
        yield f"ideal correlation {spec}", ok_corr
    z4 = parse_ring_spec("Z4")
    wt = compute_weight_table(z4)
    full = enumerate_left_ideals(z4)[-1]
    yield "sum w^2 over Z4 is 6", corr_sum_ideal(z4, wt, full, 1, 0).lhs == 6
    yield "Z4 r=2 correlation", corr_sum_ideal(z4, wt, full, 2, 0).lhs == 4
    yield "Z4 s=2 correlation", corr_sum_ideal(z4, wt, full, 1, 2).lhs == 2
    yield "vector correlation Z4 1~3", corr_sum_vectors(z4, wt, [1], [3], 0).lhs == 6
    yield "vector correlation Z4 1,2", corr_sum_vectors(z4, wt, [1], [2], 0).lhs == 4
    gf2 = parse_ring_spec("GF(2)")
    c = corr_sum_vectors(gf2, compute_weight_table(gf2), [1, 0], [0, 1], 0)
    yield "vector correlation GF(2)^2", c.ok and c.lhs == 4


def check_codes():
    z4 = parse_ring_spec("Z4")
    wt = compute_weight_table(z4)
    yield "Z4 [[2,2]] has 2 words", LinearCode(z4, [[2, 2]]).size == 2
    alpha = compute_alpha(LinearCode(z4, [[1, 3, 2]]))
    yield "alpha of Z4 [[1,3,2]]", alpha[(1,)] == 2 and alpha[(2,)] == 1
    yield "Z4 [[1,2]] is not modular", not modularity(LinearCode(z4, [[1, 2]])).is_modular
    code = LinearCode(z4, [[1, 1, 2]])
    dist = weight_distribution(code, wt)
    cls = classify(code, wt, dist)
    yield "Z4 [[1,1,2]] is one-weight with the fact", cls.kind == "one-weight" and cls.fact_holds


def check_graphs():
    cycle = np.array([[0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]], dtype=np.uint8)
    m = verify_srg(CayleyGraph(np.zeros((4, 1), np.int32), cycle))
    yield "4-cycle is (4,2,0,2)", m is not None and m.as_tuple() == (4, 2, 0, 2)
    k4 = np.ones((4, 4), dtype=np.uint8) - np.eye(4, dtype=np.uint8)
    yield "K4 is not an SRG", verify_srg(CayleyGraph(np.zeros((4, 1), np.int32), k4)) is None
    z4 = parse_ring_spec("Z4")
    group = np.arange(4, dtype=np.int32)[:, None]
    yield "{1} is not a PDS in Z4", verify_pds(PDSWitness(z4, group, np.array([[1]], np.int32))) is None
    p = verify_pds(PDSWitness(z4, group, np.array([[1], [3]], np.int32)))
    yield "{1,3} is a (4,2,0,2) PDS", p is not None and p.as_tuple() == (4, 2, 0, 2)


EXPECTED = {
    "clebsch": {
        "weights": {"0": 1, "4": 10, "8": 5},
        "srg": ("16", "10", "6", "6"),
        "pds": (16, 5, 0, 2),
        "dual_weights": ("8", "12"),
        "dual_srg": ("16", "5", "0", "2"),
    },
    "z4_diagonal": {
        "weights": {"0": 1, "2": 2, "4": 1},
        "srg": ("4", "2", "0", "2"),
        "pds": (4, 2, 0, 2),
        "dual_weights": ("2", "4"),
        "dual_srg": ("4", "2", "0", "2"),
    },
    "z4_shrikhande": {"srg": ("16", "6", "2", "2"), "pds": (16, 6, 2, 2)},
    "gf2_simplex": {"weights": {"0": 1, "4": 3}},
    "gf2_hyperplane_complement": {"weights": {"0": 1, "4": 6, "8": 1}, "srg": ("8", "6", "4", "6")},
    "z4_one_weight": {"weights": {"0": 1, "4": 3}},
}


def _srg_tuple(block):
    return None if block is None else tuple(block[x] for x in ("N", "K", "lambda", "mu"))


def check_corpus(seed: int, caps: Caps):
    for name in corpus.code_names():
        report = analysis_report(CodeAnalysis(c := corpus.load_corpus_code(name, caps), compute_weight_table(c.ring)), seed, caps)
        ok = report["status"] == "pass"
        exp = EXPECTED.get(name, {})
        if "weights" in exp:
            ok &= report["weights"] == exp["weights"]
        if "srg" in exp:
            ok &= _srg_tuple(report["srg"]["measured"]) == exp["srg"] == _srg_tuple(report["srg"]["predicted"])
        if "pds" in exp:
            pds = report["pds"]["pds"]
            ok &= pds is not None and (pds["N"], pds["K"], pds["lambda"], pds["mu"]) == exp["pds"]
        if "dual_weights" in exp:
            prof = report["dual"]["report"]["profile"]
            ok &= (prof["w1"], prof["w2"]) == exp["dual_weights"]
        if "dual_srg" in exp:
            g = report["dual"]["graph"]
            ok &= _srg_tuple(g["measured"]) == exp["dual_srg"] == _srg_tuple(g["predicted"])
        yield f"corpus {name}", ok, ", ".join(report["failures"])


def check_dual_row_order(seed: int):
    rng = np.random.default_rng(seed)
    for name in ("clebsch", "z4_shrikhande", "gf4_two_weight"):
        code = corpus.load_corpus_code(name)
        a = CodeAnalysis(code, compute_weight_table(code.ring))
        dual = build_dual(a)
        ref = dual.analysis.distribution.counts
        ok = True
        for _ in range(5):
            perm = rng.permutation(dual.length)
            shuffled = LinearCode(dual.code.ring, dual.m1[perm].T)
            ok &= weight_distribution(shuffled, dual.analysis.wt).counts == ref
        yield f"dual row order {name}", ok


def check_search(seed: int):
    gf2 = parse_ring_spec("GF(2)")
    pts = projective_points(gf2, 2)
    cands = [c.indices for c in enumerate_candidates(SearchSpace("GF(2)", 2, 3, 3))]
    yield "GF(2) k=2 n=3 candidates include the simplex", (0, 1, 2) in cands and len(pts) == 3
    z4 = list(enumerate_candidates(SearchSpace("Z4", 1, 2, 2, modular_only=True)))
    yield "Z4 k=1 n=2 modular candidates", [c.indices for c in z4] == [(0, 0), (1, 1)]
    space = SearchSpace("GF(2)", 4, 5, 5, modular_only=True)
    cat = scan(space, seed=seed)
    pts4 = projective_points(gf2, 4)
    clebsch_key = canonical_key(gf2, compute_alpha(corpus.load_corpus_code("clebsch")))
    hit = next((e for e in cat.entries if e.key == clebsch_key), None)
    yield "GF(2) k=4 n=5 re-finds the Clebsch code", (
        hit is not None
        and hit.verified
        and hit.csv_row()["K"] == "10"
        and hit.report["dual"]["graph"]["measured"]["K"] == "5"
        and len(pts4) == 15
    )
    yield "every catalogued code verifies", cat.all_verified
    small = SearchSpace("Z4", 2, 1, 3, modular_only=True)
    one, two = scan(small, seed=seed), scan(small, jobs=2, seed=seed)
    yield "scan is deterministic", one.to_csv() == two.to_csv() and one.to_jsonl() == two.to_jsonl()


def check_equivalence_sweep(seed: int):
    kinds = {}
    ok = True
    for spec, ks, n_max in (("GF(2)", (1, 2, 3), 6), ("Z4", (1, 2), 5)):
        for k in ks:
            cat: Catalog = scan(SearchSpace(spec, k, 1, n_max, modular_only=True), seed=seed)
            ok &= cat.all_verified
            for kind, count in cat.stats.applicable_kinds.items():
                kinds[kind] = kinds.get(kind, 0) + count
    seen = all(kinds.get(k, 0) > 0 for k in ("one-weight", "two-weight-trivial", "two-weight-nontrivial"))
    yield "equivalence theorem sweep", ok and seen, str(dict(sorted(kinds.items())))


def run(seed: int = 0, caps: Caps = DEFAULT_CAPS, progress=None) -> list[Outcome]:
    groups = [
        check_rings,
        check_ideals,
        check_frobenius,
        check_weights,
        check_s0,
        check_identities,
        check_codes,
        check_graphs,
        lambda: check_corpus(seed, caps),
        lambda: check_dual_row_order(seed),
        lambda: check_search(seed),
        lambda: check_equivalence_sweep(seed),
    ]
    results = []
    for group in groups:
        start = time.perf_counter()
        try:
            for item in group():
                name, ok, *rest = item
                out = Outcome(name, bool(ok), rest[0] if rest else "", time.perf_counter() - start)
                results.append(out)
                if progress:
                    progress(out)
                start = time.perf_counter()
        except (FrobtwoError, ArithmeticError, ValueError) as exc:
            out = Outcome(getattr(group, "__name__", "group"), False, f"{type(exc).__name__}: {exc}")
            results.append(out)
            if progress:
                progress(out)
    return results
