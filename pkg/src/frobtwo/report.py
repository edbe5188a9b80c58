"""The analysis report: every identity and theorem check for one code, as JSON.

Verdicts are ``{"status": "pass" | "fail" | "n/a", "lhs": ..., "rhs": ...}``
with both sides as exact rational strings. A group of checks (the same
identity over many shifts ``d``) is reported with the summed sides, the
number checked and the number that failed.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .checks import IdentityCheck, frac_str
from .codes import (
    CodeAnalysis,
    corr_lemma_checks,
    coset_lemma_checks,
    frequency_checks,
    verify_coordinate_remark,
    verify_w1w2_relation,
)
from .config import DEFAULT_CAPS, Caps
from .duality import build_dual, verify_dual_theorem, verify_gamma_dual
from .errors import IdentityMismatch, NotApplicable
from .graphs import (
    build_gamma,
    build_omega,
    cayley_graph_of,
    predicted_srg_params,
    trivial_subcode_is_linear,
    verify_equivalence_theorem,
    verify_pds,
    verify_srg,
    verify_trivial_structure,
)
from .homweight import compute_weight_table
from .spaces import keys

SCHEMA_VERSION = 1
RANDOM_SHIFTS = 100


class Verdicts:
    def __init__(self):
        self.entries: dict[str, dict] = {}

    def check(self, check: IdentityCheck, name: str | None = None):
        self.entries[name or check.name] = check.to_json()

    def group(self, name: str, checks: list[IdentityCheck]):
        if not checks:
            self.na(name, "nothing to check")
            return
        failed = sum(not c.ok for c in checks)
        self.entries[name] = {
            "status": "fail" if failed else "pass",
            "lhs": frac_str(sum((c.lhs for c in checks), Fraction(0))),
            "rhs": frac_str(sum((c.rhs for c in checks), Fraction(0))),
            "checked": len(checks),
            "failed": failed,
        }

    def flag(self, name: str, lhs, rhs):
        """A verdict comparing two non-numeric values (flags or tuples)."""
        self.entries[name] = {"status": "pass" if lhs == rhs else "fail", "lhs": _show(lhs), "rhs": _show(rhs)}

    def fail(self, name: str, reason: str):
        self.entries[name] = {"status": "fail", "reason": reason}

    def na(self, name: str, reason: str):
        self.entries[name] = {"status": "n/a", "reason": reason}

    @property
    def failures(self) -> list[str]:
        return [k for k, v in self.entries.items() if v["status"] == "fail"]


def _show(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, tuple):
        return "(" + ",".join("none" if v is None else frac_str(v) for v in x) + ")"
    if x is None:
        return "none"
    return frac_str(x)


def random_shifts(analysis: CodeAnalysis, count: int = RANDOM_SHIFTS, seed: int = 0) -> np.ndarray:
    """Up to ``count`` distinct non-codewords of ``R^n``, drawn with a seeded generator."""
    code = analysis.code
    q, n = code.ring.order, code.n
    space = q**n
    if space - code.size <= 0:
        return np.zeros((0, n), dtype=np.int32)
    word_keys = set(keys(code.words, q).tolist()) if space < 2**62 else None
    rng = np.random.default_rng(seed)
    out, seen = [], set()
    want = min(count, space - code.size)
    attempts = 0
    while len(out) < want and attempts < 1000 * count:
        attempts += 1
        v = rng.integers(0, q, size=n, dtype=np.int64).astype(np.int32)
        if word_keys is not None:
            kv = int(keys(v[None, :], q)[0])
            if kv in word_keys or kv in seen:
                continue
            seen.add(kv)
        elif code.contains(v):
            continue
        out.append(v)
    return np.array(out, dtype=np.int32).reshape(-1, n)


def _batched(fn, ds: np.ndarray, code) -> list[IdentityCheck]:
    """``fn(chunk)`` over chunks of the shifts, keeping the broadcast arrays small."""
    step = max(1, 2**22 // max(1, code.size * code.n))
    out = []
    for i in range(0, len(ds), step):
        out += fn(ds[i : i + step])
    return out


def _lemma_verdicts(v: Verdicts, a: CodeAnalysis, seed: int):
    code, wt = a.code, a.wt
    profile = a.profile
    if code.degenerate:
        for name in ("frequencies", "corr-lemma", "w1w2-relation", "coset-lemma", "coordinate-remark"):
            v.na(name, "all-zero coordinate")
        return
    if profile is not None:
        for c in frequency_checks(profile):
            v.check(c)
    else:
        v.na("frequencies", "not a two-weight code")
    if not a.modularity.is_modular:
        for name in ("corr-lemma", "w1w2-relation", "coset-lemma", "coordinate-remark"):
            v.na(name, "code is not modular")
        return
    r = a.modularity.index
    zero = np.zeros(code.n, dtype=np.int32)
    shifts = {"d=0": zero[None, :], "codewords": code.words, "random": random_shifts(a, seed=seed)}
    for label, ds in shifts.items():
        v.group(f"corr-lemma.{label}", _batched(lambda x: corr_lemma_checks(code, wt, x, r, a.scaled), ds, code))
    remark = []
    for j in range(code.n):
        for dj in code.ring.elements.tolist():
            remark += verify_coordinate_remark(code, wt, j, dj, profile, r, a.scaled)
    for name in sorted({c.name for c in remark}):
        v.group(name, [c for c in remark if c.name == name])
    if profile is None:
        v.na("w1w2-relation", "not a two-weight code")
        v.na("coset-lemma", "not a two-weight code")
        return
    v.check(verify_w1w2_relation(profile, code.n, code.size, profile.c0, r))
    for label, ds in shifts.items():
        v.group(f"coset-lemma.{label}", _batched(lambda x: coset_lemma_checks(code, wt, profile, x, a.scaled), ds, code))


def _srg_block(v: Verdicts, a: CodeAnalysis) -> dict | None:
    profile = a.profile
    if profile is None:
        v.na("srg", "not a two-weight code")
        return None
    graph = build_gamma(a)
    measured = verify_srg(graph)
    block = {"vertices": graph.order, "measured": None if measured is None else measured.to_json()}
    if a.code.degenerate or not a.modularity.is_modular:
        v.na("srg", "all-zero coordinate" if a.code.degenerate else "code is not modular")
        block["predicted"] = None
        return block
    try:
        predicted = predicted_srg_params(profile, a.code.n, Fraction(a.code.size, profile.c0))
    except IdentityMismatch as exc:
        v.fail("srg", str(exc))
        block["predicted"] = None
        return block
    block["predicted"] = predicted.to_json()
    block["trivial_predicted"] = profile.w1 == a.code.n
    v.flag("srg", None if measured is None else measured.as_tuple(), predicted.as_tuple())
    v.flag("srg.feasibility", predicted.feasible, True)
    v.flag("srg.trivial", profile.w1 == a.code.n, measured is not None and measured.trivial)
    if measured is not None and measured.trivial:
        try:
            v.flag("trivial-structure", verify_trivial_structure(a, graph), True)
            block["trivial_subcode_linear"] = trivial_subcode_is_linear(a)
        except NotApplicable as exc:
            v.na("trivial-structure", str(exc))
    else:
        v.na("trivial-structure", "Gamma(C) is not trivial")
    if measured is None and graph.order > 1 and (graph.degree_sequence() == graph.order - 1).all():
        block["note"] = "complete graph (N = K + 1), excluded from SRG status"
    return block


def _pds_block(v: Verdicts, a: CodeAnalysis) -> dict | None:
    code = a.code
    if code.degenerate:
        v.na("equivalence", "all-zero coordinate")
        return None
    witness = build_omega(code)
    params = verify_pds(witness)
    block = {
        "D": len(witness.group),
        "Omega": len(witness.omega),
        "pds": None if params is None else params.to_json(),
    }
    v.flag("same-shape", len(witness.group), code.size)
    if params is not None and params.mu is not None:
        measured = verify_srg(cayley_graph_of(witness))
        v.flag("pds-graph", None if measured is None else measured.as_tuple(), params.as_tuple())
    eq = verify_equivalence_theorem(a, witness)
    block["equivalence"] = eq.to_json()
    if not eq.applicable:
        v.na("equivalence", eq.reason)
    else:
        v.flag("equivalence", eq.two_weight, eq.condition_ii)
        v.flag("equivalence.remark-one-weight", eq.omega_submodule, eq.one_weight)
        v.flag("equivalence.remark-trivial", eq.complement_subgroup, eq.two_weight and eq.w1_equals_n)
    return block


def _dual_block(v: Verdicts, a: CodeAnalysis, caps: Caps, seed: int) -> dict | None:
    if a.profile is None or a.code.degenerate:
        v.na("dual", "all-zero coordinate" if a.code.degenerate else "not a two-weight code")
        return None
    dual = build_dual(a, caps)
    v.check(dual.index_check)
    block = {
        "length": dual.length,
        "M1_columns": [a.code.ring.elements_str(col) for col in dual.m1.T],
        "report": analysis_report(dual.analysis, seed=seed, caps=caps, with_dual=False),
    }
    try:
        theorem = verify_dual_theorem(dual)
        graph = verify_gamma_dual(dual)
    except NotApplicable as exc:
        v.na("dual-theorem", str(exc))
        v.na("dual-graph", str(exc))
        return block
    block["theorem"] = theorem.to_json()
    block["graph"] = graph.to_json()
    v.flag("dual-theorem.two-weight", theorem.two_weight, True)
    v.flag("dual-theorem.C0-trivial", theorem.c0_trivial, True)
    for c in theorem.checks:
        if c.name != dual.index_check.name:
            v.check(c)
    for name, wanted in (("dual-theorem.w1", "dual-w1"), ("dual-theorem.w2", "dual-w2")):
        if not any(c.name == wanted for c in theorem.checks):
            v.fail(name, "dual is not two-weight")
    v.flag(
        "dual-graph",
        None if graph.measured is None else graph.measured.as_tuple(),
        graph.predicted.as_tuple(),
    )
    v.flag("dual-graph.trivial", graph.predicted.trivial, graph.parent_trivial)
    return block


def analysis_report(
    analysis: CodeAnalysis,
    seed: int = 0,
    caps: Caps = DEFAULT_CAPS,
    with_dual: bool = True,
) -> dict:
    """Everything known about one code, as a JSON-ready dict."""
    a = analysis
    code = a.code
    v = Verdicts()
    cls = a.classification
    report = {
        "schema_version": SCHEMA_VERSION,
        "ring": code.ring.name,
        "side": code.side,
        "n": code.n,
        "k": code.k,
        "C": code.size,
        "C0": a.distribution.zero_count,
        "degenerate_coordinates": list(code.zero_columns),
        "generator": code.generator_strings(),
        "modularity": a.modularity.to_json() if not code.degenerate else {"modular": False, "r": None},
        "points": a.alpha.to_json(code.ring) if not code.degenerate else None,
        "weights": a.distribution.to_json(),
        "classification": cls.kind,
        "profile": None if a.profile is None else a.profile.to_json(),
    }
    if not code.degenerate:
        v.flag("fact-one-weight", cls.kind == "one-weight", cls.fact_modular and cls.fact_support_submodule)
    _lemma_verdicts(v, a, seed)
    report["srg"] = _srg_block(v, a)
    report["pds"] = _pds_block(v, a)
    if with_dual:
        report["dual"] = _dual_block(v, a, caps, seed)
    report["verdicts"] = v.entries
    failures = v.failures
    if with_dual and report.get("dual"):
        failures += ["dual." + f for f in report["dual"]["report"]["failures"]]
    report["failures"] = failures
    report["status"] = "fail" if failures else "pass"
    return report


def analyze_code(code, seed: int = 0, caps: Caps = DEFAULT_CAPS, with_dual: bool = True) -> dict:
    return analysis_report(CodeAnalysis(code, compute_weight_table(code.ring)), seed, caps, with_dual)
