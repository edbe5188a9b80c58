"""The dual of a two-weight code, spanned by the columns of its weight-w1 words."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .checks import IdentityCheck
from .codes import CodeAnalysis, LinearCode, ModularityReport, modularity
from .config import DEFAULT_CAPS, Caps
from .errors import IdentityMismatch, NotApplicable
from .graphs import SRGParams, build_gamma, srg_params, verify_srg
from .spaces import column_space_bruteforce

# below this many vectors y the span is also enumerated directly as {M1 y}
BRUTEFORCE_LIMIT = 2**16


@dataclass
class DualCode:
    """``C'``: the right code ``{M1 y : y in R^n}`` of length ``b1``.

    ``code`` is the same set of words as a left code over the opposite ring
    with generator ``M1^T``, so every code-core routine applies unchanged.
    """

    parent: CodeAnalysis
    m1: np.ndarray
    code: LinearCode
    modularity: ModularityReport
    index_check: IdentityCheck
    analysis: CodeAnalysis = field(repr=False)

    @property
    def length(self) -> int:
        return len(self.m1)


def weight_class_matrix(analysis: CodeAnalysis, which: int) -> np.ndarray:
    """Rows are the codewords of weight ``w_which`` (1 or 2), in codeword order."""
    profile = analysis.profile
    if profile is None:
        raise NotApplicable("requires a two-weight code")
    w = profile.w1 if which == 1 else profile.w2
    return analysis.code.words[analysis.scaled == w * analysis.wt.scale]


def build_dual(analysis: CodeAnalysis, caps: Caps = DEFAULT_CAPS) -> DualCode:
    if analysis.profile is None:
        raise NotApplicable("the dual is defined for two-weight codes only")
    ring = analysis.code.ring
    m1 = weight_class_matrix(analysis, 1)
    op = ring.opposite()
    dual = LinearCode(op, m1.T, caps=caps)
    n = analysis.code.n
    if ring.order**n <= BRUTEFORCE_LIMIT:
        direct = column_space_bruteforce(ring, m1)
        if not np.array_equal(direct, dual.words):
            raise IdentityMismatch("incremental right span differs from {M1 y}")

    mod = modularity(dual)
    check = IdentityCheck("dual-index", mod.index if mod.is_modular else Fraction(-1), Fraction(1))
    dual_analysis = CodeAnalysis(dual, analysis.wt.opposite())
    return DualCode(analysis, m1, dual, mod, check, dual_analysis)


def _require_dual_hypotheses(parent: CodeAnalysis):
    if parent.profile is None:
        raise NotApplicable("parent is not two-weight")
    if not parent.modularity.is_modular:
        raise NotApplicable("parent is not modular")
    if not parent.c0_trivial:
        raise NotApplicable("parent has C0 != {0}")


@dataclass
class DualTheoremReport:
    two_weight: bool
    c0_trivial: bool
    checks: list[IdentityCheck]

    @property
    def ok(self) -> bool:
        return self.two_weight and self.c0_trivial and all(c.ok for c in self.checks)

    def to_json(self) -> dict:
        return {
            "status": "pass" if self.ok else "fail",
            "dual_two_weight": self.two_weight,
            "dual_C0_trivial": self.c0_trivial,
            "checks": {c.name: c.to_json() for c in self.checks},
        }


def predicted_dual_weights(parent: CodeAnalysis) -> tuple[Fraction, Fraction, Fraction]:
    """``(w1' by the index form, w1' by b1 w1 / n, w2')``."""
    p = parent.profile
    r, n, size = parent.modularity.index, parent.code.n, parent.code.size
    first = (p.w2 - n - r) * size / (p.w2 - p.w1)
    second = Fraction(p.b1) * p.w1 / n
    w2 = (p.w2 - n) * size / (p.w2 - p.w1)
    return Fraction(first), second, Fraction(w2)


def verify_dual_theorem(dual: DualCode) -> DualTheoremReport:
    parent = dual.parent
    _require_dual_hypotheses(parent)
    a = dual.analysis
    first, second, w2 = predicted_dual_weights(parent)
    checks = [dual.index_check, IdentityCheck("dual-w1.closed-forms", first, second)]
    profile = a.profile
    if profile is not None:
        checks += [
            IdentityCheck("dual-w1", profile.w1, first),
            IdentityCheck("dual-w2", profile.w2, w2),
        ]
    return DualTheoremReport(a.kind == "two-weight", a.c0_trivial, checks)


def predicted_dual_srg(parent: CodeAnalysis) -> SRGParams:
    p = parent.profile
    r, n, size = parent.modularity.index, parent.code.n, parent.code.size
    mu = p.w1 * p.w2 / (r * r * size)
    lam = (2 * n - p.w1 - p.w2) / r + mu
    return srg_params(size, Fraction(n) / r, lam, mu)


@dataclass
class DualGraphReport:
    predicted: SRGParams
    measured: SRGParams | None
    parent_trivial: bool

    @property
    def ok(self) -> bool:
        return (
            self.measured is not None
            and self.measured.as_tuple() == self.predicted.as_tuple()
            and self.measured.trivial == self.parent_trivial
            and self.predicted.trivial == self.parent_trivial
        )

    def to_json(self) -> dict:
        return {
            "status": "pass" if self.ok else "fail",
            "predicted": self.predicted.to_json(),
            "measured": None if self.measured is None else self.measured.to_json(),
            "trivial_matches_parent": self.measured is not None and self.measured.trivial == self.parent_trivial,
        }


def verify_gamma_dual(dual: DualCode) -> DualGraphReport:
    parent = dual.parent
    _require_dual_hypotheses(parent)
    predicted = predicted_dual_srg(parent)
    if dual.analysis.profile is None:
        measured = None
    else:
        measured = verify_srg(build_gamma(dual.analysis))
    return DualGraphReport(predicted, measured, parent.profile.w1 == parent.code.n)
