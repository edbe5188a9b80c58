"""Cayley graphs of two-weight codes, strong regularity, and partial difference sets."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernels
from .checks import frac_str
from .codes import CodeAnalysis, LinearCode, TwoWeightProfile, unit_orbit
from .errors import IdentityMismatch, NotApplicable
from .rings import FiniteRing
from .spaces import column_space, is_subgroup, is_submodule, keys, unique_rows


@dataclass(frozen=True)
class CayleyGraph:
    vertices: np.ndarray  # one representative vector per vertex
    adjacency: np.ndarray  # uint8, symmetric, zero diagonal
    connection: str = ""

    @property
    def order(self) -> int:
        return len(self.vertices)

    def degree_sequence(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    def to_dot(self, ring: FiniteRing, name: str = "G") -> str:
        labels = ["(" + ",".join(ring.elements_str(v)) + ")" for v in self.vertices]
        lines = [f"graph {name} {{"]
        for i, lab in enumerate(labels):
            lines.append(f'  {i} [label="{lab}"];')
        rows, cols = np.nonzero(np.triu(self.adjacency, 1))
        for i, j in zip(rows.tolist(), cols.tolist()):
            lines.append(f"  {i} -- {j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class SRGParams:
    N: Fraction
    K: Fraction
    lam: Fraction
    mu: Fraction

    @property
    def integral(self) -> bool:
        return all(x.denominator == 1 and x >= 0 for x in self.as_tuple())

    @property
    def trivial(self) -> bool:
        return self.mu == 0 or self.mu == self.K

    @property
    def feasible(self) -> bool:
        """``K (K - lambda - 1) = (N - K - 1) mu``."""
        return self.K * (self.K - self.lam - 1) == (self.N - self.K - 1) * self.mu

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.N, self.K, self.lam, self.mu)

    def to_json(self) -> dict:
        return {
            "N": frac_str(self.N),
            "K": frac_str(self.K),
            "lambda": frac_str(self.lam),
            "mu": frac_str(self.mu),
            "trivial": self.trivial,
        }


def srg_params(*values) -> SRGParams:
    return SRGParams(*(Fraction(v) for v in values))


# ---------------------------------------------------------------------------
# the graph of a two-weight code


def coset_representatives(analysis: CodeAnalysis) -> np.ndarray:
    """Index of the smallest codeword of every coset of C0, in ascending order."""
    code = analysis.code
    c0 = analysis.c0_words
    if len(c0) == 1:
        return np.arange(code.size)
    ring = code.ring
    word_keys = keys(code.words, ring.order) if ring.order ** code.n < 2**62 else None
    lookup = (
        {k: i for i, k in enumerate(word_keys.tolist())}
        if word_keys is not None
        else None
    )
    label = np.full(code.size, -1, dtype=np.int64)
    reps = []
    for i in range(code.size):
        if label[i] >= 0:
            continue
        reps.append(i)
        coset = ring.add[code.words[i][None, :], c0]
        if lookup is not None:
            idx = [lookup[k] for k in keys(coset, ring.order).tolist()]
        else:
            idx = [code.index_of(w) for w in coset]
        label[idx] = len(reps) - 1
    return np.array(reps, dtype=np.int64)


def build_gamma(analysis: CodeAnalysis, samples: int = 64, seed: int = 0) -> CayleyGraph:
    """Vertices are the cosets of C0; ``c + C0 ~ d + C0`` iff ``w(c - d) = w1``."""
    profile = analysis.profile
    if profile is None:
        raise NotApplicable("Gamma(C) needs a two-weight code")
    code, wt = analysis.code, analysis.wt
    ring = code.ring
    reps = code.words[coset_representatives(analysis)]
    diff = kernels.difference_weights(reps, ring.add, ring.neg, wt.scaled)
    c0 = analysis.c0_words
    if len(c0) > 1:
        rng = np.random.default_rng(seed)
        for _ in range(samples):
            i, j = rng.integers(0, len(reps), size=2)
            shifted = ring.add[reps[i][None, :], c0]
            alt = wt.word_weights(ring.add[shifted, ring.neg[reps[j]][None, :]])
            if (alt != diff[i, j]).any():
                raise IdentityMismatch("weight of c - d depends on the coset representative")
    adj = (diff == profile.w1 * wt.scale).astype(np.uint8)
    np.fill_diagonal(adj, 0)
    if not np.array_equal(adj, adj.T):
        raise IdentityMismatch("Gamma(C) adjacency is not symmetric")
    return CayleyGraph(reps, adj, "C1/C0")


def verify_srg(graph: CayleyGraph) -> SRGParams | None:
    """Measured ``(N, K, lambda, mu)`` by counting common neighbours of every pair.

    None unless the graph is regular, neither complete nor empty, and the
    counts are constant on adjacent and on nonadjacent pairs.
    """
    n = graph.order
    if n < 2:
        return None
    deg, lam_lo, lam_hi, mu_lo, mu_hi = kernels.srg_profile(graph.adjacency)
    if deg <= 0 or deg == n - 1:
        return None
    if lam_lo != lam_hi or mu_lo != mu_hi:
        return None
    return srg_params(n, deg, lam_lo, mu_lo)


def predicted_srg_params(profile: TwoWeightProfile, n: int, N) -> SRGParams:
    """Parameters of Gamma(C) for a modular two-weight code.

    Raises :class:`IdentityMismatch` if they are not nonnegative integers.
    """
    w1, w2, N = profile.w1, profile.w2, Fraction(N)
    K = ((w2 - n) * N - w2) / (w2 - w1)
    lam = (K * (w1 * w1 / n - 2 * w1) + w2 * (K - 1)) / (w2 - w1)
    mu = (K * (w1 * w2 / n - w1 - w2) + w2 * K) / (w2 - w1)
    params = SRGParams(N, Fraction(K), Fraction(lam), Fraction(mu))
    if not params.integral:
        raise IdentityMismatch(f"predicted parameters {params.to_json()} are not integral")
    return params


def predicted_trivial(profile: TwoWeightProfile, n: int) -> bool:
    return profile.w1 == n


def trivial_subcode(analysis: CodeAnalysis) -> np.ndarray:
    """The codewords of weight 0 or w2."""
    profile = analysis.profile
    if profile is None:
        raise NotApplicable("requires a two-weight code")
    keep = (analysis.scaled == 0) | (analysis.scaled == profile.w2 * analysis.wt.scale)
    return analysis.code.words[keep]


def verify_trivial_structure(analysis: CodeAnalysis, graph: CayleyGraph | None = None) -> bool:
    """For trivial Gamma(C): ``C0 u C2`` is a subgroup whose C0-cosets are the cocliques.

    The cocliques claim is checked as: two vertices are adjacent iff their
    difference lies outside ``C0 u C2``. Only the additive subgroup property
    follows from the Cayley structure; R-linearity of ``C0 u C2`` can fail
    over rings that are not generated additively by 1 (see
    :func:`trivial_subcode_is_linear`).
    """
    if analysis.profile is None:
        raise NotApplicable("requires a two-weight code")
    graph = build_gamma(analysis) if graph is None else graph
    measured = verify_srg(graph)
    if measured is None or not measured.trivial:
        raise NotApplicable("Gamma(C) is not trivial")
    ring, n = analysis.code.ring, analysis.code.n
    sub = trivial_subcode(analysis)
    if not is_subgroup(ring, sub):
        return False
    sub_keys = set(keys(sub, ring.order).tolist())
    v = graph.vertices
    diffs = ring.add[v[:, None, :], ring.neg[v][None, :, :]].reshape(-1, n)
    outside = np.array([k not in sub_keys for k in keys(diffs, ring.order).tolist()]).reshape(len(v), len(v))
    np.fill_diagonal(outside, False)
    return bool(np.array_equal(outside, graph.adjacency.astype(bool)))


def trivial_subcode_is_linear(analysis: CodeAnalysis) -> bool:
    return is_submodule(analysis.code.ring, trivial_subcode(analysis), side="left")


# ---------------------------------------------------------------------------
# partial difference sets


@dataclass(frozen=True)
class PDSWitness:
    """A subset ``omega`` of the group ``group`` (vectors in R^k under addition)."""

    ring: FiniteRing
    group: np.ndarray
    omega: np.ndarray

    @property
    def k(self) -> int:
        return self.group.shape[1]

    def group_keys(self) -> np.ndarray:
        return keys(self.group, self.ring.order)

    def omega_keys(self) -> np.ndarray:
        return keys(self.omega, self.ring.order)


@dataclass(frozen=True)
class PDSParams:
    N: int
    K: int
    lam: int
    mu: int | None  # None when every nonzero element is in omega

    def as_tuple(self):
        return (self.N, self.K, self.lam, self.mu)

    def to_json(self) -> dict:
        return {"N": self.N, "K": self.K, "lambda": self.lam, "mu": self.mu}


def build_omega(code: LinearCode) -> PDSWitness:
    """``Omega`` = union of the unit orbits ``g_j R^x`` inside the column space D."""
    if code.zero_columns:
        raise NotApplicable("zero column")
    ring = code.ring
    group = column_space(ring, code.generator)
    omega = unique_rows(np.vstack([unit_orbit(ring, g) for g in code.generator.T]), ring.order)
    gk = set(keys(group, ring.order).tolist())
    ok = keys(omega, ring.order).tolist()
    if 0 in ok or not gk.issuperset(ok):
        raise IdentityMismatch("Omega is not inside D \\ {0}")
    return PDSWitness(ring, group, omega)


def verify_pds(witness: PDSWitness) -> PDSParams | None:
    """Brute-force difference multiset ``Omega - Omega``.

    Returns the parameters iff 0 is not in Omega, Omega is symmetric, and the
    multiplicities are constant on Omega and on the rest of D minus 0.
    """
    ring, omega = witness.ring, witness.omega
    ok = witness.omega_keys()
    oset = set(ok.tolist())
    if 0 in oset:
        return None
    if not oset.issuperset(keys(ring.neg[omega], ring.order).tolist()):
        return None
    diffs = kernels.difference_keys(omega, ring.add, ring.neg, ring.order)
    uk, counts = np.unique(diffs, return_counts=True)
    mult = dict(zip(uk.tolist(), counts.tolist()))
    inside = {mult.get(x, 0) for x in ok.tolist()}
    rest = {mult.get(x, 0) for x in witness.group_keys().tolist() if x != 0 and x not in oset}
    if len(inside) != 1 or len(rest) > 1:
        return None
    return PDSParams(len(witness.group), len(omega), inside.pop(), rest.pop() if rest else None)


def cayley_graph_of(witness: PDSWitness) -> CayleyGraph:
    """``Gamma(D, Omega)``: ``a ~ b`` iff ``a - b`` is in Omega."""
    ring = witness.ring
    q, k = ring.order, witness.k
    mask = np.zeros(q**k, dtype=np.uint8)
    mask[witness.omega_keys()] = 1
    adj = kernels.cayley_adjacency(witness.group, ring.add, ring.neg, q, mask)
    return CayleyGraph(witness.group, adj, "Omega")


@dataclass
class EquivalenceReport:
    applicable: bool
    reason: str = ""
    two_weight: bool = False
    pds: PDSParams | None = None
    omega_submodule: bool = False
    complement_subgroup: bool = False
    complement_submodule: bool = False
    one_weight: bool = False
    w1_equals_n: bool = False

    @property
    def condition_ii(self) -> bool:
        return self.pds is not None and not self.omega_submodule

    @property
    def biconditional(self) -> bool:
        return self.two_weight == self.condition_ii

    @property
    def remark_one_weight(self) -> bool:
        return self.omega_submodule == self.one_weight

    @property
    def remark_trivial(self) -> bool:
        return self.complement_subgroup == (self.two_weight and self.w1_equals_n)

    @property
    def remark_trivial_submodule(self) -> bool:
        """The same branch with "submodule" in place of "subgroup" (informational)."""
        return self.complement_submodule == (self.two_weight and self.w1_equals_n)

    @property
    def ok(self) -> bool:
        return not self.applicable or (self.biconditional and self.remark_one_weight and self.remark_trivial)

    def to_json(self) -> dict:
        if not self.applicable:
            return {"status": "n/a", "reason": self.reason}
        return {
            "status": "pass" if self.ok else "fail",
            "i_two_weight": self.two_weight,
            "ii_pds_and_not_submodule": self.condition_ii,
            "pds": None if self.pds is None else self.pds.to_json(),
            "omega_plus_zero_submodule": self.omega_submodule,
            "d_minus_omega_subgroup": self.complement_subgroup,
            "d_minus_omega_submodule": self.complement_submodule,
            "biconditional": self.biconditional,
            "remark_one_weight": self.remark_one_weight,
            "remark_trivial": self.remark_trivial,
            "remark_trivial_submodule": self.remark_trivial_submodule,
        }


def verify_equivalence_theorem(analysis: CodeAnalysis, witness: PDSWitness | None = None) -> EquivalenceReport:
    """Two-weight iff Omega is a PDS in D with ``Omega u {0}`` not a submodule.

    Also checks: ``Omega u {0}`` is a submodule iff one-weight, and
    ``D \\ Omega`` is a nonzero additive subgroup iff two-weight with
    ``w1 = n``. Whether ``D \\ Omega`` is also a right submodule is reported
    alongside; the two agree over rings like Z_m and GF(q) but not in general.
    """
    code = analysis.code
    if code.zero_columns:
        return EquivalenceReport(False, "all-zero coordinate")
    if not analysis.modularity.is_modular:
        return EquivalenceReport(False, "code is not modular")
    if not analysis.c0_trivial:
        return EquivalenceReport(False, "C0 is not {0}")
    ring = code.ring
    witness = build_omega(code) if witness is None else witness
    zero = np.zeros((1, code.k), dtype=np.int32)
    omega0 = np.vstack([zero, witness.omega])
    okeys = set(witness.omega_keys().tolist())
    complement = witness.group[[x not in okeys for x in witness.group_keys().tolist()]]
    profile = analysis.profile
    return EquivalenceReport(
        applicable=True,
        two_weight=analysis.kind == "two-weight",
        pds=verify_pds(witness),
        omega_submodule=is_submodule(ring, omega0, side="right"),
        # D \ Omega = {0} (the one-weight case) is excluded: the zero module says nothing
        complement_subgroup=len(complement) > 1 and is_subgroup(ring, complement),
        complement_submodule=len(complement) > 1 and is_submodule(ring, complement, side="right"),
        one_weight=analysis.kind == "one-weight",
        w1_equals_n=profile is not None and profile.w1 == code.n,
    )
