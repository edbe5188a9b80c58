"""Left linear codes, their point multisets, weight structure and lemma checks."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from pathlib import Path

import numpy as np

from .checks import IdentityCheck, frac_str
from .config import DEFAULT_CAPS, Caps
from .errors import CapExceededError, FrobtwoError, IdentityMismatch, NotApplicable, RingSpecError
from .homweight import WeightTable
from .ideals import _cache, units
from .rings import FiniteRing, parse_ring_spec
from .spaces import is_submodule, keys, row_space, unique_rows


class DegenerateCodeError(FrobtwoError):
    """The generator matrix has an all-zero column."""


class LinearCode:
    """The left row space ``{xG : x in R^k}`` of a ``k x n`` generator matrix.

    Codewords are enumerated once, deduplicated and kept in lexicographic
    order, so ``words[0]`` is the zero word. A code over an opposite ring is
    a right code over the original ring; :attr:`side` reports which.
    """

    def __init__(self, ring: FiniteRing, generator, allow_degenerate: bool = False, caps: Caps = DEFAULT_CAPS):
        g = np.asarray(generator, dtype=np.int64)
        if g.size == 0:
            raise ValueError("empty generator matrix")
        g = np.atleast_2d(g)
        if g.min() < 0 or g.max() >= ring.order:
            raise RingSpecError("generator entries out of range")
        k, n = g.shape
        if ring.order**k > caps.max_enumeration:
            raise CapExceededError(f"|R|^k = {ring.order}^{k} exceeds cap {caps.max_enumeration}")
        self.ring = ring
        self.generator = g.astype(np.int32)
        self.generator.setflags(write=False)
        self.k, self.n = k, n
        self.zero_columns = tuple(int(j) for j in np.flatnonzero(~self.generator.any(axis=0)))
        if self.zero_columns and not allow_degenerate:
            raise DegenerateCodeError(f"all-zero coordinates {list(self.zero_columns)}")
        self.words = row_space(ring, self.generator)
        self.words.setflags(write=False)

    @property
    def degenerate(self) -> bool:
        return bool(self.zero_columns)

    @property
    def side(self) -> str:
        return "right" if self.ring.is_opposite else "left"

    @property
    def size(self) -> int:
        return len(self.words)

    def __len__(self):
        return self.size

    @cached_property
    def _index(self) -> dict[bytes, int]:
        return {w.tobytes(): i for i, w in enumerate(self.words)}

    def index_of(self, word) -> int | None:
        return self._index.get(np.asarray(word, dtype=np.int32).tobytes())

    def contains(self, word) -> bool:
        return self.index_of(word) is not None

    def is_linear(self) -> bool:
        """Additive group closed under left scalars (checked by enumeration)."""
        return bool(is_submodule(self.ring, self.words, side="left"))

    def generator_strings(self) -> list[list[str]]:
        return [self.ring.elements_str(row) for row in self.generator]

    @classmethod
    def from_json(cls, data, caps: Caps = DEFAULT_CAPS, allow_degenerate: bool = False) -> "LinearCode":
        """Load ``{"ring": "<spec>", "generator": [[...], ...]}`` from a dict or a file path."""
        if isinstance(data, (str, Path)):
            try:
                data = json.loads(Path(data).read_text())
            except (OSError, json.JSONDecodeError) as exc:
                raise RingSpecError(f"cannot read code file {data}: {exc}") from exc
        try:
            ring = data["ring"] if isinstance(data["ring"], FiniteRing) else parse_ring_spec(data["ring"], caps)
            rows = data["generator"]
        except (KeyError, TypeError) as exc:
            raise RingSpecError("code file needs 'ring' and 'generator'") from exc
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise RingSpecError("generator rows must be nonempty and of equal length")
        g = [[ring.element(x) for x in row] for row in rows]
        return cls(ring, g, allow_degenerate=allow_degenerate, caps=caps)

    def to_json(self) -> dict:
        return {"ring": self.ring.name, "generator": self.generator_strings()}


def load_code(ring: FiniteRing, generator, allow_degenerate: bool = False, caps: Caps = DEFAULT_CAPS) -> LinearCode:
    return LinearCode(ring, generator, allow_degenerate=allow_degenerate, caps=caps)


# ---------------------------------------------------------------------------
# points


@dataclass(frozen=True)
class Point:
    """A point ``gR`` of the projective geometry, keyed by the smallest vector of ``gR^x``."""

    rep: tuple[int, ...]
    multiplicity: int
    orbit_size: int
    cyclic_size: int
    columns: tuple[int, ...] = ()

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.multiplicity, self.orbit_size)


def unit_orbit(ring: FiniteRing, g) -> np.ndarray:
    """``g R^x`` as sorted rows (cached per ring; treat as read-only)."""
    g = np.asarray(g, dtype=np.int32)
    cache = _cache(ring).setdefault("unit_orbits", {})
    key = g.tobytes()
    if key not in cache:
        orbit = unique_rows(ring.mul[g][:, units(ring).array].T, ring.order)
        orbit.setflags(write=False)
        cache[key] = orbit
    return cache[key]


def point_rep(ring: FiniteRing, g) -> tuple[int, ...]:
    return tuple(int(x) for x in unit_orbit(ring, g)[0])


@dataclass(frozen=True)
class PointMultiset:
    k: int
    points: tuple[Point, ...]

    @property
    def total(self) -> int:
        return sum(p.multiplicity for p in self.points)

    def key(self) -> tuple:
        """Canonical key: sorted (representative, multiplicity) pairs."""
        return tuple((p.rep, p.multiplicity) for p in self.points)

    def __getitem__(self, rep) -> int:
        for p in self.points:
            if p.rep == tuple(rep):
                return p.multiplicity
        return 0

    def support_vectors(self, ring: FiniteRing) -> np.ndarray:
        """All vectors g with alpha(gR) > 0, i.e. the union of the unit orbits."""
        orbits = [unit_orbit(ring, p.rep) for p in self.points]
        return unique_rows(np.vstack(orbits), ring.order)

    def to_json(self, ring: FiniteRing) -> list[dict]:
        return [
            {
                "point": ring.elements_str(p.rep),
                "multiplicity": p.multiplicity,
                "unit_orbit_size": p.orbit_size,
                "cyclic_size": p.cyclic_size,
            }
            for p in self.points
        ]


def multiset_from_columns(ring: FiniteRing, columns: np.ndarray) -> PointMultiset:
    """Group column vectors by ``g ~ h`` (same unit orbit)."""
    columns = np.atleast_2d(columns)
    groups: dict[tuple, list[int]] = {}
    info = {}
    for j, g in enumerate(columns):
        if not g.any():
            raise DegenerateCodeError(f"column {j} is zero")
        orbit = unit_orbit(ring, g)
        rep = tuple(int(x) for x in orbit[0])
        groups.setdefault(rep, []).append(j)
        if rep not in info:
            cyclic = unique_rows(ring.mul[g][:, ring.elements].T, ring.order)
            info[rep] = (len(orbit), len(cyclic))
    points = tuple(
        Point(rep, len(cols), info[rep][0], info[rep][1], tuple(cols)) for rep, cols in sorted(groups.items())
    )
    return PointMultiset(columns.shape[1], points)


def compute_alpha(code: LinearCode) -> PointMultiset:
    """The point multiset of the columns of the generator matrix."""
    if code.zero_columns:
        raise DegenerateCodeError(f"all-zero coordinates {list(code.zero_columns)}")
    return multiset_from_columns(code.ring, code.generator.T)


@dataclass(frozen=True)
class ModularityReport:
    is_modular: bool
    index: Fraction | None

    def to_json(self) -> dict:
        return {"modular": self.is_modular, "r": None if self.index is None else frac_str(self.index)}


def modularity_of(alpha: PointMultiset) -> ModularityReport:
    ratios = {p.ratio for p in alpha.points}
    if len(ratios) == 1:
        return ModularityReport(True, ratios.pop())
    return ModularityReport(False, None)


def modularity(code: LinearCode) -> ModularityReport:
    return modularity_of(compute_alpha(code))


# ---------------------------------------------------------------------------
# weights


@dataclass(frozen=True)
class TwoWeightProfile:
    w1: Fraction
    w2: Fraction
    b1: int
    b2: int
    c0: int
    size: int
    n: int

    def to_json(self) -> dict:
        return {
            "w1": frac_str(self.w1),
            "w2": frac_str(self.w2),
            "b1": self.b1,
            "b2": self.b2,
            "C0": self.c0,
            "C": self.size,
            "n": self.n,
        }


@dataclass(frozen=True)
class WeightDistribution:
    counts: dict  # Fraction -> int, ascending
    zero_count: int

    @property
    def nonzero_weights(self) -> list[Fraction]:
        return [w for w in self.counts if w != 0]

    def to_json(self) -> dict:
        return {frac_str(w): c for w, c in self.counts.items()}


def _check_weight_classes(code: LinearCode, wt: WeightTable, scaled: np.ndarray):
    ring, words = code.ring, code.words
    c0 = words[scaled == 0]
    c0_keys = set(keys(c0, ring.order).tolist()) if len(c0) else set()
    sums = ring.add[c0[:, None, :], c0[None, :, :]].reshape(-1, code.n)
    if not c0_keys.issuperset(keys(sums, ring.order).tolist()):
        raise IdentityMismatch("C0 is not a subgroup")
    shifted = wt.scaled[ring.add[words[:, None, :], c0[None, :, :]]].sum(axis=-1)
    if not (shifted == scaled[:, None]).all():
        raise IdentityMismatch("weight classes are not unions of C0-cosets")


def weight_distribution(code: LinearCode, wt: WeightTable, scaled=None) -> WeightDistribution:
    """Bucket the codewords by exact homogeneous weight.

    Also asserts that the weight-zero words form a subgroup and that every
    weight class is a union of its cosets.
    """
    scaled = wt.word_weights(code.words) if scaled is None else scaled
    values, counts = np.unique(scaled, return_counts=True)
    _check_weight_classes(code, wt, scaled)
    dist = {wt.exact(v): int(c) for v, c in zip(values, counts)}
    return WeightDistribution(dist, dist.get(Fraction(0), 0))


@dataclass(frozen=True)
class Classification:
    kind: str  # "one-weight" | "two-weight" | "other"
    distribution: WeightDistribution
    profile: TwoWeightProfile | None
    fact_modular: bool
    fact_support_submodule: bool

    @property
    def fact_holds(self) -> bool:
        """One-weight iff modular with a submodule support."""
        return (self.kind == "one-weight") == (self.fact_modular and self.fact_support_submodule)


def support_is_submodule(code: LinearCode, alpha: PointMultiset | None = None) -> bool:
    alpha = compute_alpha(code) if alpha is None else alpha
    vecs = alpha.support_vectors(code.ring)
    vecs = np.vstack([np.zeros((1, code.k), dtype=np.int32), vecs])
    return is_submodule(code.ring, vecs, side="right")


def classify(
    code: LinearCode, wt: WeightTable, dist: WeightDistribution | None = None, alpha: PointMultiset | None = None
) -> Classification:
    dist = weight_distribution(code, wt) if dist is None else dist
    nz = dist.nonzero_weights
    profile = None
    if len(nz) == 1:
        kind = "one-weight"
    elif len(nz) == 2:
        kind = "two-weight"
        w1, w2 = nz
        profile = TwoWeightProfile(w1, w2, dist.counts[w1], dist.counts[w2], dist.zero_count, code.size, code.n)
    else:
        kind = "other"
    if code.zero_columns:
        return Classification(kind, dist, profile, False, False)
    alpha = compute_alpha(code) if alpha is None else alpha
    mod = modularity_of(alpha)
    return Classification(kind, dist, profile, mod.is_modular, support_is_submodule(code, alpha))


# ---------------------------------------------------------------------------
# identities


def predicted_frequencies(profile: TwoWeightProfile, n: int, size: int, c0: int) -> tuple[Fraction, Fraction]:
    """``(b1, b2)`` from the weights, the length and ``|C0|``."""
    w1, w2 = profile.w1, profile.w2
    if w1 == w2:
        raise ZeroDivisionError("w1 == w2")
    b1 = ((w2 - n) * size - w2 * c0) / (w2 - w1)
    b2 = ((n - w1) * size + w1 * c0) / (w2 - w1)
    return Fraction(b1), Fraction(b2)


def frequency_checks(profile: TwoWeightProfile) -> list[IdentityCheck]:
    b1, b2 = predicted_frequencies(profile, profile.n, profile.size, profile.c0)
    return [
        IdentityCheck("frequencies.b1", Fraction(profile.b1), b1),
        IdentityCheck("frequencies.b2", Fraction(profile.b2), b2),
    ]


def _require_index(code: LinearCode, r) -> Fraction:
    if r is None:
        mod = modularity(code)
        if not mod.is_modular:
            raise NotApplicable("code is not modular")
        r = mod.index
    return Fraction(r)


def verify_corr_lemma(code: LinearCode, wt: WeightTable, d, r=None, scaled=None) -> IdentityCheck:
    """``sum_c w(c) w(c + d) = |C| (n^2 + r n - r w(d))`` for a modular code."""
    r = _require_index(code, r)
    d = np.asarray(d, dtype=np.int32)
    scaled = wt.word_weights(code.words) if scaled is None else scaled
    shifted = wt.word_weights(code.ring.add[code.words, d[None, :]])
    lhs = wt.exact((scaled * shifted).sum(), 2)
    n = code.n
    rhs = code.size * (n * n + r * n - r * wt.word_weight(d))
    return IdentityCheck("corr-lemma", lhs, Fraction(rhs))


def corr_lemma_checks(code: LinearCode, wt: WeightTable, ds, r=None, scaled=None) -> list[IdentityCheck]:
    """:func:`verify_corr_lemma` for a batch of shifts ``ds`` (rows)."""
    r = _require_index(code, r)
    ds = np.atleast_2d(np.asarray(ds, dtype=np.int32))
    if not len(ds):
        return []
    scaled = wt.word_weights(code.words) if scaled is None else scaled
    shifted = wt.word_weights(code.ring.add[code.words[None, :, :], ds[:, None, :]])
    lhs = shifted @ scaled
    dw = wt.word_weights(ds)
    n, size = code.n, code.size
    base = size * (n * n + r * n)
    return [
        IdentityCheck("corr-lemma", wt.exact(x, 2), Fraction(base - size * r * wt.exact(y)))
        for x, y in zip(lhs.tolist(), dw.tolist())
    ]


def coset_lemma_checks(code: LinearCode, wt: WeightTable, profile: TwoWeightProfile, ds, scaled=None) -> list[IdentityCheck]:
    """:func:`verify_coset_lemma` for a batch of shifts ``ds`` (rows)."""
    if profile is None:
        raise NotApplicable("requires a two-weight code")
    ds = np.atleast_2d(np.asarray(ds, dtype=np.int32))
    if not len(ds):
        return []
    c1 = _weight_one_words(code, wt, profile, scaled)
    lhs = wt.word_weights(code.ring.add[c1[None, :, :], ds[:, None, :]]).sum(axis=1)
    dw = wt.word_weights(ds)
    b1, w1, n = profile.b1, profile.w1, code.n
    slope = b1 - Fraction(b1) * w1 / n
    return [
        IdentityCheck("coset-lemma", wt.exact(x), b1 * w1 + slope * wt.exact(y))
        for x, y in zip(lhs.tolist(), dw.tolist())
    ]


def verify_w1w2_relation(profile: TwoWeightProfile, n: int, size: int, c0: int, r) -> IdentityCheck:
    """``(w1 + w2) n |C| = (n^2 + r n)|C| + w1 w2 (|C| - |C0|)``."""
    if profile is None:
        raise NotApplicable("requires a two-weight code")
    w1, w2, r = profile.w1, profile.w2, Fraction(r)
    lhs = (w1 + w2) * n * size
    rhs = (n * n + r * n) * size + w1 * w2 * (size - c0)
    return IdentityCheck("w1w2-relation", Fraction(lhs), Fraction(rhs))


def _weight_one_words(code: LinearCode, wt: WeightTable, profile: TwoWeightProfile, scaled=None) -> np.ndarray:
    scaled = wt.word_weights(code.words) if scaled is None else scaled
    return code.words[scaled == profile.w1 * wt.scale]


def verify_coset_lemma(code: LinearCode, wt: WeightTable, profile: TwoWeightProfile, d, scaled=None) -> IdentityCheck:
    """``sum_{c in C1} w(c + d) = b1 w1 + (b1 - b1 w1 / n) w(d)``."""
    if profile is None:
        raise NotApplicable("requires a two-weight code")
    d = np.asarray(d, dtype=np.int32)
    c1 = _weight_one_words(code, wt, profile, scaled)
    lhs = wt.exact(wt.word_weights(code.ring.add[c1, d[None, :]]).sum())
    b1, w1, n = profile.b1, profile.w1, code.n
    rhs = b1 * w1 + (b1 - Fraction(b1) * w1 / n) * wt.word_weight(d)
    return IdentityCheck("coset-lemma", lhs, Fraction(rhs))


def verify_coordinate_remark(
    code: LinearCode, wt: WeightTable, j: int, dj: int, profile: TwoWeightProfile | None = None, r=None, scaled=None
) -> list[IdentityCheck]:
    """The per-coordinate forms of the correlation and coset lemmas at coordinate ``j``.

    The first identity needs a modular code; the second and third (which
    states ``sum_{c in C1} w(c_j) = b1 w1 / n``) need a two-weight profile.
    """
    r = _require_index(code, r)
    ring, words, n = code.ring, code.words, code.n
    scaled = wt.word_weights(words) if scaled is None else scaled
    col = ring.add[words[:, j], dj]
    out = [
        IdentityCheck(
            "coordinate-remark.corr",
            wt.exact((scaled * wt.scaled[col]).sum(), 2),
            code.size * (n + r - r * wt[dj]),
        )
    ]
    if profile is not None:
        c1 = _weight_one_words(code, wt, profile, scaled)
        avg = Fraction(profile.b1) * profile.w1 / n
        out.append(
            IdentityCheck(
                "coordinate-remark.coset",
                wt.total(ring.add[c1[:, j], dj]),
                avg + (profile.b1 - avg) * wt[dj],
            )
        )
        out.append(IdentityCheck("coordinate-remark.mean", wt.total(c1[:, j]), avg))
    return out


class CodeAnalysis:
    """Cached derived data of one code under one weight table."""

    def __init__(self, code: LinearCode, wt: WeightTable):
        if wt.ring is not code.ring:
            raise ValueError("weight table belongs to a different ring")
        self.code, self.wt = code, wt

    @cached_property
    def scaled(self) -> np.ndarray:
        return self.wt.word_weights(self.code.words)

    @cached_property
    def distribution(self) -> WeightDistribution:
        return weight_distribution(self.code, self.wt, self.scaled)

    @cached_property
    def classification(self) -> Classification:
        alpha = None if self.code.zero_columns else self.alpha
        return classify(self.code, self.wt, self.distribution, alpha)

    @property
    def profile(self) -> TwoWeightProfile | None:
        return self.classification.profile

    @property
    def kind(self) -> str:
        return self.classification.kind

    @cached_property
    def alpha(self) -> PointMultiset:
        return compute_alpha(self.code)

    @cached_property
    def modularity(self) -> ModularityReport:
        return modularity_of(self.alpha)

    @property
    def c0_words(self) -> np.ndarray:
        return self.code.words[self.scaled == 0]

    @property
    def c0_trivial(self) -> bool:
        return self.distribution.zero_count == 1
