"""Exhaustive search for two-weight codes, one monomial class at a time.

A class of monomially equivalent codes of length n is a multiset of n
points of the projective geometry over ``R^k``. Candidates are the
non-decreasing sequences of point indices, so each multiset is produced
exactly once. No reduction by ``GL(R^k)`` is attempted: codes that differ
only by a change of basis of ``R^k`` show up under different keys.
"""
from __future__ import annotations

import csv
import io
import itertools
import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np

from .codes import CodeAnalysis, LinearCode, Point, PointMultiset
from .config import DEFAULT_CAPS, Caps
from .errors import CapExceededError, FrobtwoError
from .graphs import verify_equivalence_theorem
from .homweight import compute_weight_table
from .ideals import units
from .report import analysis_report
from .rings import FiniteRing, parse_ring_spec
from .spaces import all_vectors, keys, unique_rows

CSV_COLUMNS = [
    "ring", "k", "n", "r", "w1", "w2", "b1", "b2", "N", "K",
    "lambda", "mu", "trivial", "dual_w1", "dual_w2", "verified",
]


@dataclass(frozen=True)
class ProjectivePoints:
    """The points ``gR`` of ``R^k``: smallest vector of each orbit ``gR^x`` with its size."""

    k: int
    reps: np.ndarray  # (P, k), rows ascending
    orbit_sizes: np.ndarray
    cyclic_sizes: np.ndarray

    def __len__(self):
        return len(self.reps)


def projective_points(ring: FiniteRing, k: int) -> ProjectivePoints:
    q = ring.order
    vecs = all_vectors(q, k)[1:]
    u = units(ring).array
    orbit_keys = np.stack([keys(ring.mul[vecs, int(x)], q) for x in u], axis=1)
    label = orbit_keys.min(axis=1)
    rep_keys, sizes = np.unique(label, return_counts=True)
    lookup = {int(x): i for i, x in enumerate(keys(vecs, q).tolist())}
    reps = vecs[[lookup[int(x)] for x in rep_keys]]
    cyclic = np.array([len(unique_rows(ring.mul[g][:, ring.elements].T, q)) for g in reps], dtype=np.int64)
    return ProjectivePoints(k, reps, sizes.astype(np.int64), cyclic)


@dataclass(frozen=True)
class SearchSpace:
    ring_spec: str
    k: int
    n_min: int
    n_max: int
    modular_only: bool = False
    index: Fraction | None = None  # keep only this modularity index
    caps: Caps = DEFAULT_CAPS

    def ring(self) -> FiniteRing:
        return parse_ring_spec(self.ring_spec, self.caps)

    def validate(self, ring: FiniteRing | None = None) -> FiniteRing:
        ring = self.ring() if ring is None else ring
        c = self.caps
        if ring.order > c.search_max_ring_order:
            raise CapExceededError(f"|R| = {ring.order} exceeds search cap {c.search_max_ring_order}")
        if ring.order**self.k > c.search_max_vectors:
            raise CapExceededError(f"|R|^k = {ring.order ** self.k} exceeds cap {c.search_max_vectors}")
        if self.n_max > c.search_max_length:
            raise CapExceededError(f"n = {self.n_max} exceeds cap {c.search_max_length}")
        if not 1 <= self.n_min <= self.n_max or self.k < 1:
            raise ValueError("need k >= 1 and 1 <= n_min <= n_max")
        return ring


@dataclass(frozen=True)
class Candidate:
    n: int
    indices: tuple[int, ...]  # non-decreasing point indices

    def multiset(self, points: ProjectivePoints) -> PointMultiset:
        counts = Counter(self.indices)
        return PointMultiset(
            points.k,
            tuple(
                Point(
                    tuple(int(x) for x in points.reps[i]),
                    m,
                    int(points.orbit_sizes[i]),
                    int(points.cyclic_sizes[i]),
                )
                for i, m in sorted(counts.items())
            ),
        )

    def generator(self, points: ProjectivePoints) -> np.ndarray:
        return points.reps[list(self.indices)].T.copy()


def _ratio_ok(indices, points: ProjectivePoints, index: Fraction | None) -> bool:
    counts = Counter(indices)
    ratios = {Fraction(m, int(points.orbit_sizes[i])) for i, m in counts.items()}
    if len(ratios) != 1:
        return False
    return index is None or ratios.pop() == index


def _sequences(n: int, npoints: int, first: int | None):
    if first is None:
        yield from itertools.combinations_with_replacement(range(npoints), n)
        return
    for rest in itertools.combinations_with_replacement(range(first, npoints), n - 1):
        yield (first,) + rest


def enumerate_candidates(space: SearchSpace, points: ProjectivePoints | None = None, first: int | None = None):
    """Yield every candidate multiset of the space, in a fixed order.

    ``first`` restricts to sequences starting with that point (the unit of
    parallel work).
    """
    ring = space.validate()
    points = projective_points(ring, space.k) if points is None else points
    for n in range(space.n_min, space.n_max + 1):
        for seq in _sequences(n, len(points), first):
            if space.modular_only or space.index is not None:
                if not _ratio_ok(seq, points, space.index):
                    continue
            yield Candidate(n, seq)


def canonical_key(ring: FiniteRing, alpha: PointMultiset) -> str:
    """``m*(g)`` terms joined by ``+``, points in index order."""
    return " + ".join(f"{p.multiplicity}*({','.join(ring.elements_str(p.rep))})" for p in alpha.points)


# ---------------------------------------------------------------------------
# scanning


@dataclass
class CatalogEntry:
    key: str
    n: int
    k: int
    ring: str
    generator: list[list[str]]
    report: dict | None
    error: str | None = None

    @property
    def verified(self) -> bool:
        return self.error is None and self.report is not None and self.report["status"] == "pass"

    def csv_row(self) -> dict:
        rep = self.report or {}
        prof = rep.get("profile") or {}
        srg = rep.get("srg") or {}
        params = srg.get("measured") or srg.get("predicted") or {}
        dual = ((rep.get("dual") or {}).get("report") or {}).get("profile") or {}
        return {
            "ring": self.ring,
            "k": self.k,
            "n": self.n,
            "r": (rep.get("modularity") or {}).get("r") or "",
            "w1": prof.get("w1", ""),
            "w2": prof.get("w2", ""),
            "b1": prof.get("b1", ""),
            "b2": prof.get("b2", ""),
            "N": params.get("N", ""),
            "K": params.get("K", ""),
            "lambda": params.get("lambda", ""),
            "mu": params.get("mu", ""),
            "trivial": "" if not params else str(params["trivial"]).lower(),
            "dual_w1": dual.get("w1", ""),
            "dual_w2": dual.get("w2", ""),
            "verified": str(self.verified).lower(),
        }

    def to_json(self) -> dict:
        return {
            "key": self.key,
            "ring": self.ring,
            "k": self.k,
            "n": self.n,
            "generator": self.generator,
            "verified": self.verified,
            "error": self.error,
            "report": self.report,
        }


@dataclass
class ScanStats:
    """Tallies over every candidate, not just catalogued ones."""

    candidates: int = 0
    kinds: Counter = field(default_factory=Counter)
    trivial_two_weight: int = 0
    nontrivial_two_weight: int = 0
    equivalence_checked: int = 0
    # kinds among candidates meeting the equivalence hypotheses (modular, C0 = {0});
    # two-weight codes split into "two-weight-trivial" / "two-weight-nontrivial"
    applicable_kinds: Counter = field(default_factory=Counter)
    equivalence_failures: list = field(default_factory=list)
    errors: list = field(default_factory=list)

    def merge(self, other: "ScanStats"):
        self.candidates += other.candidates
        self.kinds.update(other.kinds)
        self.trivial_two_weight += other.trivial_two_weight
        self.nontrivial_two_weight += other.nontrivial_two_weight
        self.equivalence_checked += other.equivalence_checked
        self.applicable_kinds.update(other.applicable_kinds)
        self.equivalence_failures += other.equivalence_failures
        self.errors += other.errors

    def to_json(self) -> dict:
        return {
            "candidates": self.candidates,
            "kinds": dict(sorted(self.kinds.items())),
            "trivial_two_weight": self.trivial_two_weight,
            "nontrivial_two_weight": self.nontrivial_two_weight,
            "equivalence_checked": self.equivalence_checked,
            "applicable_kinds": dict(sorted(self.applicable_kinds.items())),
            "equivalence_failures": self.equivalence_failures,
            "errors": self.errors,
        }


@dataclass
class Catalog:
    space: SearchSpace
    entries: list[CatalogEntry]
    stats: ScanStats

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        w.writeheader()
        for e in self.entries:
            w.writerow(e.csv_row())
        return buf.getvalue()

    def to_jsonl(self) -> str:
        return "".join(json.dumps(e.to_json(), separators=(",", ":")) + "\n" for e in self.entries)

    def write(self, csv_path, jsonl_path=None):
        csv_path = Path(csv_path)
        jsonl_path = csv_path.with_suffix(".jsonl") if jsonl_path is None else Path(jsonl_path)
        csv_path.write_text(self.to_csv())
        jsonl_path.write_text(self.to_jsonl())
        return csv_path, jsonl_path

    @property
    def all_verified(self) -> bool:
        return all(e.verified for e in self.entries) and not self.stats.equivalence_failures and not self.stats.errors


def _scan_chunk(space: SearchSpace, first: int | None, seed: int):
    ring = space.validate()
    wt = compute_weight_table(ring)
    points = projective_points(ring, space.k)
    stats = ScanStats()
    entries = []
    for cand in enumerate_candidates(space, points, first):
        stats.candidates += 1
        alpha = cand.multiset(points)
        key = canonical_key(ring, alpha)
        try:
            code = LinearCode(ring, cand.generator(points), caps=space.caps)
            a = CodeAnalysis(code, wt)
            kind = a.kind
            stats.kinds[kind] += 1
            eq = verify_equivalence_theorem(a)
            if eq.applicable:
                stats.equivalence_checked += 1
                label = kind
                if kind == "two-weight":
                    label += "-trivial" if a.profile.w1 == code.n else "-nontrivial"
                stats.applicable_kinds[label] += 1
                if not eq.ok:
                    stats.equivalence_failures.append({"key": key, "n": cand.n, "check": eq.to_json()})
            if kind != "two-weight":
                continue
            if a.profile.w1 == code.n:
                stats.trivial_two_weight += 1
            else:
                stats.nontrivial_two_weight += 1
            report = analysis_report(a, seed=seed, caps=space.caps)
            entries.append(((cand.n, cand.indices), CatalogEntry(key, cand.n, space.k, ring.name, code.generator_strings(), report)))
        except (FrobtwoError, ArithmeticError, ValueError) as exc:
            stats.errors.append({"key": key, "n": cand.n, "error": f"{type(exc).__name__}: {exc}"})
            entries.append(((cand.n, cand.indices), CatalogEntry(key, cand.n, space.k, ring.name, [], None, str(exc))))
    return entries, stats


def scan(space: SearchSpace, jobs: int = 1, seed: int = 0) -> Catalog:
    """Analyze every candidate; catalogue the two-weight ones with full reports.

    Work is split by the first point of the sequence. The merged catalog is
    sorted by ``(n, point sequence)`` whatever the number of jobs.
    """
    ring = space.validate()
    npoints = len(projective_points(ring, space.k))
    stats = ScanStats()
    tagged = []
    if jobs <= 1:
        chunks = [_scan_chunk(space, None, seed)]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_scan_chunk, [space] * npoints, range(npoints), [seed] * npoints))
    for part, st in chunks:
        tagged += part
        stats.merge(st)
    tagged.sort(key=lambda t: t[0])
    stats.equivalence_failures.sort(key=lambda x: (x["n"], x["key"]))
    stats.errors.sort(key=lambda x: (x["n"], x["key"]))
    seen, entries = set(), []
    for _, e in tagged:
        if e.key in seen:
            continue
        seen.add(e.key)
        entries.append(e)
    return Catalog(space, entries, stats)
