"""Units, one-sided ideals, annihilators and row/column spaces."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .config import DEFAULT_CAPS, Caps
from .errors import CapExceededError
from .rings import FiniteRing


@dataclass(frozen=True)
class UnitGroup:
    elements: tuple[int, ...]
    inverse: dict[int, int]

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return int(x) in self.inverse

    @property
    def array(self) -> np.ndarray:
        return np.array(self.elements, dtype=np.int32)


@dataclass(frozen=True)
class Ideal:
    """A one-sided (``"left"``/``"right"``) or two-sided ideal, as a sorted element set."""

    side: str
    elements: tuple[int, ...]
    generator: int | None = None
    members: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.elements))

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return int(x) in self.members

    @property
    def array(self) -> np.ndarray:
        return np.array(self.elements, dtype=np.int32)

    def is_zero(self) -> bool:
        return len(self.elements) == 1


def _cache(ring: FiniteRing) -> dict:
    try:
        return ring.__dict__.setdefault("_structure_cache", {})
    except AttributeError:  # pragma: no cover
        return {}


def units(ring: FiniteRing) -> UnitGroup:
    """The two-sided invertible elements of ``ring`` with their inverses."""
    cache = _cache(ring)
    if "units" not in cache:
        left, right = np.nonzero(ring.mul == ring.one)
        inv: dict[int, int] = {}
        for a, b in zip(left.tolist(), right.tolist()):
            if ring.mul[b, a] == ring.one:
                inv[a] = b
        cache["units"] = UnitGroup(tuple(sorted(inv)), inv)
    return cache["units"]


def unit_orbit_labels(ring: FiniteRing, side: str = "left") -> np.ndarray:
    """Smallest element of ``R^x x`` (side "left") or ``x R^x`` (side "right") for every x."""
    cache = _cache(ring)
    key = ("orbits", side)
    if key not in cache:
        u = units(ring).array
        table = ring.mul[u, :] if side == "left" else ring.mul[:, u].T
        cache[key] = table.min(axis=0)
    return cache[key]


def principal_ideal(ring: FiniteRing, x: int, side: str = "left") -> Ideal:
    """``Rx`` for ``side="left"``, ``xR`` for ``side="right"``."""
    products = ring.mul[:, x] if side == "left" else ring.mul[x, :]
    return Ideal(side, tuple(np.unique(products).tolist()), int(x))


def _ideal_sum(ring: FiniteRing, a: Ideal, b: Ideal) -> tuple[int, ...]:
    mask = np.zeros(ring.order, dtype=bool)
    arr = a.array
    mask[arr] = True
    for y in b.elements:
        # y already covered means a + y is already covered
        if not mask[y]:
            mask[ring.add[arr, y]] = True
    return tuple(np.flatnonzero(mask).tolist())


def _sort_key(ideal: Ideal):
    return len(ideal.elements), ideal.elements


def enumerate_ideals(
    ring: FiniteRing,
    side: str = "left",
    principal_only: bool = False,
    caps: Caps = DEFAULT_CAPS,
) -> list[Ideal]:
    """All ideals of the given side, each once, sorted by (size, elements).

    ``side`` is ``"left"``, ``"right"`` or ``"two-sided"``. Non-principal
    ideals are found as the closure of the principal ones under sums.
    """
    if ring.order > caps.max_ring_order:
        raise CapExceededError(f"{ring.name}: order exceeds cap {caps.max_ring_order}")
    key = ("ideals", side, principal_only)
    cache = _cache(ring)
    if key in cache:
        return cache[key]
    if side == "two-sided":
        left = {i.elements for i in enumerate_ideals(ring, "left", False, caps)}
        out = [
            Ideal("two-sided", i.elements, i.generator)
            for i in enumerate_ideals(ring, "right", False, caps)
            if i.elements in left
        ]
        cache[key] = out
        return out
    found: dict[tuple, Ideal] = {}
    # Rx depends only on the unit orbit of x
    for x in np.unique(unit_orbit_labels(ring, side)).tolist():
        p = principal_ideal(ring, x, side)
        found.setdefault(p.elements, p)
    principals = sorted(found.values(), key=_sort_key)
    if not principal_only:
        frontier = list(principals)
        while frontier:
            fresh = []
            for a in frontier:
                for p in principals:
                    if p.members <= a.members or a.members <= p.members:
                        continue
                    s = _ideal_sum(ring, a, p)
                    if s not in found:
                        found[s] = Ideal(side, s)
                        fresh.append(found[s])
            frontier = fresh
    out = sorted(found.values(), key=_sort_key)
    cache[key] = out
    return out


def enumerate_left_ideals(ring: FiniteRing, principal_only: bool = False, caps: Caps = DEFAULT_CAPS):
    return enumerate_ideals(ring, "left", principal_only, caps)


def minimal_ideals(ring: FiniteRing, side: str = "left") -> list[Ideal]:
    """Minimal nonzero ideals of one side; each is principal, generated by any nonzero member."""
    nonzero = [i for i in enumerate_ideals(ring, side, principal_only=True) if not i.is_zero()]
    return [i for i in nonzero if not any(j.members < i.members for j in nonzero)]


def is_ideal(ring: FiniteRing, elements, side: str = "left") -> bool:
    arr = np.array(sorted(set(int(e) for e in elements)), dtype=np.int32)
    mask = np.zeros(ring.order, dtype=bool)
    mask[arr] = True
    if not mask[0] or not mask[ring.add[arr[:, None], arr[None, :]]].all():
        return False
    if side in ("left", "two-sided") and not mask[ring.mul[:, arr]].all():
        return False
    if side in ("right", "two-sided") and not mask[ring.mul[arr, :]].all():
        return False
    return True


def annihilators(ring: FiniteRing, subset) -> tuple[Ideal, Ideal]:
    """Return ``({x : xS = 0}, {x : Sx = 0})`` as a left and a right ideal."""
    s = np.array(sorted(set(int(e) for e in subset)), dtype=np.int32)
    if s.size == 0:
        raise ValueError("annihilator of the empty set")
    left = np.flatnonzero((ring.mul[:, s] == 0).all(axis=1))
    right = np.flatnonzero((ring.mul[s, :] == 0).all(axis=0))
    return Ideal("left", tuple(left.tolist())), Ideal("right", tuple(right.tolist()))


def rowspace_colspace_cardinalities(ring: FiniteRing, matrix, caps: Caps = DEFAULT_CAPS) -> tuple[int, int]:
    """``(|{xA : x in R^m}|, |{Ay : y in R^n}|)``."""
    from .spaces import column_space, row_space

    a = np.asarray(matrix, dtype=np.int32)
    m, n = a.shape
    if ring.order ** max(m, n) > caps.max_enumeration:
        raise CapExceededError(f"{ring.order}^{max(m, n)} exceeds enumeration cap")
    return len(row_space(ring, a)), len(column_space(ring, a))
