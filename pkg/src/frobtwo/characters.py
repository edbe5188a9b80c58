"""Characters of (R, +) as exponent maps, and the Frobenius test.

A character is stored as an integer array ``exponent`` with
``chi(x) = exp(2*pi*i * exponent[x] / e)`` where ``e`` is the exponent of
the additive group. No floating point is involved until a caller asks for
complex values.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .ideals import _cache, minimal_ideals
from .rings import FiniteRing


@dataclass(frozen=True)
class AdditiveCharacter:
    exponent: np.ndarray
    modulus: int

    def __call__(self, x) -> complex:
        return np.exp(2j * np.pi * self.exponent[x] / self.modulus)

    def values(self) -> np.ndarray:
        return np.exp(2j * np.pi * self.exponent / self.modulus)

    def kernel(self) -> np.ndarray:
        return np.flatnonzero(self.exponent == 0)


@dataclass(frozen=True)
class AdditiveStructure:
    """A generating chain of (R, +) with normal-form coordinates.

    ``gens[i]`` has relative order ``orders[i]`` over the span of the earlier
    generators, and ``orders[i] * gens[i]`` has coordinates ``relations[i]``
    there. Every element is ``sum coords[x, i] * gens[i]`` with
    ``0 <= coords[x, i] < orders[i]``.
    """

    exponent: int
    gens: tuple[int, ...]
    orders: tuple[int, ...]
    relations: tuple[tuple[int, ...], ...]
    coords: np.ndarray
    invariant_factors: tuple[int, ...]


def element_orders(ring: FiniteRing) -> np.ndarray:
    q = ring.order
    orders = np.zeros(q, dtype=np.int64)
    acc = ring.elements.copy()
    todo = np.ones(q, dtype=bool)
    for m in range(1, q + 1):
        hit = todo & (acc == 0)
        orders[hit] = m
        todo &= ~hit
        if not todo.any():
            break
        acc = ring.add[acc, ring.elements]
    return orders


def smith_diagonal(matrix: list[list[int]]) -> list[int]:
    """Nonzero invariant factors of an integer matrix, by elementary row/column operations."""
    a = [list(row) for row in matrix]
    rows = len(a)
    cols = len(a[0]) if a else 0
    diag = []
    for t in range(min(rows, cols)):
        while True:
            nz = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
            if not nz:
                return diag
            _, i, j = min(nz)
            a[t], a[i] = a[i], a[t]
            for r in a:
                r[t], r[j] = r[j], r[t]
            p = a[t][t]
            changed = False
            for i in range(t + 1, rows):
                f = a[i][t] // p
                if f:
                    a[i] = [x - f * y for x, y in zip(a[i], a[t])]
                changed |= a[i][t] != 0
            for j in range(t + 1, cols):
                f = a[t][j] // p
                if f:
                    for r in a:
                        r[j] -= f * r[t]
                changed |= a[t][j] != 0
            if changed:
                continue
            bad = [i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p]
            if bad:
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            break
        diag.append(abs(a[t][t]))
    return diag


def additive_structure(ring: FiniteRing) -> AdditiveStructure:
    cache = _cache(ring)
    if "additive" in cache:
        return cache["additive"]
    q = ring.order
    orders = element_orders(ring)
    exponent = int(np.lcm.reduce(orders)) if q > 1 else 1
    in_span = np.zeros(q, dtype=bool)
    in_span[0] = True
    span = np.array([0], dtype=np.int32)
    span_coords = np.zeros((1, 0), dtype=np.int64)
    gens, rel_orders, relations = [], [], []
    while len(span) < q:
        outside = np.flatnonzero(~in_span)
        g = int(outside[np.argmax(orders[outside])])
        multiple, m = g, 1
        while not in_span[multiple]:
            multiple = int(ring.add[multiple, g])
            m += 1
        # coordinates of m*g within the current span
        where = np.empty(q, dtype=np.int64)
        where[span] = np.arange(len(span))
        relations.append(tuple(int(c) for c in span_coords[where[multiple]]))
        new_span, new_coords = [span], [np.hstack([span_coords, np.zeros((len(span), 1), np.int64)])]
        shifted = span
        for j in range(1, m):
            shifted = ring.add[shifted, g]
            new_span.append(shifted)
            new_coords.append(np.hstack([span_coords, np.full((len(span), 1), j, np.int64)]))
        span = np.concatenate(new_span)
        span_coords = np.vstack(new_coords)
        in_span[span] = True
        gens.append(g)
        rel_orders.append(m)
    coords = np.zeros((q, len(gens)), dtype=np.int64)
    coords[span] = span_coords
    t = len(gens)
    relation_matrix = [
        [(-relations[i][j] if j < i else (rel_orders[i] if j == i else 0)) for j in range(t)]
        for i in range(t)
    ]
    factors = tuple(sorted(d for d in smith_diagonal(relation_matrix) if d != 1)) if t else ()
    result = AdditiveStructure(exponent, tuple(gens), tuple(rel_orders), tuple(relations), coords, factors)
    cache["additive"] = result
    return result


def characters(ring: FiniteRing):
    """Yield every character of (R, +) once, as an :class:`AdditiveCharacter`."""
    st = additive_structure(ring)
    e = st.exponent

    def choices(i, values):
        # m * v_i must equal chi(m * g_i) = sum_j c_ij v_j
        target = sum(c * v for c, v in zip(st.relations[i], values)) % e
        m = st.orders[i]
        return [v for v in range(e) if (m * v - target) % e == 0]

    def extend(values):
        i = len(values)
        if i == len(st.gens):
            yield values
            return
        for v in choices(i, values):
            yield from extend(values + [v])

    for values in extend([]):
        exp = (st.coords @ np.array(values, dtype=np.int64)) % e if values else np.zeros(ring.order, np.int64)
        yield AdditiveCharacter(exp.astype(np.int64), e)


def is_generating(ring: FiniteRing, chi: AdditiveCharacter, side: str = "left") -> bool:
    return all((chi.exponent[list(i.elements)] != 0).any() for i in minimal_ideals(ring, side))


def is_frobenius(ring: FiniteRing) -> AdditiveCharacter | None:
    """A generating character of ``ring``, or None if the ring is not Frobenius.

    A kernel contains a nonzero left ideal iff it contains a minimal one, so
    only minimal left ideals are tested.
    """
    cache = _cache(ring)
    if "frobenius" in cache:
        return cache["frobenius"]
    found = None
    minimal = [np.array(i.elements) for i in minimal_ideals(ring, "left")]
    for chi in characters(ring):
        if all((chi.exponent[m] != 0).any() for m in minimal):
            found = chi
            break
    cache["frobenius"] = found
    return found


def character_count_check(ring: FiniteRing) -> bool:
    """The number of characters equals |R| (a sanity check of the chain)."""
    return sum(1 for _ in itertools.islice(characters(ring), ring.order + 1)) == ring.order
