"""The homogeneous weight: exact tables and the identities it satisfies."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm

import numpy as np

from .characters import is_frobenius
from .checks import IdentityCheck
from .errors import IdentityMismatch, NotFrobeniusError
from .ideals import Ideal, annihilators, enumerate_ideals, unit_orbit_labels, units
from .linalg import solve_unique
from .rings import FiniteRing
from .spaces import all_vectors, dot, unique_rows

FLOAT_TOLERANCE = 1e-9


@dataclass(frozen=True, eq=False)
class WeightTable:
    """Exact homogeneous weight of every element of a Frobenius ring.

    ``scaled`` holds ``values * scale`` as int64 so that sums over many
    words stay in integer arithmetic; divide by ``scale`` to get exact values.
    """

    ring: FiniteRing
    values: tuple[Fraction, ...]

    def __getitem__(self, x) -> Fraction:
        return self.values[int(x)]

    @cached_property
    def scale(self) -> int:
        return lcm(*(v.denominator for v in self.values))

    @cached_property
    def scaled(self) -> np.ndarray:
        out = np.array([int(v * self.scale) for v in self.values], dtype=np.int64)
        out.setflags(write=False)
        return out

    def exact(self, scaled_value, power: int = 1) -> Fraction:
        return Fraction(int(scaled_value), self.scale**power)

    def word_weights(self, words: np.ndarray) -> np.ndarray:
        """Scaled weights of a batch of words (rows)."""
        return self.scaled[np.asarray(words)].sum(axis=-1)

    def word_weight(self, word) -> Fraction:
        return self.exact(self.scaled[np.asarray(word)].sum())

    def total(self, elements) -> Fraction:
        return self.exact(self.scaled[np.asarray(elements)].sum())

    def opposite(self) -> "WeightTable":
        """The same weights on the opposite ring (requires right-unit invariance)."""
        op = self.ring.opposite()
        if op is self.ring:
            return self
        if not right_unit_invariant(self):
            raise IdentityMismatch(f"{self.ring.name}: weight is not right-unit invariant")
        return WeightTable(op, self.values)

    def as_strings(self) -> list[str]:
        from .checks import frac_str

        return [frac_str(v) for v in self.values]


def left_unit_orbits(ring: FiniteRing) -> np.ndarray:
    """Label of ``R^x x`` for every x: its smallest element."""
    return unit_orbit_labels(ring, "left")


def character_sum_weights(ring: FiniteRing) -> np.ndarray:
    """Float evaluation of ``1 - mean_u chi(u x)`` for a generating character."""
    chi = is_frobenius(ring)
    if chi is None:
        raise NotFrobeniusError(f"{ring.name} is not a Frobenius ring")
    u = units(ring).array
    phases = chi.exponent[ring.mul[u, :]] * (2 * np.pi / chi.modulus)
    return 1.0 - np.exp(1j * phases).mean(axis=0)


def compute_weight_table(ring: FiniteRing, cross_check: bool = True) -> WeightTable:
    """Solve the defining axioms exactly, one unknown per left unit orbit.

    Every nonzero left ideal contributes ``sum_{x in I} w(x) = |I|``. Right
    ideal sums and the float character sum are checked afterwards.
    """
    cache = ring.__dict__.setdefault("_structure_cache", {})
    if "weights" in cache:
        return cache["weights"]
    if is_frobenius(ring) is None:
        raise NotFrobeniusError(f"{ring.name} is not a Frobenius ring")
    label = left_unit_orbits(ring)
    orbit_ids = {int(o): i for i, o in enumerate(sorted(set(label.tolist()) - {0}))}
    rows, rhs = [], []
    for ideal in enumerate_ideals(ring, "left"):
        if ideal.is_zero():
            continue
        labs, counts = np.unique(label[ideal.array], return_counts=True)
        rows.append({orbit_ids[int(o)]: int(c) for o, c in zip(labs, counts) if o != 0})
        rhs.append(len(ideal))
    sol = solve_unique(rows, rhs, len(orbit_ids))
    values = tuple(Fraction(0) if x == 0 else sol[orbit_ids[int(label[x])]] for x in range(ring.order))
    table = WeightTable(ring, values)
    for ideal in enumerate_ideals(ring, "right"):
        if not ideal.is_zero() and table.total(ideal.array) != len(ideal):
            raise IdentityMismatch(f"{ring.name}: right ideal sum fails on {ideal.elements}")
    if cross_check:
        approx = character_sum_weights(ring)
        exact = np.array([float(v) for v in values])
        if np.abs(approx - exact).max() > FLOAT_TOLERANCE:
            raise IdentityMismatch(f"{ring.name}: character sum disagrees with the exact table")
    cache["weights"] = table
    return table


def right_unit_invariant(wt: WeightTable) -> bool:
    """Whether ``w(xu) = w(x)`` for all x and units u (informational)."""
    ring = wt.ring
    u = units(ring).array
    s = wt.scaled
    return bool((s[ring.mul[:, u]] == s[:, None]).all())


def left_unit_invariant(wt: WeightTable) -> bool:
    ring = wt.ring
    u = units(ring).array
    s = wt.scaled
    return bool((s[ring.mul[u, :]] == s[None, :]).all())


@dataclass(frozen=True)
class ZeroWeightSubgroup:
    elements: tuple[int, ...]
    generators: tuple[int, ...]

    @property
    def tau(self) -> int:
        return len(self.generators)

    def __len__(self):
        return len(self.elements)


def compute_S0(ring: FiniteRing, wt: WeightTable) -> ZeroWeightSubgroup:
    """The even subset sums of generators of the order-2 left ideals.

    Raises :class:`IdentityMismatch` unless this set is exactly the zero set
    of the weight, the weight is nonnegative, and ``w(x + y) = w(x)`` for
    ``y`` in the set.
    """
    gens = tuple(
        i.elements[1] for i in enumerate_ideals(ring, "left") if len(i) == 2
    )
    tau = len(gens)
    sums, even = set(), set()
    for mask in range(1 << tau):
        acc = 0
        for b in range(tau):
            if mask >> b & 1:
                acc = int(ring.add[acc, gens[b]])
        sums.add(acc)
        if bin(mask).count("1") % 2 == 0:
            even.add(acc)
    if len(sums) != 1 << tau:
        raise IdentityMismatch(f"{ring.name}: order-2 ideals do not sum directly")
    s0 = tuple(sorted(even))
    zero_set = tuple(int(x) for x in np.flatnonzero(wt.scaled == 0))
    if zero_set != s0:
        raise IdentityMismatch(f"{ring.name}: zero set {zero_set} differs from S0 {s0}")
    if (wt.scaled < 0).any():
        raise IdentityMismatch(f"{ring.name}: negative weight")
    s = wt.scaled
    if not (s[ring.add[:, list(s0)]] == s[:, None]).all():
        raise IdentityMismatch(f"{ring.name}: weight is not S0-translation invariant")
    return ZeroWeightSubgroup(s0, gens)


def verify_egal(ring: FiniteRing, wt: WeightTable, ideal: Ideal, c: int) -> IdentityCheck:
    """``sum_{x in I} w(x + c) = |I|``."""
    if ideal.is_zero():
        raise ValueError("the ideal must be nonzero")
    return IdentityCheck("egal", wt.total(ring.add[ideal.array, c]), Fraction(len(ideal)))


def corr_sum_ideal(ring: FiniteRing, wt: WeightTable, ideal: Ideal, r: int, s: int) -> IdentityCheck:
    """``sum_{x in I} w(x) w(xr + s)`` against its case-split closed form.

    When ``Ir = {0}`` the sum is ``|I| w(s)``, which is not covered by the
    ``|Ir| < |I|`` branch; that case is checked under the name
    ``corr-ideal.annihilated``.
    """
    if ideal.is_zero():
        raise ValueError("the ideal must be nonzero")
    x = ideal.array
    lhs = wt.exact((wt.scaled[x] * wt.scaled[ring.add[ring.mul[x, r], s]]).sum(), 2)
    size = Fraction(len(ideal))
    image = np.unique(ring.mul[x, r])
    if len(image) == 1:
        return IdentityCheck("corr-ideal.annihilated", lhs, size * wt[s])
    if len(image) < len(ideal):
        rhs = size
    else:
        _, right_ann = annihilators(ring, ideal.elements)
        u = units(ring).array
        shifted = ring.add[u, ring.neg[ring.one]]
        count = sum(1 for v in shifted.tolist() if v in right_ann)
        rhs = size + size * Fraction(count, len(u)) * (1 - wt[s])
    return IdentityCheck("corr-ideal", lhs, rhs)


def equivalent_vectors(ring: FiniteRing, g, h) -> bool:
    """``g ~ h``, tested as ``g in h R^x``."""
    g, h = np.asarray(g), np.asarray(h)
    u = units(ring).array
    return bool((ring.mul[h][:, u] == g[:, None]).all(axis=0).any())


def unit_orbit_size(ring: FiniteRing, g) -> int:
    """``|g R^x|``."""
    u = units(ring).array
    return len(unique_rows(ring.mul[np.asarray(g)][:, u].T, ring.order))


def corr_sum_vectors(ring: FiniteRing, wt: WeightTable, g, h, s: int) -> IdentityCheck:
    """``sum_{x in R^k} w(x.g) w(x.h + s)`` against its closed form."""
    g, h = np.asarray(g, dtype=np.int32), np.asarray(h, dtype=np.int32)
    if not g.any() or not h.any():
        raise ValueError("g and h must be nonzero")
    xs = all_vectors(ring.order, len(g))
    xg, xh = dot(ring, xs, g), dot(ring, xs, h)
    lhs = wt.exact((wt.scaled[xg] * wt.scaled[ring.add[xh, s]]).sum(), 2)
    total = Fraction(ring.order ** len(g))
    if equivalent_vectors(ring, g, h):
        rhs = total + total / unit_orbit_size(ring, g) * (1 - wt[s])
    else:
        rhs = total
    return IdentityCheck("corr-vectors", lhs, rhs)
