"""Vectors over a finite ring: spans, integer keys and submodule tests.

Vectors are rows of an ``int32`` array of element indices. A vector of
length ``k`` has the integer key ``sum(v[i] * q**(k-1-i))``, so sorting by
key is lexicographic order on index sequences.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from .rings import FiniteRing


@lru_cache(maxsize=None)
def radix(q: int, k: int) -> np.ndarray:
    out = np.array([q ** (k - 1 - i) for i in range(k)], dtype=np.int64)
    out.setflags(write=False)
    return out


def keys(vectors: np.ndarray, q: int) -> np.ndarray:
    vectors = np.atleast_2d(vectors)
    return vectors.astype(np.int64) @ radix(q, vectors.shape[1])


def from_keys(keys_: np.ndarray, q: int, k: int) -> np.ndarray:
    keys_ = np.asarray(keys_, dtype=np.int64)
    return ((keys_[..., None] // radix(q, k)) % q).astype(np.int32)


def unique_rows(vectors: np.ndarray, q: int) -> np.ndarray:
    """Distinct rows in lexicographic order (via integer keys when they fit in int64)."""
    vectors = np.atleast_2d(np.asarray(vectors, dtype=np.int32))
    k = vectors.shape[1]
    if q**k >= 2**62:
        return np.unique(vectors, axis=0)
    return from_keys(np.unique(keys(vectors, q)), q, k)


def all_vectors(q: int, k: int) -> np.ndarray:
    """Every vector of ``R^k`` in lexicographic order."""
    return from_keys(np.arange(q**k, dtype=np.int64), q, k)


def left_multiples(ring: FiniteRing, v: np.ndarray) -> np.ndarray:
    """Rows ``a*v`` for every ring element ``a`` (deduplicated, sorted)."""
    return unique_rows(ring.mul[:, np.asarray(v)], ring.order)


def right_multiples(ring: FiniteRing, v: np.ndarray, scalars=None) -> np.ndarray:
    """Rows ``v*a`` for every ``a`` in ``scalars`` (default: all of R)."""
    scalars = ring.elements if scalars is None else np.asarray(scalars)
    return unique_rows(ring.mul[np.asarray(v)][:, scalars].T, ring.order)


def row_space(ring: FiniteRing, matrix) -> np.ndarray:
    """``{xG : x in R^k}`` as lexicographically sorted unique rows.

    Built incrementally: after each generator row the span is
    ``span + R*row``, deduplicated, so dependent rows cost nothing extra.
    """
    g = np.atleast_2d(np.asarray(matrix, dtype=np.int32))
    n = g.shape[1]
    words = np.zeros((1, n), dtype=np.int32)
    for row in g:
        mults = left_multiples(ring, row)
        combined = ring.add[words[:, None, :], mults[None, :, :]].reshape(-1, n)
        words = unique_rows(combined, ring.order)
    return words


def column_space(ring: FiniteRing, matrix) -> np.ndarray:
    """``{Gy : y in R^n}`` as sorted unique vectors (rows)."""
    g = np.atleast_2d(np.asarray(matrix, dtype=np.int32))
    return row_space(ring.opposite(), g.T)


def column_space_bruteforce(ring: FiniteRing, matrix) -> np.ndarray:
    """``{Gy}`` by running over every ``y in R^n``; the independent path for small cases."""
    g = np.atleast_2d(np.asarray(matrix, dtype=np.int32))
    k, n = g.shape
    ys = all_vectors(ring.order, n)
    acc = np.zeros((len(ys), k), dtype=np.int32)
    for j in range(n):
        acc = ring.add[acc, ring.mul[g[:, j][None, :], ys[:, j][:, None]]]
    return unique_rows(acc, ring.order)


def row_space_bruteforce(ring: FiniteRing, matrix) -> np.ndarray:
    g = np.atleast_2d(np.asarray(matrix, dtype=np.int32))
    k, n = g.shape
    xs = all_vectors(ring.order, k)
    acc = np.zeros((len(xs), n), dtype=np.int32)
    for i in range(k):
        acc = ring.add[acc, ring.mul[xs[:, i][:, None], g[i][None, :]]]
    return unique_rows(acc, ring.order)


def dot(ring: FiniteRing, x: np.ndarray, g: np.ndarray) -> np.ndarray:
    """``x . g = sum_i x_i g_i`` for a batch of row vectors ``x`` and one vector ``g``."""
    x = np.atleast_2d(x)
    acc = np.zeros(len(x), dtype=np.int32)
    for i in range(x.shape[1]):
        acc = ring.add[acc, ring.mul[x[:, i], g[i]]]
    return acc


def is_submodule(ring: FiniteRing, vectors: np.ndarray, side: str | None = "right") -> bool:
    """Whether a set of vectors is an additive subgroup closed under scalars on ``side``.

    ``side=None`` tests the additive subgroup property only.
    """
    vectors = unique_rows(vectors, ring.order)
    q, k = ring.order, vectors.shape[1]
    ks = set(keys(vectors, q).tolist())
    if 0 not in ks:
        return False
    sums = ring.add[vectors[:, None, :], vectors[None, :, :]].reshape(-1, k)
    if not ks.issuperset(keys(sums, q).tolist()):
        return False
    if side is None:
        return True
    if side == "right":
        scaled = ring.mul[vectors[:, :, None], ring.elements[None, None, :]]
    else:
        scaled = ring.mul[ring.elements[None, None, :], vectors[:, :, None]]
    scaled = scaled.transpose(0, 2, 1).reshape(-1, k)
    return ks.issuperset(keys(scaled, q).tolist())


def is_subgroup(ring: FiniteRing, vectors: np.ndarray) -> bool:
    return is_submodule(ring, vectors, side=None)
