"""Numpy implementations of the hot kernels (fallback for the compiled module)."""
from __future__ import annotations

import numpy as np

BACKEND = "python"


def srg_profile(adj: np.ndarray) -> tuple[int, int, int, int, int]:
    """``(degree, lambda_min, lambda_max, mu_min, mu_max)`` of a simple graph.

    ``degree`` is -1 for an irregular graph (the other entries are then
    meaningless). A lambda/mu pair is ``(-1, -1)`` when there are no adjacent
    resp. nonadjacent distinct pairs.
    """
    adj = np.ascontiguousarray(adj, dtype=np.uint8)
    n = len(adj)
    deg = adj.sum(axis=1, dtype=np.int64)
    if n == 0 or (deg != deg[0]).any():
        return (-1, -1, -1, -1, -1)
    a = adj.astype(np.float64)
    common = (a @ a).astype(np.int64)
    linked = adj.astype(bool)
    apart = ~linked
    np.fill_diagonal(apart, False)
    lam, mu = common[linked], common[apart]
    lo_hi = lambda v: (int(v.min()), int(v.max())) if v.size else (-1, -1)
    return (int(deg[0]), *lo_hi(lam), *lo_hi(mu))


def difference_weights(words: np.ndarray, add: np.ndarray, neg: np.ndarray, weights: np.ndarray) -> np.ndarray:
    """``out[i, j] = sum_t weights[words[i, t] - words[j, t]]``."""
    neg_words = neg[words]
    out = np.empty((len(words), len(words)), dtype=np.int64)
    for i, w in enumerate(words):
        out[i] = weights[add[w[None, :], neg_words]].sum(axis=1)
    return out


def difference_keys(vectors: np.ndarray, add: np.ndarray, neg: np.ndarray, q: int) -> np.ndarray:
    """Keys of ``v_i - v_j`` for all ordered pairs, flattened row-major."""
    k = vectors.shape[1]
    rad = np.array([q ** (k - 1 - i) for i in range(k)], dtype=np.int64)
    neg_vecs = neg[vectors]
    out = np.empty((len(vectors), len(vectors)), dtype=np.int64)
    for i, v in enumerate(vectors):
        out[i] = add[v[None, :], neg_vecs].astype(np.int64) @ rad
    return out.ravel()


def cayley_adjacency(vectors: np.ndarray, add: np.ndarray, neg: np.ndarray, q: int, mask: np.ndarray) -> np.ndarray:
    """``adj[i, j] = mask[key(v_i - v_j)]``."""
    n = len(vectors)
    return mask[difference_keys(vectors, add, neg, q)].reshape(n, n).astype(np.uint8)
