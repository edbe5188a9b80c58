"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Inputs are all of GF(2)^k and its Cayley graph with respect to the
odd-weight vectors, so sizes grow as 2^k.
"""
import argparse
import timeit

import numpy as np

from frobtwo import _pykernels
from frobtwo.rings import parse_ring_spec
from frobtwo.spaces import all_vectors

try:
    from frobtwo import _ckernels
except ImportError:  # pragma: no cover
    _ckernels = None


def inputs(k: int):
    ring = parse_ring_spec("GF(2)")
    vecs = all_vectors(2, k)
    weights = np.array([0, 1], dtype=np.int64)
    # Omega = vectors of odd weight, a regular Cayley graph on GF(2)^k
    mask = (vecs.sum(axis=1) % 2).astype(np.uint8)
    adj = _pykernels.cayley_adjacency(vecs, ring.add, ring.neg, 2, mask)
    return ring, vecs, weights, mask, adj


def bench(fn, repeat: int) -> float:
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--k", type=int, nargs="+", default=[6, 8, 10])
    args = p.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; nothing to compare")
        return
    print(f"{'kernel':<20} {'k':>3} {'N':>6} {'numpy ms':>10} {'cython ms':>10} {'speedup':>8}")
    for k in args.k:
        ring, vecs, weights, mask, adj = inputs(k)
        cases = {
            "srg_profile": lambda m: m.srg_profile(adj),
            "difference_weights": lambda m: m.difference_weights(vecs, ring.add, ring.neg, weights),
            "difference_keys": lambda m: m.difference_keys(vecs, ring.add, ring.neg, 2),
            "cayley_adjacency": lambda m: m.cayley_adjacency(vecs, ring.add, ring.neg, 2, mask),
        }
        for name, call in cases.items():
            a = call(_pykernels)
            b = call(_ckernels)
            assert np.array_equal(np.asarray(a), np.asarray(b)), name
            t_py = bench(lambda: call(_pykernels), args.repeat)
            t_c = bench(lambda: call(_ckernels), args.repeat)
            print(f"{name:<20} {k:>3} {len(vecs):>6} {t_py * 1e3:>10.2f} {t_c * 1e3:>10.2f} {t_py / t_c:>7.1f}x")


if __name__ == "__main__":
    main()
