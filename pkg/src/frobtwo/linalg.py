"""Exact sparse Gauss-Jordan elimination over the rationals."""
from __future__ import annotations

from fractions import Fraction

from .errors import IdentityMismatch


class SingularSystemError(IdentityMismatch):
    pass


class InconsistentSystemError(IdentityMismatch):
    pass


def solve_unique(rows, rhs, n_unknowns: int) -> list[Fraction]:
    """Solve ``sum_j rows[i][j] * x_j = rhs[i]`` for the unique rational solution.

    ``rows`` are sparse dicts ``{column: coefficient}``. Pivot rows are
    chosen with the fewest nonzeros so that triangular systems (the usual
    case here) eliminate without fill-in. Raises if the solution is not
    unique or the system is inconsistent.
    """
    eqs = [({j: Fraction(c) for j, c in r.items() if c}, Fraction(b)) for r, b in zip(rows, rhs)]
    pivots: dict[int, int] = {}
    active = list(range(len(eqs)))
    by_col: dict[int, set[int]] = {}
    for i, (r, _) in enumerate(eqs):
        for j in r:
            by_col.setdefault(j, set()).add(i)
    for col in range(n_unknowns):
        cands = [i for i in by_col.get(col, ()) if i in active and col in eqs[i][0]]
        if not cands:
            raise SingularSystemError(f"unknown {col} is not determined")
        p = min(cands, key=lambda i: (len(eqs[i][0]), i))
        active.remove(p)
        prow, pb = eqs[p]
        c = prow[col]
        prow = {j: v / c for j, v in prow.items()}
        pb = pb / c
        for i in list(by_col[col]):
            if i == p or col not in eqs[i][0]:
                continue
            r, b = eqs[i]
            f = r[col]
            for j, v in prow.items():
                nv = r.get(j, 0) - f * v
                if nv:
                    r[j] = nv
                    by_col.setdefault(j, set()).add(i)
                else:
                    r.pop(j, None)
            eqs[i] = (r, b - f * pb)
        for j in prow:
            by_col.setdefault(j, set()).add(p)
        eqs[p] = (prow, pb)
        pivots[col] = p
    for i in active:
        r, b = eqs[i]
        if r or b:
            raise InconsistentSystemError(f"equation {i} is inconsistent with the others")
    solution = [Fraction(0)] * n_unknowns
    # pivot rows may still reference later pivots; back-substitute in reverse
    for col in reversed(range(n_unknowns)):
        r, b = eqs[pivots[col]]
        solution[col] = b - sum(v * solution[j] for j, v in r.items() if j != col)
    return solution
