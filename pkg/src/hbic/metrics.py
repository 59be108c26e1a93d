"""External evaluation of a biclustering solution against a reference solution.

relevance/recovery are the geometric mean of row- and column-Jaccard
match scores; biclustering error is the optimally matched cell overlap
divided by the size of the cell union.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Sequence

import numpy as np
from scipy.optimize import linear_sum_assignment

from .core import Bicluster
from .errors import EmptySolution

# above this many cells (summed over both solutions) unions use per-row bitsets
_BITSET_THRESHOLD = 200_000

Solution = Sequence[Bicluster]


@dataclass(frozen=True)
class MetricReport:
    relevance: float
    recovery: float
    biclustering_error: float

    def to_json(self) -> str:
        return "{" + ", ".join(f'"{k}": {v:.6f}' for k, v in asdict(self).items()) + "}"


def _check(*sols: Solution) -> None:
    for s in sols:
        if len(s) == 0:
            raise EmptySolution("solution contains no biclusters")


def _membership(sets: list[tuple[int, ...]], width: int) -> np.ndarray:
    out = np.zeros((len(sets), width), dtype=np.int64)
    for k, idx in enumerate(sets):
        out[k, list(idx)] = 1
    return out


def _intersections(a: Solution, b: Solution, axis: str) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(|A_x ∩ B_y| matrix, |A_x| vector, |B_y| vector) along ``axis``."""
    get = (lambda bc: bc.rows) if axis == "rows" else (lambda bc: bc.cols)
    sa, sb = [get(x) for x in a], [get(y) for y in b]
    width = 1 + max(max(s) for s in sa + sb)
    ma, mb = _membership(sa, width), _membership(sb, width)
    return ma @ mb.T, ma.sum(axis=1), mb.sum(axis=1)


def s_match(a: Solution, b: Solution, axis: str = "rows") -> float:
    """Mean over ``a`` of the best Jaccard index against any bicluster of ``b``."""
    if axis not in ("rows", "cols"):
        raise ValueError("axis must be 'rows' or 'cols'")
    _check(a, b)
    inter, na, nb = _intersections(a, b, axis)
    jac = inter / (na[:, None] + nb[None, :] - inter)
    return float(jac.max(axis=1).mean())


def relevance(sol: Solution, truth: Solution) -> float:
    return float(np.sqrt(s_match(sol, truth, "rows") * s_match(sol, truth, "cols")))


def recovery(sol: Solution, truth: Solution) -> float:
    return relevance(truth, sol)


def overlap_matrix(a: Solution, b: Solution) -> np.ndarray:
    """``k x q`` matrix of shared cell counts between biclusters of a and b."""
    _check(a, b)
    r, _, _ = _intersections(a, b, "rows")
    c, _, _ = _intersections(a, b, "cols")
    return r * c


def max_assignment(weights) -> int:
    """Maximum total weight over one-to-one pairings of rows with columns."""
    w = np.asarray(weights)
    if w.size == 0:
        return 0
    ri, ci = linear_sum_assignment(w, maximize=True)
    return int(w[ri, ci].sum())


def dmax(a: Solution, b: Solution) -> int:
    return max_assignment(overlap_matrix(a, b))


def _cells_hashed(sols: Sequence[Solution]) -> int:
    cells = set()
    for sol in sols:
        for bc in sol:
            cells.update((i, j) for i in bc.rows for j in bc.cols)
    return len(cells)


def _cells_bitset(sols: Sequence[Solution]) -> int:
    per_row: dict[int, int] = {}
    for sol in sols:
        for bc in sol:
            mask = 0
            for j in bc.cols:
                mask |= 1 << j
            for i in bc.rows:
                per_row[i] = per_row.get(i, 0) | mask
    return sum(m.bit_count() for m in per_row.values())


def union_cell_count(a: Solution, b: Solution, method: str = "auto") -> int:
    """``|Uni(a) ∪ Uni(b)|`` where ``Uni`` is the set of cells covered by a solution.

    ``method`` is ``hashed``, ``bitset`` or ``auto`` (by total area).
    """
    sols = (a, b)
    if method == "auto":
        area = sum(bc.size for s in sols for bc in s)
        method = "bitset" if area > _BITSET_THRESHOLD else "hashed"
    if method == "hashed":
        return _cells_hashed(sols)
    if method == "bitset":
        return _cells_bitset(sols)
    raise ValueError(f"unknown method {method!r}")


def _coverage(sol: Solution, shape: tuple[int, int]) -> np.ndarray:
    count = np.zeros(shape, dtype=np.int64)
    for bc in sol:
        count[np.ix_(bc.rows, bc.cols)] += 1
    return count


def multiset_union_count(a: Solution, b: Solution) -> int:
    """Cell union counting each cell with its larger cover multiplicity.

    Equals ``union_cell_count`` whenever neither solution has internally
    overlapping biclusters.
    """
    shape = (1 + max(max(bc.rows) for s in (a, b) for bc in s),
             1 + max(max(bc.cols) for s in (a, b) for bc in s))
    return int(np.maximum(_coverage(a, shape), _coverage(b, shape)).sum())


def biclustering_error(sol: Solution, truth: Solution) -> float:
    _check(sol, truth)
    denom = multiset_union_count(sol, truth)
    return dmax(sol, truth) / denom


def evaluate(sol: Solution, truth: Solution) -> MetricReport:
    return MetricReport(relevance(sol, truth), recovery(sol, truth),
                        biclustering_error(sol, truth))
