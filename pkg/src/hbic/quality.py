"""Bicluster quality on the original heterogeneous matrix.

HIV = ANV + ACF, where ANV averages the ratio of in-bicluster to
whole-column population variance over numeric columns, and ACF averages
the fraction of rows off the modal label over categorical/binary columns.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .core import Bicluster, HeteroMatrix, QualityScore
from .errors import EmptyCandidateSet

DEFAULT_ALPHA = 0.5

__all__ = ["QualityScore", "anv", "acf", "hiv", "fitness_batch", "combine_fitness",
           "score_candidates", "DEFAULT_ALPHA"]


def _split_cols(b: Bicluster, x: HeteroMatrix) -> tuple[np.ndarray, np.ndarray]:
    cols = np.asarray(b.cols, dtype=np.int64)
    num = x.numeric_mask[cols]
    return cols[num], cols[~num]


def _anv(rows: np.ndarray, num_cols: np.ndarray, x: HeteroMatrix) -> float:
    if num_cols.size == 0:
        return 0.0
    sub = x.numeric_block[np.ix_(rows, num_cols)]
    local = sub.var(axis=0)
    local[sub.min(axis=0) == sub.max(axis=0)] = 0.0
    total = x.column_variance[num_cols]
    ratio = np.divide(local, total, out=np.zeros_like(local), where=total > 0)
    return float(ratio.mean())


def _acf(rows: np.ndarray, cat_cols: np.ndarray, x: HeteroMatrix) -> float:
    if cat_cols.size == 0:
        return 0.0
    sub = x.code_block[np.ix_(rows, cat_cols)]
    modal = np.array([np.bincount(sub[:, k]).max() for k in range(cat_cols.size)])
    return float(np.mean(1.0 - modal / rows.size))


def anv(b: Bicluster, x: HeteroMatrix) -> float:
    num, _ = _split_cols(b, x)
    return _anv(np.asarray(b.rows, dtype=np.int64), num, x)


def acf(b: Bicluster, x: HeteroMatrix) -> float:
    _, cat = _split_cols(b, x)
    return _acf(np.asarray(b.rows, dtype=np.int64), cat, x)


def hiv(b: Bicluster, x: HeteroMatrix) -> float:
    return raw_score(b, x).hiv


def raw_score(b: Bicluster, x: HeteroMatrix) -> QualityScore:
    """ANV/ACF/HIV and size, before any normalization."""
    rows = np.asarray(b.rows, dtype=np.int64)
    num, cat = _split_cols(b, x)
    a, c = _anv(rows, num, x), _acf(rows, cat, x)
    return QualityScore(anv=a, acf=c, hiv=a + c, size=b.size)


def fitness_batch(cands: list[Bicluster], x: HeteroMatrix, alpha: float = DEFAULT_ALPHA,
                  threads: int = 1) -> list[QualityScore]:
    """Score candidates and combine normalized HIV and size into a fitness.

    HIV is min-max normalized over ``cands`` (all equal -> 0); size is
    divided by ``N * M``. ``fitness = alpha * hiv_norm + (1 - alpha) *
    (1 - size_norm)``, lower is better.
    """
    if not cands:
        raise EmptyCandidateSet("no candidates to score")
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    workers = threads or os.cpu_count() or 1
    if workers == 1 or len(cands) < 64:
        raw = [raw_score(b, x) for b in cands]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            raw = list(pool.map(lambda b: raw_score(b, x), cands))

    fit, h_norm, s_norm = combine_fitness([r.hiv for r in raw], [r.size for r in raw],
                                          x.n_rows * x.n_cols, alpha)
    return [QualityScore(r.anv, r.acf, r.hiv, r.size, float(hn), float(sn), float(f))
            for r, hn, sn, f in zip(raw, h_norm, s_norm, fit)]


def combine_fitness(hivs, sizes, total_cells: int, alpha: float):
    """Return (fitness, hiv_norm, size_norm) arrays for parallel HIV/size lists."""
    h = np.asarray(hivs, dtype=np.float64)
    lo, hi = h.min(), h.max()
    h_norm = (h - lo) / (hi - lo) if hi > lo else np.zeros_like(h)
    s_norm = np.asarray(sizes, dtype=np.float64) / total_cells
    return alpha * h_norm + (1.0 - alpha) * (1.0 - s_norm), h_norm, s_norm


def score_candidates(cands: list[Bicluster], x: HeteroMatrix, alpha: float = DEFAULT_ALPHA,
                     threads: int = 1) -> list[tuple[Bicluster, QualityScore]]:
    scores = fitness_batch(cands, x, alpha, threads)
    return [(b.with_score(s), s) for b, s in zip(cands, scores)]
