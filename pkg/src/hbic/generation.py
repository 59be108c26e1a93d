"""Stage I: greedy constant-column bicluster construction on the discretized matrix.

Every (column, code) pair present in the matrix seeds a one-column
bicluster holding the rows with that code. The seed then grows one column
at a time. Each step adds the outside column whose most frequent code
covers the most rows, and drops the rows that do not carry that code.
Growth stops as soon as the area ``|I| * |J|`` would not strictly increase.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .core import Bicluster, canonicalize
from .discretization import DiscreteMatrix
from .errors import EmptySeed, NoColumnLeft

DEFAULT_RMIN = 2
DEFAULT_CMIN = 2


@dataclass(frozen=True)
class GenerationParams:
    r_min: int = DEFAULT_RMIN
    c_min: int = DEFAULT_CMIN

    def __post_init__(self):
        if self.r_min < 1 or self.c_min < 1:
            raise ValueError("r_min and c_min must be >= 1")


class _Counter:
    """Per-column mode counting over a row subset via one flat bincount."""

    def __init__(self, m: DiscreteMatrix):
        self.codes = m.codes
        self.width = int(m.arity.max())
        self.offsets = np.arange(m.n_cols, dtype=np.int64) * self.width

    def modes(self, rows: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Return (count of modal code, modal code) for every column.

        ``argmax`` returns the first maximum, so equally frequent codes
        resolve to the smallest one.
        """
        flat = (self.codes[rows] + self.offsets).ravel()
        counts = np.bincount(flat, minlength=self.offsets.size * self.width)
        counts = counts.reshape(-1, self.width)
        return counts.max(axis=1), counts.argmax(axis=1)


def seed_bicluster(m: DiscreteMatrix, col: int, code: int) -> Bicluster:
    rows = np.flatnonzero(m.codes[:, col] == code)
    if rows.size == 0:
        raise EmptySeed(f"no row carries code {code} in column {col}")
    return Bicluster(tuple(rows.tolist()), (int(col),))


def _add_column(counter: _Counter, rows: np.ndarray, in_b: np.ndarray):
    if in_b.all():
        raise NoColumnLeft("bicluster already spans every column")
    counts, codes = counter.modes(rows)
    counts = np.where(in_b, -1, counts)
    best = int(np.argmax(counts))
    keep = counter.codes[rows, best] == codes[best]
    return rows[keep], best


def add_column(b: Bicluster, m: DiscreteMatrix) -> Bicluster:
    """Add the best outside column to ``b`` and keep the rows matching its mode.

    Ties between columns go to the smallest column index.
    """
    in_b = np.zeros(m.n_cols, dtype=bool)
    in_b[list(b.cols)] = True
    rows, best = _add_column(_Counter(m), np.asarray(b.rows, dtype=np.int64), in_b)
    return Bicluster(tuple(rows.tolist()), tuple(sorted(b.cols + (best,))))


def _grow(counter: _Counter, rows: np.ndarray, cols: list[int],
          trace: list | None = None) -> tuple[np.ndarray, list[int]]:
    in_b = np.zeros(counter.offsets.size, dtype=bool)
    in_b[cols] = True
    area = rows.size * len(cols)
    if trace is not None:
        trace.append(area)
    while not in_b.all():
        new_rows, best = _add_column(counter, rows, in_b)
        new_area = new_rows.size * (len(cols) + 1)
        if new_area <= area:
            break
        rows, area = new_rows, new_area
        cols = cols + [best]
        in_b[best] = True
        if trace is not None:
            trace.append(area)
    return rows, cols


def grow(seed: Bicluster, m: DiscreteMatrix, trace: list | None = None) -> Bicluster:
    """Apply ``add_column`` while the area strictly increases.

    If ``trace`` is given, the area of every accepted bicluster (seed
    included) is appended to it.
    """
    rows, cols = _grow(_Counter(m), np.asarray(seed.rows, dtype=np.int64),
                       list(seed.cols), trace)
    return canonicalize(Bicluster(tuple(rows.tolist()), tuple(cols)))


def seeds(m: DiscreteMatrix) -> list[tuple[int, int]]:
    """All (column, code) pairs present in ``m``, in ascending order."""
    out = []
    for j in range(m.n_cols):
        present = np.flatnonzero(np.bincount(m.codes[:, j], minlength=int(m.arity[j])))
        out.extend((j, int(v)) for v in present)
    return out


def grow_all(m: DiscreteMatrix, threads: int = 1) -> list[Bicluster]:
    """Grow every seed; result ``k`` belongs to ``seeds(m)[k]``."""
    counter = _Counter(m)

    def run(seed):
        j, v = seed
        rows = np.flatnonzero(m.codes[:, j] == v)
        rows, cols = _grow(counter, rows, [j])
        return Bicluster(tuple(rows.tolist()), tuple(sorted(cols)))

    todo = seeds(m)
    workers = threads or os.cpu_count() or 1
    if workers == 1:
        return [run(s) for s in todo]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run, todo, chunksize=max(1, len(todo) // (8 * workers))))


def unique_biclusters(cands: list[Bicluster]) -> list[Bicluster]:
    seen = set()
    out = []
    for b in cands:
        if b.key not in seen:
            seen.add(b.key)
            out.append(b)
    return out


def filter_min_size(cands: list[Bicluster], p: GenerationParams) -> list[Bicluster]:
    return [b for b in cands if len(b.rows) >= p.r_min and len(b.cols) >= p.c_min]


def generate_candidates(m: DiscreteMatrix, p: GenerationParams = GenerationParams(),
                        threads: int = 1) -> list[Bicluster]:
    """Full Stage I: grow all seeds, filter by size, sort canonically, dedup."""
    kept = filter_min_size(grow_all(m, threads), p)
    kept.sort(key=lambda b: b.key)
    return unique_biclusters(kept)
