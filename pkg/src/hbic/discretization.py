"""Equal-width binning of numeric columns into an integer-coded search space."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import HeteroMatrix
from .errors import InvalidBins, OutOfRange

DEFAULT_NBINS = 10


@dataclass(frozen=True, eq=False)
class DiscreteMatrix:
    """Integer-coded view of a ``HeteroMatrix``.

    Attributes
    ----------
    codes : ndarray of int64, shape (N, M)
        ``0 <= codes[i, j] < arity[j]``.
    arity : ndarray of int64, shape (M,)
        Number of admissible codes per column: label count for discrete
        columns, ``nbins`` for numeric columns (1 if the column is constant).
    bin_edges : dict
        Column index -> ``nbins + 1`` equal-width edges, numeric columns only.
    """

    codes: np.ndarray
    arity: np.ndarray
    bin_edges: dict
    nbins: int

    @classmethod
    def from_codes(cls, codes) -> "DiscreteMatrix":
        """Wrap a ready-made non-negative integer code matrix (arity = max code + 1)."""
        codes = np.array(codes, dtype=np.int64, ndmin=2)
        if codes.size == 0 or codes.min() < 0:
            raise ValueError("codes must be a non-empty non-negative integer matrix")
        arity = codes.max(axis=0) + 1
        codes.flags.writeable = False
        arity.flags.writeable = False
        return cls(codes, arity, {}, int(arity.max()))

    @property
    def n_rows(self) -> int:
        return self.codes.shape[0]

    @property
    def n_cols(self) -> int:
        return self.codes.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.codes.shape


def bin_index(t: float, lo: float, hi: float, nbins: int) -> int:
    if not lo <= t <= hi:
        raise OutOfRange(f"{t} outside [{lo}, {hi}]")
    if lo == hi:
        return 0
    return min(int(np.floor(nbins * (t - lo) / (hi - lo))), nbins - 1)


def _bin_column(values: np.ndarray, nbins: int) -> tuple[np.ndarray, int, np.ndarray]:
    lo, hi = float(values.min()), float(values.max())
    if lo == hi:
        return np.zeros(values.shape, dtype=np.int64), 1, np.full(nbins + 1, lo)
    # same expression as bin_index so vectorized and scalar paths agree bitwise
    codes = np.floor(nbins * (values - lo) / (hi - lo)).astype(np.int64)
    np.clip(codes, 0, nbins - 1, out=codes)
    edges = lo + np.arange(nbins + 1) * (hi - lo) / nbins
    return codes, nbins, edges


def discretize(x: HeteroMatrix, nbins: int = DEFAULT_NBINS) -> DiscreteMatrix:
    if int(nbins) != nbins or nbins < 2:
        raise InvalidBins(f"nbins must be an integer >= 2, got {nbins!r}")
    nbins = int(nbins)
    codes = np.empty(x.shape, dtype=np.int64)
    arity = np.empty(x.n_cols, dtype=np.int64)
    edges = {}
    for j, col in enumerate(x.columns):
        if col.labels is None:
            codes[:, j], arity[j], edges[j] = _bin_column(col.values, nbins)
        else:
            codes[:, j] = col.values
            arity[j] = len(col.labels)
    codes.flags.writeable = False
    arity.flags.writeable = False
    return DiscreteMatrix(codes, arity, edges, nbins)
