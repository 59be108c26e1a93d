"""Data model: heterogeneous matrices, biclusters and biclustering solutions."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import EmptyBicluster, InvariantViolation, TypeViolation


class AttributeType(str, enum.Enum):
    NUMERIC = "numeric"
    BINARY = "binary"
    CATEGORICAL = "categorical"

    @property
    def is_discrete(self) -> bool:
        # binary is a two-label categorical everywhere downstream
        return self is not AttributeType.NUMERIC


@dataclass(frozen=True, eq=False)
class Column:
    """One attribute of a ``HeteroMatrix``.

    Numeric columns hold float64 values and ``labels is None``. Discrete
    columns hold int64 codes into ``labels``, which is sorted
    lexicographically so that codes never depend on row order.
    """

    name: str
    type: AttributeType
    values: np.ndarray
    labels: tuple[str, ...] | None = None

    @classmethod
    def from_raw(cls, name: str, type: AttributeType, raw: Sequence) -> "Column":
        type = AttributeType(type)
        if type is AttributeType.NUMERIC:
            values = np.asarray(raw, dtype=np.float64).copy()
            if not np.all(np.isfinite(values)):
                raise TypeViolation(f"column {name!r}: non-finite numeric value")
            values.flags.writeable = False
            return cls(name, type, values, None)
        raw_labels = [str(v) for v in raw]
        labels = tuple(sorted(set(raw_labels)))
        if type is AttributeType.BINARY and len(labels) > 2:
            raise TypeViolation(
                f"column {name!r}: binary column has {len(labels)} distinct labels"
            )
        lookup = {lab: k for k, lab in enumerate(labels)}
        codes = np.fromiter((lookup[v] for v in raw_labels), dtype=np.int64,
                            count=len(raw_labels))
        codes.flags.writeable = False
        return cls(name, type, codes, labels)

    def raw(self) -> list:
        if self.labels is None:
            return self.values.tolist()
        return [self.labels[c] for c in self.values]

    def __eq__(self, other):
        if not isinstance(other, Column):
            return NotImplemented
        return (self.name == other.name and self.type is other.type
                and self.labels == other.labels
                and self.values.dtype == other.values.dtype
                and np.array_equal(self.values, other.values))

    __hash__ = None


@dataclass(frozen=True, eq=False)
class HeteroMatrix:
    """Immutable N x M mixed-type data matrix with its per-column schema."""

    columns: tuple[Column, ...]

    def __post_init__(self):
        if not self.columns:
            raise ValueError("matrix needs at least one column")
        n = len(self.columns[0].values)
        if n < 1:
            raise ValueError("matrix needs at least one row")
        for col in self.columns:
            if len(col.values) != n:
                raise ValueError(f"column {col.name!r} has {len(col.values)} values, expected {n}")
        names = [c.name for c in self.columns]
        if len(set(names)) != len(names):
            raise ValueError("duplicate column names")

    @classmethod
    def from_columns(cls, names: Sequence[str], types: Sequence[AttributeType],
                     raw: Sequence[Sequence]) -> "HeteroMatrix":
        return cls(tuple(Column.from_raw(n, t, r) for n, t, r in zip(names, types, raw)))

    @property
    def n_rows(self) -> int:
        return len(self.columns[0].values)

    @property
    def n_cols(self) -> int:
        return len(self.columns)

    @property
    def shape(self) -> tuple[int, int]:
        return self.n_rows, self.n_cols

    @property
    def names(self) -> list[str]:
        return [c.name for c in self.columns]

    @property
    def types(self) -> list[AttributeType]:
        return [c.type for c in self.columns]

    @cached_property
    def numeric_mask(self) -> np.ndarray:
        return np.array([c.type is AttributeType.NUMERIC for c in self.columns])

    @cached_property
    def numeric_block(self) -> np.ndarray:
        """N x M float array; discrete columns are zero-filled."""
        out = np.zeros(self.shape, dtype=np.float64)
        for j, c in enumerate(self.columns):
            if c.labels is None:
                out[:, j] = c.values
        out.flags.writeable = False
        return out

    @cached_property
    def code_block(self) -> np.ndarray:
        """N x M int array of category codes; numeric columns are zero-filled."""
        out = np.zeros(self.shape, dtype=np.int64)
        for j, c in enumerate(self.columns):
            if c.labels is not None:
                out[:, j] = c.values
        out.flags.writeable = False
        return out

    @cached_property
    def column_variance(self) -> np.ndarray:
        """Population variance of each numeric column over all rows (0 for discrete)."""
        var = np.zeros(self.n_cols)
        for j, c in enumerate(self.columns):
            if c.labels is None:
                var[j] = _pvariance(c.values)
        return var

    def __eq__(self, other):
        if not isinstance(other, HeteroMatrix):
            return NotImplemented
        return self.columns == other.columns

    __hash__ = None


def _pvariance(values: np.ndarray) -> float:
    # exact zero for constant vectors; np.var can leave ~1e-30 residue
    if values.size == 0 or values.min() == values.max():
        return 0.0
    return float(np.var(values))


@dataclass(frozen=True)
class QualityScore:
    anv: float
    acf: float
    hiv: float
    size: int
    hiv_norm: float = 0.0
    size_norm: float = 0.0
    fitness: float = 0.0

    @property
    def objectives(self) -> tuple[float, float]:
        """Pareto objectives (normalized HIV, 1 - normalized size), both minimized."""
        return (self.hiv_norm, 1.0 - self.size_norm)


@dataclass(frozen=True)
class Bicluster:
    """A submatrix ``(rows, cols)``; equality and hashing ignore ``score``."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    score: QualityScore | None = field(default=None, compare=False)

    @property
    def size(self) -> int:
        return len(self.rows) * len(self.cols)

    @property
    def key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (self.rows, self.cols)

    def with_score(self, score: QualityScore) -> "Bicluster":
        return Bicluster(self.rows, self.cols, score)

    def validate(self, n_rows: int | None = None, n_cols: int | None = None) -> None:
        """Raise ``InvariantViolation`` unless canonical and within bounds."""
        for name, idx, bound in (("rows", self.rows, n_rows), ("cols", self.cols, n_cols)):
            if not idx:
                raise InvariantViolation(f"empty {name}")
            if any(b <= a for a, b in zip(idx, idx[1:])):
                raise InvariantViolation(f"{name} not strictly increasing")
            if idx[0] < 0 or (bound is not None and idx[-1] >= bound):
                raise InvariantViolation(f"{name} index out of range")


def make_bicluster(rows: Iterable[int], cols: Iterable[int],
                   score: QualityScore | None = None) -> Bicluster:
    return canonicalize(Bicluster(tuple(rows), tuple(cols), score))


def canonicalize(b: Bicluster) -> Bicluster:
    """Sort and de-duplicate row/column indices, keeping the score."""
    rows = tuple(sorted({int(i) for i in b.rows}))
    cols = tuple(sorted({int(j) for j in b.cols}))
    if not rows or not cols:
        raise EmptyBicluster("bicluster needs at least one row and one column")
    return Bicluster(rows, cols, b.score)


def solution_order_key(b: Bicluster):
    fit = b.score.fitness if b.score is not None else 0.0
    return (fit, b.rows, b.cols)


@dataclass
class BiclusterSolution:
    """Ordered set of biclusters plus selection metadata.

    ``mode`` is one of ``all``, ``best``, ``dist``, ``pareto`` for HBIC
    output, or ``truth`` for a planted reference solution.
    """

    biclusters: list[Bicluster]
    mode: str = "all"
    beta: int | None = None
    provenance: dict = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)

    def __post_init__(self):
        self.biclusters = sorted((canonicalize(b) for b in self.biclusters),
                                 key=solution_order_key)
        keys = [b.key for b in self.biclusters]
        if len(set(keys)) != len(keys):
            raise InvariantViolation("duplicate (rows, cols) pair in solution")

    def __len__(self) -> int:
        return len(self.biclusters)

    def __iter__(self):
        return iter(self.biclusters)

    def __getitem__(self, i):
        return self.biclusters[i]

    def validate(self, n_rows: int | None = None, n_cols: int | None = None) -> None:
        for b in self.biclusters:
            b.validate(n_rows, n_cols)
