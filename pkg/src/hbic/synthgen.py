"""Heterogeneous synthetic datasets with planted constant-column biclusters.

Background cells are uniform: numeric in [-10, 10], categorical over the
letters a..j. Planted biclusters occupy disjoint contiguous blocks: rows
``[k*R, (k+1)*R)``, columns taken in order from the categorical pool
(leading columns) and/or the numeric pool (trailing columns). Every planted
column holds one fixed value across the block.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from itertools import cycle

import numpy as np

from .core import AttributeType, Bicluster, BiclusterSolution, HeteroMatrix
from .errors import InfeasiblePlacement
from .ingest import schema_doc

ALPHABET = tuple("abcdefghij")
NUM_LOW, NUM_HIGH = -10.0, 10.0
KINDS = ("numeric", "categorical", "mixed")


@dataclass(frozen=True)
class SynthConfig:
    n_rows: int = 1000
    n_cols: int = 500
    cat_fraction: float = 0.5
    n_bics: int = 5
    bic_rows: int = 50
    bic_cols: int = 50
    bic_kinds: tuple[str, ...] | None = None
    noise_level: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if self.n_rows < 1 or self.n_cols < 1:
            raise ValueError("matrix dimensions must be positive")
        if self.n_bics < 1 or self.bic_rows < 1 or self.bic_cols < 1:
            raise ValueError("need at least one planted bicluster of positive size")
        if not 0.0 <= self.cat_fraction <= 1.0:
            raise ValueError("cat_fraction must lie in [0, 1]")
        if not 0.0 <= self.noise_level <= 1.0:
            raise ValueError("noise_level must lie in [0, 1]")
        if self.bic_kinds is not None:
            if len(self.bic_kinds) != self.n_bics:
                raise ValueError("bic_kinds must name one kind per bicluster")
            bad = set(self.bic_kinds) - set(KINDS)
            if bad:
                raise ValueError(f"unknown bicluster kinds {sorted(bad)}")

    @property
    def n_categorical(self) -> int:
        return math.ceil(self.cat_fraction * self.n_cols)

    def kinds(self) -> tuple[str, ...]:
        if self.bic_kinds is not None:
            return tuple(self.bic_kinds)
        if self.n_categorical == 0:
            return ("numeric",) * self.n_bics
        if self.n_categorical == self.n_cols:
            return ("categorical",) * self.n_bics
        it = cycle(KINDS)
        return tuple(next(it) for _ in range(self.n_bics))


def _streams(seed: int):
    # one counter-based root; children are independent and order-stable
    root = np.random.SeedSequence(seed)
    bg, plant, noise = root.spawn(3)
    return bg, plant, noise


def _gen(ss: np.random.SeedSequence) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(ss))


def place_columns(cfg: SynthConfig) -> list[list[int]]:
    """Column indices of each planted bicluster."""
    n_cat = cfg.n_categorical
    cat_next, num_next = 0, n_cat
    out = []
    for k, kind in enumerate(cfg.kinds()):
        if kind == "numeric":
            take_cat, take_num = 0, cfg.bic_cols
        elif kind == "categorical":
            take_cat, take_num = cfg.bic_cols, 0
        else:
            take_cat, take_num = (cfg.bic_cols + 1) // 2, cfg.bic_cols // 2
        if cat_next + take_cat > n_cat or num_next + take_num > cfg.n_cols:
            raise InfeasiblePlacement(
                f"bicluster {k} ({kind}) needs {take_cat} categorical and {take_num} numeric "
                f"free columns; pools have {n_cat - cat_next} and {cfg.n_cols - num_next}")
        cats = list(range(cat_next, cat_next + take_cat))
        nums = list(range(num_next, num_next + take_num))
        cat_next += take_cat
        num_next += take_num
        if kind == "mixed":
            cols = [c for pair in zip(cats, nums) for c in pair] + cats[len(nums):]
        else:
            cols = cats or nums
        out.append(cols)
    return out


def _column_types(cfg: SynthConfig) -> list[AttributeType]:
    n_cat = cfg.n_categorical
    return [AttributeType.CATEGORICAL] * n_cat + [AttributeType.NUMERIC] * (cfg.n_cols - n_cat)


def _background(types, n_rows: int, streams) -> list[np.ndarray]:
    cols = []
    for t, ss in zip(types, streams):
        rng = _gen(ss)
        if t is AttributeType.NUMERIC:
            cols.append(rng.uniform(NUM_LOW, NUM_HIGH, n_rows))
        else:
            cols.append(np.asarray(ALPHABET, dtype=object)[rng.integers(0, len(ALPHABET), n_rows)])
    return cols


def generate_dataset(cfg: SynthConfig) -> tuple[HeteroMatrix, dict, BiclusterSolution]:
    """Build the data matrix, its schema document and the planted reference solution."""
    if cfg.n_bics * cfg.bic_rows > cfg.n_rows:
        raise InfeasiblePlacement(
            f"{cfg.n_bics} row-disjoint blocks of {cfg.bic_rows} rows exceed {cfg.n_rows} rows")
    if cfg.bic_cols > cfg.n_cols:
        raise InfeasiblePlacement("bicluster wider than the matrix")
    col_sets = place_columns(cfg)
    types = _column_types(cfg)
    bg_ss, plant_ss, noise_ss = _streams(cfg.seed)
    raw = _background(types, cfg.n_rows, bg_ss.spawn(cfg.n_cols))

    plant_rng = _gen(plant_ss)
    planted = []
    for k, cols in enumerate(col_sets):
        rows = range(k * cfg.bic_rows, (k + 1) * cfg.bic_rows)
        for j in cols:
            if types[j] is AttributeType.NUMERIC:
                raw[j][rows.start:rows.stop] = plant_rng.uniform(NUM_LOW, NUM_HIGH)
            else:
                raw[j][rows.start:rows.stop] = ALPHABET[plant_rng.integers(0, len(ALPHABET))]
        planted.append(Bicluster(tuple(rows), tuple(sorted(cols))))

    names = [f"c{j}" for j in range(cfg.n_cols)]
    x = HeteroMatrix.from_columns(names, types, raw)
    if cfg.noise_level > 0:
        x = apply_noise(x, cfg.noise_level, _gen(noise_ss))
    meta = asdict(cfg)
    meta["bic_kinds"] = list(cfg.kinds())
    truth = BiclusterSolution(planted, mode="truth", provenance=meta)
    return x, schema_doc(x), truth


def noise_cell_count(level: float, n_rows: int, n_cols: int) -> int:
    # guard against 0.05 * 500000 landing a hair below the integer
    return int(math.floor(level * n_rows * n_cols + 1e-9))


def apply_noise(x: HeteroMatrix, level: float, rng: np.random.Generator) -> HeteroMatrix:
    """Resample ``floor(level * N * M)`` distinct cells from the background law.

    Numeric cells are redrawn uniformly from [-10, 10], categorical cells from
    a..j, binary cells from the column's own two labels.
    """
    if not 0.0 <= level <= 1.0:
        raise ValueError("noise level must lie in [0, 1]")
    n, m = x.shape
    count = noise_cell_count(level, n, m)
    if count == 0:
        return x
    cells = np.sort(rng.choice(n * m, size=count, replace=False))
    rows, cols = np.divmod(cells, m)
    u = rng.random(count)
    raw = [np.asarray(c.raw(), dtype=object if c.labels is not None else np.float64)
           for c in x.columns]
    for j, col in enumerate(x.columns):
        sel = cols == j
        if not sel.any():
            continue
        r, uj = rows[sel], u[sel]
        if col.type is AttributeType.NUMERIC:
            raw[j][r] = NUM_LOW + (NUM_HIGH - NUM_LOW) * uj
        else:
            pool = col.labels if col.type is AttributeType.BINARY else ALPHABET
            raw[j][r] = np.asarray(pool, dtype=object)[(uj * len(pool)).astype(np.int64)]
    return HeteroMatrix.from_columns(x.names, x.types, raw)
