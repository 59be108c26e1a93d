import numpy as np
import pytest

from hbic import AttributeType, HeteroMatrix, SynthConfig, apply_noise, generate_dataset, hiv
from hbic.errors import InfeasiblePlacement
from hbic.ingest import to_csv
from hbic.synthgen import ALPHABET, noise_cell_count, place_columns

SMALL = dict(n_rows=120, n_cols=40, n_bics=3, bic_rows=20, bic_cols=6)


def test_default_shape():
    cfg = SynthConfig()
    x, schema, truth = generate_dataset(cfg)
    assert x.shape == (1000, 500)
    assert len(truth) == 5
    assert all(len(b.rows) == 50 and len(b.cols) == 50 for b in truth)
    assert sum(t is AttributeType.CATEGORICAL for t in x.types) == 250
    assert len(schema["columns"]) == 500


def test_all_numeric_when_no_categorical_fraction():
    x, _, truth = generate_dataset(SynthConfig(cat_fraction=0.0, **SMALL))
    assert set(x.types) == {AttributeType.NUMERIC}
    assert truth.provenance["bic_kinds"] == ["numeric"] * 3


def test_pigeonhole():
    with pytest.raises(InfeasiblePlacement):
        generate_dataset(SynthConfig(n_rows=1000, n_bics=100, bic_rows=50))


def test_column_pool_exhausted():
    with pytest.raises(InfeasiblePlacement):
        generate_dataset(SynthConfig(n_rows=100, n_cols=10, cat_fraction=0.5, n_bics=2,
                                     bic_rows=10, bic_cols=4,
                                     bic_kinds=("categorical", "categorical")))


def test_mixed_kind_alternates_pools():
    cfg = SynthConfig(cat_fraction=0.5, bic_kinds=("numeric", "categorical", "mixed"), **SMALL)
    num, cat, mixed = place_columns(cfg)
    assert num == list(range(20, 26))
    assert cat == list(range(0, 6))
    assert mixed == [6, 26, 7, 27, 8, 28]


def test_ground_truth_disjoint_and_constant():
    x, _, truth = generate_dataset(SynthConfig(cat_fraction=0.5, **SMALL))
    rows = [set(b.rows) for b in truth]
    cols = [set(b.cols) for b in truth]
    for i in range(len(truth)):
        for j in range(i + 1, len(truth)):
            assert not rows[i] & rows[j] and not cols[i] & cols[j]
    for b in truth:
        assert hiv(b, x) == 0.0


def test_value_ranges():
    x, _, _ = generate_dataset(SynthConfig(noise_level=0.3, **SMALL))
    for col in x.columns:
        if col.type is AttributeType.NUMERIC:
            assert col.values.min() >= -10 and col.values.max() <= 10
        else:
            assert set(col.labels) <= set(ALPHABET)


def test_deterministic_bytes():
    cfg = SynthConfig(noise_level=0.1, seed=7, **SMALL)
    a, _, ta = generate_dataset(cfg)
    b, _, tb = generate_dataset(cfg)
    assert to_csv(a) == to_csv(b)
    assert [t.key for t in ta] == [t.key for t in tb]
    c, _, _ = generate_dataset(SynthConfig(noise_level=0.1, seed=8, **SMALL))
    assert to_csv(c) != to_csv(a)


def test_noise_identity_and_saturation():
    x, _, _ = generate_dataset(SynthConfig(**SMALL))
    rng = np.random.default_rng(0)
    assert apply_noise(x, 0.0, rng) is x
    y = HeteroMatrix.from_columns(["v"], [AttributeType.NUMERIC], [[100.0] * 50])
    assert np.all(apply_noise(y, 1.0, rng).columns[0].values < 100.0)


def test_noise_count_on_default_shape():
    assert noise_cell_count(0.05, 1000, 500) == 25_000
    # cells far outside [-10, 10] reveal exactly which ones were resampled
    y = HeteroMatrix.from_columns([f"c{j}" for j in range(500)], [AttributeType.NUMERIC] * 500,
                                  [np.full(1000, 100.0)] * 500)
    z = apply_noise(y, 0.05, np.random.default_rng(1))
    changed = sum(int((c.values != 100.0).sum()) for c in z.columns)
    assert changed == 25_000


def test_noise_lowers_planted_homogeneity():
    x, _, truth = generate_dataset(SynthConfig(noise_level=0.2, **SMALL))
    assert all(hiv(b, x) > 0 for b in truth)
