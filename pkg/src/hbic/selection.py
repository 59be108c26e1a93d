"""Stage II: reduce scored candidates to a final biclustering solution."""
from __future__ import annotations

import numpy as np

from .core import Bicluster, BiclusterSolution, QualityScore

Scored = list[tuple[Bicluster, QualityScore]]

MODES = ("all", "best", "dist", "pareto")


def _ranked(scored: Scored) -> list[Bicluster]:
    bics = [b if b.score is s else b.with_score(s) for b, s in scored]
    return sorted(bics, key=lambda b: (b.score.fitness, b.rows, b.cols))


def select_all(scored: Scored) -> BiclusterSolution:
    return BiclusterSolution(_ranked(scored), mode="all")


def select_best_beta(scored: Scored, beta: int) -> BiclusterSolution:
    if beta < 1:
        raise ValueError("beta must be >= 1")
    ranked = _ranked(scored)
    warnings = []
    if beta > len(ranked):
        warnings.append(f"beta={beta} exceeds the {len(ranked)} available candidates")
    return BiclusterSolution(ranked[:beta], mode="best", beta=beta, warnings=warnings)


def gap_cut(fitness) -> int:
    """Number of leading entries of an ascending fitness list to keep.

    Keeps everything up to and including the position just before the
    largest consecutive jump; the first jump wins ties.
    """
    f = np.asarray(fitness, dtype=np.float64)
    if f.size <= 1:
        return f.size
    diffs = np.diff(f)
    if diffs.max() <= 0:
        return f.size
    return int(np.argmax(diffs)) + 1


def select_distance_gap(scored: Scored) -> BiclusterSolution:
    ranked = _ranked(scored)
    keep = gap_cut([b.score.fitness for b in ranked])
    return BiclusterSolution(ranked[:keep], mode="dist")


def dominates(a: QualityScore, b: QualityScore) -> bool:
    fa, fb = a.objectives, b.objectives
    return all(p <= q for p, q in zip(fa, fb)) and any(p < q for p, q in zip(fa, fb))


def pareto_mask(points) -> np.ndarray:
    """Boolean mask of the non-dominated rows of an (n, k) objective array."""
    pts = np.asarray(points, dtype=np.float64)
    keep = np.ones(len(pts), dtype=bool)
    for i, p in enumerate(pts):
        le = np.all(pts <= p, axis=1)
        lt = np.any(pts < p, axis=1)
        keep[i] = not np.any(le & lt)
    return keep


def select_pareto(scored: Scored) -> BiclusterSolution:
    ranked = _ranked(scored)
    mask = pareto_mask([b.score.objectives for b in ranked])
    return BiclusterSolution([b for b, k in zip(ranked, mask) if k], mode="pareto")


def select(scored: Scored, mode: str, beta: int | None = None) -> BiclusterSolution:
    if mode == "all":
        return select_all(scored)
    if mode == "best":
        if beta is None:
            raise ValueError("mode 'best' requires beta")
        return select_best_beta(scored, beta)
    if mode == "dist":
        return select_distance_gap(scored)
    if mode == "pareto":
        return select_pareto(scored)
    raise ValueError(f"unknown selection mode {mode!r}")
