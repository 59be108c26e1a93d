from __future__ import annotations

from dataclasses import dataclass

from .core import Bicluster, BiclusterSolution, HeteroMatrix
from .discretization import DEFAULT_NBINS, DiscreteMatrix, discretize
from .generation import DEFAULT_CMIN, DEFAULT_RMIN, GenerationParams, generate_candidates
from .quality import DEFAULT_ALPHA, score_candidates
from .selection import select


@dataclass
class RunResult:
    solution: BiclusterSolution
    candidates: list[Bicluster]
    discrete: DiscreteMatrix


def run_hbic(x: HeteroMatrix, *, nbins: int = DEFAULT_NBINS, r_min: int = DEFAULT_RMIN,
             c_min: int = DEFAULT_CMIN, alpha: float = DEFAULT_ALPHA, mode: str = "all",
             beta: int | None = None, seed: int | None = None, threads: int = 1) -> RunResult:
    """Discretize, generate candidates, score them and select a solution.

    An empty candidate set yields an empty solution rather than an error.
    """
    m = discretize(x, nbins)
    cands = generate_candidates(m, GenerationParams(r_min, c_min), threads=threads)
    if cands:
        sol = select(score_candidates(cands, x, alpha, threads), mode, beta)
    else:
        sol = BiclusterSolution([], mode=mode, beta=beta)
    sol.provenance = {"nbins": nbins, "rmin": r_min, "cmin": c_min, "alpha": alpha,
                      "select": mode, "beta": beta, "seed": seed,
                      "n_candidates": len(cands)}
    return RunResult(sol, cands, m)
