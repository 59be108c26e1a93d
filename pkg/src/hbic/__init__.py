"""HBIC: biclustering for heterogeneous numeric/binary/categorical data."""
__version__ = "0.1.0"

from .core import (AttributeType, Bicluster, BiclusterSolution, Column, HeteroMatrix,
                   QualityScore, canonicalize, make_bicluster)
from .discretization import DiscreteMatrix, bin_index, discretize
from .generation import (GenerationParams, add_column, generate_candidates, grow,
                         seed_bicluster, unique_biclusters)
from .ingest import load_matrix, schema_doc, to_csv
from .metrics import (MetricReport, biclustering_error, dmax, evaluate, recovery,
                      relevance, s_match, union_cell_count)
from .pipeline import run_hbic
from .quality import acf, anv, fitness_batch, hiv
from .selection import (dominates, select, select_all, select_best_beta,
                        select_distance_gap, select_pareto)
from .synthgen import SynthConfig, apply_noise, generate_dataset
