"""Command line front end: ``hbic run | eval | gen``."""
from __future__ import annotations

import argparse
import logging
import sys

from . import __version__
from .discretization import DEFAULT_NBINS
from .errors import HBICError, InputError, InvariantViolation
from .generation import DEFAULT_CMIN, DEFAULT_RMIN
from .ingest import dump_json, load_matrix, read_solution, solution_to_dict, to_csv
from .metrics import evaluate
from .pipeline import run_hbic
from .quality import DEFAULT_ALPHA
from .selection import MODES
from .synthgen import KINDS, SynthConfig, generate_dataset

log = logging.getLogger("hbic")


def _unit_interval(text: str) -> float:
    v = float(text)
    if not 0.0 <= v <= 1.0:
        raise argparse.ArgumentTypeError(f"{text} is not in [0, 1]")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"{text} is not a positive integer")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"{text} is negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hbic", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="bicluster a CSV file")
    run.add_argument("--input", required=True, help="UTF-8 CSV with header row")
    run.add_argument("--schema", required=True, help="JSON column schema")
    run.add_argument("--output", default="-", help="solution JSON path (default: stdout)")
    run.add_argument("--nbins", type=int, default=DEFAULT_NBINS)
    run.add_argument("--rmin", type=_positive, default=DEFAULT_RMIN)
    run.add_argument("--cmin", type=_positive, default=DEFAULT_CMIN)
    run.add_argument("--alpha", type=_unit_interval, default=DEFAULT_ALPHA)
    run.add_argument("--select", choices=MODES, default="pareto")
    run.add_argument("--beta", type=_positive)
    run.add_argument("--seed", type=int, default=None, help="recorded in the output metadata")
    run.add_argument("--threads", type=_nonneg, default=1, help="0 = one per CPU")
    run.set_defaults(func=cmd_run)

    ev = sub.add_parser("eval", help="score a solution against a reference")
    ev.add_argument("--solution", required=True)
    ev.add_argument("--truth", required=True)
    ev.set_defaults(func=cmd_eval)

    gen = sub.add_parser("gen", help="generate a synthetic planted-bicluster dataset")
    gen.add_argument("--rows", type=_positive, default=1000)
    gen.add_argument("--cols", type=_positive, default=500)
    gen.add_argument("--cat-frac", type=_unit_interval, default=0.5)
    gen.add_argument("--nbics", type=_positive, default=5)
    gen.add_argument("--bic-rows", type=_positive, default=50)
    gen.add_argument("--bic-cols", type=_positive, default=50)
    gen.add_argument("--kinds", help=f"comma-separated, one of {'/'.join(KINDS)} per bicluster")
    gen.add_argument("--noise", type=_unit_interval, default=0.0)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out-data", required=True)
    gen.add_argument("--out-schema", required=True)
    gen.add_argument("--out-truth", required=True)
    gen.set_defaults(func=cmd_gen)
    return parser


def cmd_run(args) -> int:
    x = load_matrix(args.input, args.schema)
    if args.rmin > x.n_rows or args.cmin > x.n_cols:
        log.warning("rmin/cmin exceed the matrix shape %s; no bicluster can qualify", x.shape)
    res = run_hbic(x, nbins=args.nbins, r_min=args.rmin, c_min=args.cmin, alpha=args.alpha,
                   mode=args.select, beta=args.beta, seed=args.seed, threads=args.threads)
    res.solution.validate(x.n_rows, x.n_cols)
    for w in res.solution.warnings:
        log.warning(w)
    log.info("%d candidates, %d selected", len(res.candidates), len(res.solution))
    dump_json(solution_to_dict(res.solution), sys.stdout if args.output == "-" else args.output)
    return 0


def cmd_eval(args) -> int:
    sol, truth = read_solution(args.solution), read_solution(args.truth)
    print(evaluate(sol, truth).to_json())
    return 0


def cmd_gen(args) -> int:
    kinds = tuple(k.strip() for k in args.kinds.split(",")) if args.kinds else None
    try:
        cfg = SynthConfig(n_rows=args.rows, n_cols=args.cols, cat_fraction=args.cat_frac,
                          n_bics=args.nbics, bic_rows=args.bic_rows, bic_cols=args.bic_cols,
                          bic_kinds=kinds, noise_level=args.noise, seed=args.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    x, schema, truth = generate_dataset(cfg)
    with open(args.out_data, "wb") as fh:
        fh.write(to_csv(x))
    dump_json(schema, args.out_schema)
    dump_json(solution_to_dict(truth), args.out_truth)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="hbic: %(levelname)s: %(message)s")
    if args.command == "run" and args.select == "best" and args.beta is None:
        parser.error("--select best requires --beta")
    try:
        return args.func(args)
    except (InputError, OSError) as exc:
        print(f"hbic: error: {exc}", file=sys.stderr)
        return 2
    except (InvariantViolation, HBICError) as exc:
        print(f"hbic: internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
