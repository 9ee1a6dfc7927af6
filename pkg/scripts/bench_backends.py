"""Time the term backends over a grid of indices and write the CSV hand-off.

    python scripts/bench_backends.py --kind padovan --out results/bench.csv

Each (backend, n) cell is timed ``--reps`` times; exact backends must agree
digest for digest or the run aborts.  Guards skip det_banded above n = 2000
and binet above its double-precision bound.
"""

from __future__ import annotations

import argparse
import logging
import pathlib

from hyperspinors.engines.bench import benchmark_run
from hyperspinors.sequences import PADOVAN, PERRIN

GRID = [10, 100, 1_000, 2_000, 10_000, 100_000]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--kind", choices=["padovan", "perrin"], default="padovan")
    parser.add_argument("--n", default=",".join(map(str, GRID)))
    parser.add_argument("--backends", default="iter,matpow,det_banded,binet")
    parser.add_argument("--reps", type=int, default=5)
    parser.add_argument("--out", default="results/bench.csv")
    args = parser.parse_args()
    logging.basicConfig(level=logging.WARNING, format="%(message)s")

    spec = PADOVAN if args.kind == "padovan" else PERRIN
    n_values = [int(x) for x in args.n.split(",")]
    run = benchmark_run(spec, n_values, args.backends, args.reps)

    out = pathlib.Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w", newline="") as fh:
        run.write_csv(fh)

    print(f"{'backend':<12} {'n':>8} {'min ms':>12} {'median ms':>12}")
    for rec in run.records:
        print(f"{rec.backend:<12} {rec.n:>8} {rec.min_ns / 1e6:>12.3f} {rec.median_ns / 1e6:>12.3f}")
    print(f"csv written to {out}")


if __name__ == "__main__":
    main()
