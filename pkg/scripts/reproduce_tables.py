#!/usr/bin/env python3
"""Run the four bundled parameter sweeps and emit plot-ready series.

At full scale this takes hours on one core (the table grids go up to
N = 100000); use --scale to shrink every N for a desk-scale pass, e.g.

    python scripts/reproduce_tables.py --scale 10 --out-dir results/
"""
import argparse
import sys
from pathlib import Path

from rwnet.cli import main as rwnet_main


def run(out_dir: Path, scale: float, jobs: int) -> int:
    out_dir.mkdir(parents=True, exist_ok=True)
    figures = {"table1": "1", "table2": "2", "table3": "3"}
    for table in ("table1", "table2", "table3", "table4"):
        csv_path = out_dir / f"{table}.csv"
        print(f"== sweeping {table} (scale {scale}) -> {csv_path}")
        code = rwnet_main([
            "sweep", "--spec", f"{table}.sweep", "--out", str(csv_path),
            "--scale", str(scale), "--jobs", str(jobs),
        ])
        if code != 0:
            return code
        figure = figures.get(table)
        if figure:
            series_path = out_dir / f"figure{figure}.csv"
            code = rwnet_main([
                "plotdata", "--sweep", str(csv_path),
                "--figure", figure, "--out", str(series_path),
            ])
            if code != 0:
                return code
            print(f"   figure {figure} series -> {series_path}")
    return 0


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", type=Path, default=Path("results"))
    parser.add_argument("--scale", type=float, default=1.0,
                        help="divide every N in the grids (default 1: full size)")
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()
    sys.exit(run(args.out_dir, args.scale, args.jobs))
