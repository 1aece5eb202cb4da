"""Command-line front end: generate, measure, sweep, plotdata.

Exit codes: 0 success, 1 usage or invalid configuration, 2 runtime or
I/O failure (missing files, disconnected measurement input, bad data).
"""
from __future__ import annotations

import argparse
import csv
import itertools
import math
import multiprocessing
import struct
import sys
import time
from dataclasses import dataclass
from datetime import datetime, timezone
from importlib import resources
from pathlib import Path

from .generator import GenParams, generate
from .graph import load_edge_list, save_edge_list
from .metrics import NetworkMetrics, measure, resolve_aspl_mode

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RUNTIME = 2

SWEEP_COLUMNS = [
    "status", "N", "m", "p1", "special_edges", "beta", "initial", "seed",
    "scale", "n_nodes", "n_edges", "avg_local_clustering", "transitivity",
    "avg_shortest_path", "gamma", "max_degree", "aspl_mode", "wall_time_s",
    "timestamp",
]

MEASURE_COLUMNS = [
    "n_nodes", "n_edges", "avg_local_clustering", "transitivity",
    "avg_shortest_path", "gamma", "max_degree", "aspl_mode",
]


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures mapped to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return f"{x:.6g}"
    return str(x)


# ---------------------------------------------------------------- generate

def cmd_generate(args) -> int:
    params = GenParams(
        N=args.N, m=args.m, p1=args.p1, initial=args.initial,
        special_edges=not args.no_special_edge, beta=args.beta, seed=args.seed,
    )
    try:
        params.validate()
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        t0 = time.perf_counter()
        g = generate(params)
        wall = time.perf_counter() - t0
        save_edge_list(g, args.out)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"nodes={g.node_count} edges={g.edge_count} "
          f"wall_time_s={wall:.2f} out={args.out}")
    return EXIT_OK


# ----------------------------------------------------------------- measure

def cmd_measure(args) -> int:
    try:
        resolve_aspl_mode(args.aspl, 3)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        g = load_edge_list(args.input)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    try:
        metrics = measure(g, aspl_mode=args.aspl, aspl_seed=args.seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    writer = csv.writer(sys.stdout)
    if args.header:
        writer.writerow(MEASURE_COLUMNS)
    writer.writerow([
        g.node_count, g.edge_count, _fmt(metrics.avg_local_clustering),
        _fmt(metrics.transitivity), _fmt(metrics.avg_shortest_path),
        _fmt(metrics.gamma), metrics.max_degree, metrics.aspl_mode,
    ])
    return EXIT_OK


# ------------------------------------------------------------------- sweep

@dataclass(frozen=True)
class SweepSpec:
    """Grid over p1, m, N, special_edges plus fixed run settings."""

    p1_values: tuple[float, ...]
    m_values: tuple[int, ...]
    n_values: tuple[int, ...]
    special_values: tuple[bool, ...]
    initial: str = "cycle:10"
    beta: float = 2.0
    base_seed: int = 42
    seeds_per_cell: int = 3
    aspl: str = "auto"


def _parse_bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in ("true", "1", "yes"):
        return True
    if lowered in ("false", "0", "no"):
        return False
    raise ValueError(f"bad boolean {text!r}")


def parse_sweep_spec(text: str, origin: str = "<sweep>") -> SweepSpec:
    """Parse the key=value sweep format (comma lists for grid axes)."""
    values: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, val = line.partition("=")
        if not sep:
            raise ValueError(f"{origin}:{lineno}: expected key=value, got {line!r}")
        values[key.strip()] = val.strip()
    known = {"p1", "m", "N", "special_edges", "initial", "beta",
             "base_seed", "seeds_per_cell", "aspl"}
    unknown = set(values) - known
    if unknown:
        raise ValueError(f"{origin}: unknown keys {sorted(unknown)}")
    for required in ("p1", "m", "N"):
        if required not in values:
            raise ValueError(f"{origin}: missing required key {required!r}")

    def _list(key: str, convert):
        items = [s.strip() for s in values[key].split(",") if s.strip()]
        if not items:
            raise ValueError(f"{origin}: key {key!r} has an empty list")
        return tuple(convert(s) for s in items)

    try:
        spec = SweepSpec(
            p1_values=_list("p1", float),
            m_values=_list("m", int),
            n_values=_list("N", int),
            special_values=(_list("special_edges", _parse_bool)
                            if "special_edges" in values else (True,)),
            initial=values.get("initial", "cycle:10"),
            beta=float(values.get("beta", "2.0")),
            base_seed=int(values.get("base_seed", "42")),
            seeds_per_cell=int(values.get("seeds_per_cell", "3")),
            aspl=values.get("aspl", "auto"),
        )
    except ValueError as exc:
        raise ValueError(f"{origin}: {exc}") from None
    if spec.seeds_per_cell < 1:
        raise ValueError(f"{origin}: seeds_per_cell must be >= 1")
    return spec


def load_sweep_spec(name: str) -> SweepSpec:
    """Load a sweep spec from a path, or from the bundled specs by name."""
    path = Path(name)
    if path.exists():
        return parse_sweep_spec(path.read_text(), origin=str(path))
    bundled = resources.files("rwnet").joinpath("sweeps", name)
    if bundled.is_file():
        return parse_sweep_spec(bundled.read_text(), origin=name)
    raise OSError(f"sweep spec not found: {name} "
                  f"(not a file, not one of {', '.join(bundled_sweep_names())})")


def bundled_sweep_names() -> list[str]:
    sweeps = resources.files("rwnet").joinpath("sweeps")
    return sorted(p.name for p in sweeps.iterdir() if p.name.endswith(".sweep"))


_MASK64 = (1 << 64) - 1


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def cell_seed(base_seed: int, n: int, m: int, p1: float,
              special_edges: bool, repetition: int) -> int:
    """Stable per-cell seed: mixes the cell's parameter values, so adding
    grid points never changes the seeds of existing cells."""
    p1_bits = struct.unpack("<Q", struct.pack("<d", p1))[0]
    h = base_seed & _MASK64
    for v in (n, m, p1_bits, int(special_edges), repetition):
        h = _splitmix64(h ^ (v & _MASK64))
    return h


def sweep_tasks(spec: SweepSpec, scale: float) -> list[dict]:
    """Expand the grid into one task dict per (cell, repetition)."""
    tasks = []
    for n, m, p1, special in itertools.product(
            spec.n_values, spec.m_values, spec.p1_values, spec.special_values):
        scaled_n = max(1, round(n / scale))
        for rep in range(spec.seeds_per_cell):
            tasks.append({
                "N": scaled_n, "m": m, "p1": p1, "special_edges": special,
                "beta": spec.beta, "initial": spec.initial,
                "seed": cell_seed(spec.base_seed, n, m, p1, special, rep),
                "scale": scale, "aspl": spec.aspl,
            })
    return tasks


@dataclass(frozen=True)
class RunRecord:
    """One completed sweep run: parameters, measurements, bookkeeping."""

    params: GenParams
    scale: float
    timestamp: str
    status: str = "ok"
    n_nodes: int | None = None
    n_edges: int | None = None
    metrics: NetworkMetrics | None = None
    wall_time_s: float | None = None

    def to_row(self) -> dict:
        """Flatten into the SWEEP_COLUMNS schema (blanks for failed runs)."""
        m = self.metrics
        return {
            "status": self.status,
            "N": self.params.N,
            "m": self.params.m,
            "p1": self.params.p1,
            "special_edges": self.params.special_edges,
            "beta": self.params.beta,
            "initial": self.params.initial,
            "seed": self.params.seed,
            "scale": self.scale,
            "n_nodes": self.n_nodes if self.n_nodes is not None else "",
            "n_edges": self.n_edges if self.n_edges is not None else "",
            "avg_local_clustering": m.avg_local_clustering if m else "",
            "transitivity": m.transitivity if m else "",
            "avg_shortest_path": m.avg_shortest_path if m else "",
            "gamma": m.gamma if m else "",
            "max_degree": m.max_degree if m else "",
            "aspl_mode": m.aspl_mode if m else "",
            "wall_time_s": self.wall_time_s if self.wall_time_s is not None else "",
            "timestamp": self.timestamp,
        }


def run_cell(task: dict) -> RunRecord:
    """Generate + measure one cell; failures land in the status field."""
    params = GenParams(
        N=task["N"], m=task["m"], p1=task["p1"], initial=task["initial"],
        special_edges=task["special_edges"], beta=task["beta"],
        seed=task["seed"],
    )
    stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    try:
        t0 = time.perf_counter()
        g = generate(params)
        metrics = measure(g, aspl_mode=task["aspl"], aspl_seed=task["seed"] + 1)
        wall = time.perf_counter() - t0
    except Exception as exc:
        return RunRecord(params=params, scale=task["scale"], timestamp=stamp,
                         status=f"error: {exc}")
    return RunRecord(params=params, scale=task["scale"], timestamp=stamp,
                     n_nodes=g.node_count, n_edges=g.edge_count,
                     metrics=metrics, wall_time_s=wall)


def run_sweep(spec: SweepSpec, out_path: str | Path, scale: float = 1.0,
              jobs: int = 1, progress=None) -> int:
    """Execute the grid, appending one CSV row per run; returns row count."""
    tasks = sweep_tasks(spec, scale)
    out_path = Path(out_path)
    new_file = not out_path.exists() or out_path.stat().st_size == 0
    done = 0

    def write(record: RunRecord) -> None:
        nonlocal done
        writer.writerow({k: _fmt(v) for k, v in record.to_row().items()})
        fh.flush()
        done += 1
        if progress:
            progress(done, len(tasks), record)

    with open(out_path, "a", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=SWEEP_COLUMNS)
        if new_file:
            writer.writeheader()
        if jobs > 1:
            with multiprocessing.Pool(jobs) as pool:
                for record in pool.imap(run_cell, tasks):
                    write(record)
        else:
            for task in tasks:
                write(run_cell(task))
    return done


def cmd_sweep(args) -> int:
    try:
        spec = load_sweep_spec(args.spec)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.scale <= 0:
        print(f"error: --scale must be positive, got {args.scale}", file=sys.stderr)
        return EXIT_USAGE

    def progress(done, total, record):
        p = record.params
        print(f"[{done}/{total}] N={p.N} m={p.m} p1={p.p1} "
              f"special={_fmt(p.special_edges)} seed={p.seed} "
              f"status={record.status.split(':')[0]}", file=sys.stderr)

    try:
        rows = run_sweep(spec, args.out, scale=args.scale, jobs=args.jobs,
                         progress=progress)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    print(f"wrote {rows} rows to {args.out}")
    return EXIT_OK


# ---------------------------------------------------------------- plotdata

FIGURES = {
    "1": ("p1", "avg_local_clustering"),
    "2": ("m", "avg_shortest_path"),
    "3": ("N", "avg_shortest_path"),
}


def cmd_plotdata(args) -> int:
    x_col, y_col = FIGURES[args.figure]
    try:
        with open(args.sweep, newline="") as fh:
            rows = list(csv.DictReader(fh))
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    if not rows:
        print(f"error: sweep file {args.sweep} has no rows", file=sys.stderr)
        return EXIT_RUNTIME
    for col in (x_col, y_col, "status"):
        if col not in rows[0]:
            print(f"error: sweep file {args.sweep} is missing column {col!r}",
                  file=sys.stderr)
            return EXIT_RUNTIME
    groups: dict[float, list[float]] = {}
    for row in rows:
        if row["status"] != "ok":
            continue
        groups.setdefault(float(row[x_col]), []).append(float(row[y_col]))
    if not groups:
        print(f"error: sweep file {args.sweep} has no ok rows", file=sys.stderr)
        return EXIT_RUNTIME
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.writer(out)
        if args.figure == "3":
            writer.writerow(["ln_N", y_col])
            for x in sorted(groups):
                writer.writerow([_fmt(math.log(x)),
                                 _fmt(sum(groups[x]) / len(groups[x]))])
        else:
            writer.writerow([x_col, y_col])
            for x in sorted(groups):
                writer.writerow([_fmt(x), _fmt(sum(groups[x]) / len(groups[x]))])
    finally:
        if args.out:
            out.close()
    return EXIT_OK


# -------------------------------------------------------------------- main

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="rwnet",
        description="Grow random-walk networks with shortcut edges, measure "
                    "them, and run parameter sweeps.",
        epilog="sweep CSV columns: " + ",".join(SWEEP_COLUMNS)
               + " | measure CSV columns: " + ",".join(MEASURE_COLUMNS),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("generate", help="grow a graph and write its edge list")
    p_gen.add_argument("--initial", default="cycle:10",
                       help="seed graph: cycle:N, complete:N, or file:PATH")
    p_gen.add_argument("--N", type=int, required=True, help="nodes to add")
    p_gen.add_argument("--m", type=int, required=True,
                       help="walk marks per iteration")
    p_gen.add_argument("--p1", type=float, required=True,
                       help="probability of a 1-step walk phase, in [0, 1]")
    p_gen.add_argument("--beta", type=float, default=2.0,
                       help="shortcut distance decay exponent (default 2.0)")
    p_gen.add_argument("--no-special-edge", action="store_true",
                       help="disable shortcut edges (baseline model)")
    p_gen.add_argument("--seed", type=int, default=0, help="RNG seed")
    p_gen.add_argument("--out", required=True, help="output edge-list path")
    p_gen.set_defaults(func=cmd_generate)

    p_meas = sub.add_parser("measure", help="measure a stored edge list")
    p_meas.add_argument("input", help="edge-list file to measure")
    p_meas.add_argument("--aspl", default="auto",
                        help="path-length mode: auto, exact, or sampled:K "
                             "(auto = exact up to 20000 nodes)")
    p_meas.add_argument("--seed", type=int, default=0,
                        help="seed for sampled path-length sources")
    p_meas.add_argument("--header", action="store_true",
                        help="print the CSV header row")
    p_meas.set_defaults(func=cmd_measure)

    p_sweep = sub.add_parser("sweep", help="run a parameter sweep to CSV")
    p_sweep.add_argument("--spec", required=True,
                         help="sweep spec file, or a bundled name: "
                              + ", ".join(bundled_sweep_names()))
    p_sweep.add_argument("--out", required=True, help="output CSV path (appended)")
    p_sweep.add_argument("--scale", type=float, default=1.0,
                         help="divide every N in the grid by this factor")
    p_sweep.add_argument("--jobs", type=int, default=1,
                         help="parallel worker processes (default 1)")
    p_sweep.set_defaults(func=cmd_sweep)

    p_plot = sub.add_parser("plotdata",
                            help="aggregate a sweep CSV into plot-ready series")
    p_plot.add_argument("--sweep", required=True, help="sweep CSV to aggregate")
    p_plot.add_argument("--figure", choices=sorted(FIGURES), required=True,
                        help="1: (p1, clustering); 2: (m, path length); "
                             "3: (ln N, path length)")
    p_plot.add_argument("--out", help="output CSV path (default stdout)")
    p_plot.set_defaults(func=cmd_plotdata)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
