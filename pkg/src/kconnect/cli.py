"""Command-line front end.

Exit codes: 0 success (or verified k-connected), 1 verification failed,
2 input or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .analysis import compare, link_count_formula, rows_to_csv, rows_to_table, summary_lines, total_cost
from .connectivity import is_k_connected, vertex_connectivity
from .costmodel import CostMatrix, CostMatrixError, Numbering, number_nodes, numbering_table, read_numbering_csv
from .generators import ConnectivityWarning, generate
from .survivsim import TrialConfig, simulate
from .topology import TopologyError, read_edgelist, to_dot, to_edgelist

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


@dataclass
class RunManifest:
    command: str
    inputs: dict
    outputs: list = field(default_factory=list)
    version: str = __version__

    def write(self, path: str) -> None:
        Path(path).write_text(json.dumps(asdict(self), indent=2, sort_keys=True) + "\n")


def _load_matrix(path: str) -> CostMatrix:
    try:
        return CostMatrix.from_csv(path)
    except CostMatrixError as exc:
        raise InputError(f"{path}: {exc}") from None


def _load_labels(path: Optional[str]) -> Optional[Numbering]:
    if path is None:
        return None
    try:
        return read_numbering_csv(path)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def cmd_number(args, out, manifest: RunManifest) -> int:
    m = _load_matrix(args.matrix)
    rows = numbering_table(m)
    if args.format == "csv":
        out.write("label,accumulated_cost,number\n")
        for label, cost, rank in rows:
            out.write(f"{label},{cost},{rank}\n")
    else:
        width = max(len("node"), *(len(label) for label, _, _ in rows))
        out.write(f"{'node'.ljust(width)}  accumulated_cost  number\n")
        for label, cost, rank in rows:
            out.write(f"{label.ljust(width)}  {str(cost).rjust(16)}  {str(rank).rjust(6)}\n")
    return EXIT_OK


def cmd_generate(args, out, manifest: RunManifest) -> int:
    m = _load_matrix(args.matrix) if args.matrix else None
    n = args.n
    if m is not None:
        if n is not None and n != m.n:
            raise InputError(f"-n {n} does not match the {m.n}-node cost matrix")
        n = m.n
    if args.method != "hypercube" and n is None:
        raise InputError("-n is required unless a cost matrix is given")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", ConnectivityWarning)
        t = generate(args.method, n, args.k)
    numbering = number_nodes(m) if m is not None else _load_labels(args.labels)
    if numbering is not None and len(numbering) != t.n:
        raise InputError(f"numbering has {len(numbering)} nodes, topology has {t.n}")
    labels = dict(numbering.inverse) if numbering is not None else None

    formats = args.out or ["edgelist"]
    rendered = {"edgelist": to_edgelist(t), "dot": to_dot(t, labels)}
    kappa = vertex_connectivity(t).kappa
    summary = [
        f"method: {t.method}",
        f"n: {t.n}",
        f"k: {t.k}",
        f"links: {len(t.edges)}",
        f"formula: {link_count_formula(t.method, t.n, t.k)}",
        f"kappa: {kappa}",
    ]
    if m is not None:
        summary.append(f"total_cost: {total_cost(t, m, numbering)}")

    if args.output:
        suffix = {"edgelist": ".edges", "dot": ".dot"}
        for fmt in formats:
            path = f"{args.output}{suffix[fmt]}"
            Path(path).write_text(rendered[fmt])
            manifest.outputs.append(path)
        for line in summary:
            out.write(line + "\n")
    else:
        if len(formats) > 1:
            raise InputError("several --out formats need -o/--output")
        out.write(rendered[formats[0]])
        for line in summary:
            out.write(f"# {line}\n")
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args, out, manifest: RunManifest) -> int:
    t = read_edgelist(args.edgelist)
    numbering = _load_labels(args.labels)
    labels = dict(numbering.inverse) if numbering is not None else None
    ok, report = is_k_connected(t, args.k)
    out.write(f"verdict: {'k-connected' if ok else 'not k-connected'} (k={args.k})\n")
    out.write(report.to_text(labels))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_compare(args, out, manifest: RunManifest) -> int:
    m = _load_matrix(args.matrix) if args.matrix else None
    rows = compare(args.n, args.k, m)
    if args.format == "csv":
        out.write(rows_to_csv(rows))
    else:
        out.write(rows_to_table(rows))
        out.write("\n")
        for line in summary_lines(args.n, args.k):
            out.write(line + "\n")
    return EXIT_OK


def cmd_simulate(args, out, manifest: RunManifest) -> int:
    t = read_edgelist(args.edgelist)
    config = TrialConfig(failures=args.f, mode=args.mode, trials=args.trials, seed=args.seed)
    report = simulate(t, config)
    out.write(report.to_csv() if args.format == "csv" else report.to_text())
    return EXIT_OK


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kconnect",
        description="Design and verify k-connected survivable network topologies.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help: str):
        p = sub.add_parser(name, help=help)
        p.add_argument("--manifest", metavar="FILE", help="write a JSON run manifest")
        return p

    p = add("number", "rank nodes by accumulated link cost")
    p.add_argument("matrix", help="cost-matrix CSV file")
    p.add_argument("--format", choices=("table", "csv"), default="table")
    p.set_defaults(func=cmd_number)

    p = add("generate", "build a topology")
    p.add_argument("matrix", nargs="?", help="optional cost-matrix CSV (labels and cost)")
    p.add_argument("--method", choices=("bipartite", "sequential", "harary", "hypercube"), default="bipartite")
    p.add_argument("-n", type=int)
    p.add_argument("-k", type=_positive_int, required=True)
    p.add_argument("--out", action="append", choices=("edgelist", "dot"), help="output format (repeatable)")
    p.add_argument("-o", "--output", metavar="PREFIX", help="write PREFIX.edges / PREFIX.dot instead of stdout")
    p.add_argument("--labels", metavar="NUMBERING", help="numbering CSV from 'number --format csv'")
    p.set_defaults(func=cmd_generate)

    p = add("verify", "compute vertex connectivity with certificates")
    p.add_argument("edgelist")
    p.add_argument("-k", type=_positive_int, required=True)
    p.add_argument("--labels", metavar="NUMBERING", help="numbering CSV from 'number --format csv'")
    p.set_defaults(func=cmd_verify)

    p = add("compare", "compare link counts and connectivity across methods")
    p.add_argument("matrix", nargs="?", help="optional cost-matrix CSV")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=_positive_int, required=True)
    p.add_argument("--format", choices=("table", "csv"), default="table")
    p.set_defaults(func=cmd_compare)

    p = add("simulate", "Monte Carlo survivability under random failures")
    p.add_argument("edgelist")
    p.add_argument("--mode", choices=("node", "link"), default="node")
    p.add_argument("-f", type=int, required=True, help="simultaneous failures per trial")
    p.add_argument("--trials", type=_positive_int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("csv", "text"), default="csv")
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    inputs = {k: v for k, v in vars(args).items() if k not in ("func", "manifest")}
    manifest = RunManifest(command=args.command, inputs=inputs)
    try:
        code = args.func(args, out, manifest)
    except (InputError, CostMatrixError, TopologyError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.manifest:
        manifest.write(args.manifest)
    return code


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
