"""Link-count formulas, cost totals and the per-method comparison table."""

from __future__ import annotations

import csv
import io
import warnings
from dataclasses import dataclass, field
from typing import Optional

from .connectivity import vertex_connectivity
from .costmodel import CostMatrix, Number, Numbering, number_nodes
from .generators import generate
from .topology import Topology

METHOD_ORDER = ("bipartite", "sequential", "harary", "hypercube")
CSV_HEADER = ("method", "links", "formula", "kappa", "total_cost", "flags")


def total_cost(t: Topology, m: CostMatrix, numbering: Numbering) -> Number:
    """Sum of matrix costs over the topology's links, mapping ranks to labels."""
    if t.n != m.n or len(numbering) != m.n:
        raise ValueError(
            f"dimension mismatch: topology n={t.n}, matrix n={m.n}, numbering n={len(numbering)}"
        )
    idx = {label: i for i, label in enumerate(m.labels)}
    return sum(
        m.costs[idx[numbering.inverse[u]]][idx[numbering.inverse[v]]] for u, v in t.sorted_edges()
    )


def link_count_formula(method: str, n: int, k: int) -> int:
    if n < 2 or not 1 <= k <= n - 1:
        raise ValueError(f"invalid (n, k) = ({n}, {k}); need n >= 2 and 1 <= k <= n-1")
    if method == "bipartite":
        return k * (n - k)
    if method == "sequential":
        return k * n - k * (k + 1) // 2
    if method == "harary":
        return -(-k * n // 2)
    if method == "hypercube":
        if n != 1 << k:
            raise ValueError(f"hypercube needs n = 2**k, got n={n}, k={k}")
        return k * (1 << (k - 1))
    raise ValueError(f"unknown method {method!r}")


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def bipartite_vs_sequential(n: int, k: int) -> int:
    """Sign of k(n-k) minus the sequential count; -1 below, 0 equal."""
    return _sign(link_count_formula("bipartite", n, k) - link_count_formula("sequential", n, k))


def bipartite_vs_half_kn(n: int, k: int) -> int:
    """Sign of k(n-k) - kn/2, evaluated exactly (no ceiling)."""
    return _sign(2 * k * (n - k) - k * n)


@dataclass(frozen=True)
class InequalityAudit:
    """Grid check of the two link-count comparisons."""

    max_n: int
    cases: int
    # bipartite <= sequential everywhere, equality exactly at k = 1
    sequential_ok: bool
    # bipartite < kn/2 exactly when k > n/2 (and > when k < n/2)
    half_kn_ok: bool
    sequential_equalities: tuple[tuple[int, int], ...]
    counterexamples: tuple[tuple[int, int], ...] = field(default=())

    @property
    def passed(self) -> bool:
        return self.sequential_ok and self.half_kn_ok


def audit_inequalities(max_n: int = 32, min_n: int = 2) -> InequalityAudit:
    seq_ok = half_ok = True
    equalities = []
    bad = []
    cases = 0
    for n in range(min_n, max_n + 1):
        for k in range(1, n):
            cases += 1
            s = bipartite_vs_sequential(n, k)
            if s == 0:
                equalities.append((n, k))
            if s > 0 or (s == 0) != (k == 1):
                seq_ok = False
                bad.append((n, k))
            h = bipartite_vs_half_kn(n, k)
            if h != _sign(n - 2 * k):
                half_ok = False
                bad.append((n, k))
    return InequalityAudit(max_n, cases, seq_ok, half_ok, tuple(equalities), tuple(bad))


@dataclass(frozen=True)
class ComparisonRow:
    method: str
    link_count: int
    formula_value: int
    achieved_kappa: int
    total_cost: Optional[Number] = None
    flags: tuple[str, ...] = ()


def _row_flags(method: str, n: int, k: int, kappa: int) -> list[str]:
    flags = []
    if method == "bipartite":
        s = bipartite_vs_sequential(n, k)
        flags.append("lt_sequential" if s < 0 else "eq_sequential_at_k1" if s == 0 else "gt_sequential")
        h = bipartite_vs_half_kn(n, k)
        flags.append({-1: "lt_half_kn", 0: "eq_half_kn", 1: "gt_half_kn"}[h])
    if method == "harary" and (k * n) % 2 == 1:
        flags.append("half_kn_rounded_up")
    if kappa < k:
        flags.append("kappa_below_k")
    return flags


def compare(n: int, k: int, m: Optional[CostMatrix] = None) -> list[ComparisonRow]:
    """One row per applicable method, in fixed order.

    Connectivity is always measured, never taken from the method's claim.
    The hypercube row appears only when ``n == 2**k``.
    """
    if n < 2 or not 1 <= k <= n - 1:
        raise ValueError(f"invalid (n, k) = ({n}, {k}); need n >= 2 and 1 <= k <= n-1")
    if m is not None and m.n != n:
        raise ValueError(f"cost matrix has {m.n} nodes, expected {n}")
    numbering = number_nodes(m) if m is not None else None
    rows = []
    for method in METHOD_ORDER:
        if method == "hypercube" and n != 1 << k:
            continue
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            t = generate(method, n, k)
        kappa = vertex_connectivity(t).kappa
        rows.append(
            ComparisonRow(
                method=method,
                link_count=len(t.edges),
                formula_value=link_count_formula(method, n, k),
                achieved_kappa=kappa,
                total_cost=total_cost(t, m, numbering) if m is not None else None,
                flags=tuple(_row_flags(method, n, k, kappa)),
            )
        )
    return rows


def summary_lines(n: int, k: int) -> list[str]:
    """Human-readable statements of the evaluated inequalities."""
    b = link_count_formula("bipartite", n, k)
    s = link_count_formula("sequential", n, k)
    rel = {-1: "<", 0: "=", 1: ">"}
    lines = [f"k(n-k) = {b} {rel[_sign(b - s)]} {s} = (n-1)+...+(n-k)"]
    if k == 1:
        lines.append("note: equality at k = 1; strict only for k > 1")
    h = bipartite_vs_half_kn(n, k)
    half = f"{k * n // 2}" if (k * n) % 2 == 0 else f"{k * n}/2"
    lines.append(f"k(n-k) = {b} {rel[h]} {half} = kn/2 (fewer links than kn/2 iff k > n/2)")
    if 2 * k > n:
        lines.append(
            f"warning: bipartite design with k > n/2 achieves connectivity {n - k} < requested {k}"
        )
    return lines


def _fmt_cost(c: Optional[Number]) -> str:
    return "" if c is None else str(c)


def rows_to_csv(rows: list[ComparisonRow]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in rows:
        writer.writerow(
            [r.method, r.link_count, r.formula_value, r.achieved_kappa, _fmt_cost(r.total_cost), ";".join(r.flags)]
        )
    return out.getvalue()


def rows_to_table(rows: list[ComparisonRow]) -> str:
    cells = [list(CSV_HEADER)] + [
        [r.method, str(r.link_count), str(r.formula_value), str(r.achieved_kappa), _fmt_cost(r.total_cost), " ".join(r.flags)]
        for r in rows
    ]
    widths = [max(len(row[i]) for row in cells) for i in range(len(CSV_HEADER))]
    return "".join(
        "  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n" for row in cells
    )
