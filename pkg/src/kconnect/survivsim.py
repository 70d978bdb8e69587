"""Random failure injection: how often does a topology stay connected?"""

from __future__ import annotations

import csv
import io
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Optional

from .connectivity import vertex_connectivity
from .topology import Topology

MODES = ("node", "link")
EXHAUSTIVE_BUDGET = 10**6
CSV_HEADER = ("mode", "f", "trials", "survived", "fraction", "kappa")


@dataclass(frozen=True)
class TrialConfig:
    failures: int
    mode: str = "node"
    trials: int = 1000
    seed: int = 0

    def check(self, t: Topology) -> None:
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        _check_failures(t, self.failures, self.mode)


def _check_failures(t: Topology, f: int, mode: str) -> None:
    if f < 0:
        raise ValueError(f"failure count must be >= 0, got {f}")
    if mode == "node" and f > len(t.nodes) - 2:
        raise ValueError(
            f"node mode needs at least two survivors: f={f} > n-2={len(t.nodes) - 2}"
        )
    if mode == "link" and f > len(t.edges):
        raise ValueError(f"cannot fail {f} links out of {len(t.edges)}")


@dataclass(frozen=True)
class SurvivabilityReport:
    mode: str
    failures: int
    trials: int
    survived: int
    kappa: int

    @property
    def fraction(self) -> float:
        return self.survived / self.trials

    def to_csv(self, header: bool = True) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        if header:
            writer.writerow(CSV_HEADER)
        writer.writerow(
            [self.mode, self.failures, self.trials, self.survived, f"{self.fraction:.6f}", self.kappa]
        )
        return out.getvalue()

    def to_text(self) -> str:
        return (
            f"{self.mode} failures f={self.failures}: {self.survived}/{self.trials} trials "
            f"stayed connected (fraction {self.fraction:.6f}, kappa {self.kappa})\n"
        )


class _BitGraph:
    """Adjacency bitmasks over positions ``0..len(nodes)-1``."""

    def __init__(self, t: Topology):
        self.nodes = t.nodes
        pos = {v: i for i, v in enumerate(t.nodes)}
        self.edges = [(pos[u], pos[v]) for u, v in t.sorted_edges()]
        self.full = (1 << len(t.nodes)) - 1
        self.adj = [0] * len(t.nodes)
        for a, b in self.edges:
            self.adj[a] |= 1 << b
            self.adj[b] |= 1 << a

    @staticmethod
    def _spans(adj: list[int], alive: int) -> bool:
        if alive == 0:
            return False
        start = alive & -alive
        seen = frontier = start
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            nxt = adj[low.bit_length() - 1] & alive & ~seen
            seen |= nxt
            frontier |= nxt
        return seen == alive

    def survives_nodes(self, removed: tuple[int, ...]) -> bool:
        alive = self.full
        for i in removed:
            alive &= ~(1 << i)
        return self._spans(self.adj, alive)

    def survives_links(self, removed: tuple[int, ...]) -> bool:
        adj = list(self.adj)
        for i in removed:
            a, b = self.edges[i]
            adj[a] &= ~(1 << b)
            adj[b] &= ~(1 << a)
        return self._spans(adj, self.full)


def _population(g: _BitGraph, mode: str) -> int:
    return len(g.nodes) if mode == "node" else len(g.edges)


def trial_survives(g: _BitGraph, c: TrialConfig, index: int) -> bool:
    # each trial owns its generator, so outcomes do not depend on run order
    rng = random.Random(c.seed ^ index)
    removed = tuple(rng.sample(range(_population(g, c.mode)), c.failures))
    return g.survives_nodes(removed) if c.mode == "node" else g.survives_links(removed)


def simulate(t: Topology, c: TrialConfig, kappa: Optional[int] = None) -> SurvivabilityReport:
    """Monte Carlo survivability under ``c.failures`` simultaneous failures.

    Failed elements are drawn uniformly without replacement. In node mode a
    trial survives when the graph induced on the remaining nodes is
    connected; in link mode all nodes must stay connected.
    """
    c.check(t)
    g = _BitGraph(t)
    survived = sum(trial_survives(g, c, i) for i in range(c.trials))
    if kappa is None:
        kappa = vertex_connectivity(t).kappa
    return SurvivabilityReport(c.mode, c.failures, c.trials, survived, kappa)


def exhaustive_survivability(t: Topology, f: int, mode: str = "node") -> Fraction:
    """Exact fraction of ``f``-subsets whose failure leaves the graph connected."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    _check_failures(t, f, mode)
    g = _BitGraph(t)
    size = _population(g, mode)
    total = comb(size, f)
    if total > EXHAUSTIVE_BUDGET:
        raise ValueError(f"C({size}, {f}) = {total} subsets exceeds budget {EXHAUSTIVE_BUDGET}")
    check = g.survives_nodes if mode == "node" else g.survives_links
    ok = sum(check(removed) for removed in combinations(range(size), f))
    return Fraction(ok, total)
