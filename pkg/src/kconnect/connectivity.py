"""Exact vertex connectivity with checkable certificates.

Local connectivity between two nodes is the maximum flow in the node-split
network: every node ``v`` other than the two terminals becomes an arc
``v_in -> v_out`` of capacity 1, and every undirected edge ``{a, b}``
becomes arcs ``a_out -> b_in`` and ``b_out -> a_in``. The flow decomposes
into internally vertex-disjoint paths (a lower-bound certificate), and the
residual reachability yields a separating vertex set (an upper-bound
certificate).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .topology import Topology, TopologyError, components, is_connected, remove_nodes

BRUTE_FORCE_MAX_N = 12


@dataclass(frozen=True)
class LocalConnectivity:
    s: int
    u: int
    value: int
    paths: tuple[tuple[int, ...], ...]
    # nodes separating s from u; None when s and u are adjacent
    cut: Optional[frozenset[int]]


@dataclass(frozen=True)
class ConnectivityReport:
    kappa: int
    # None for complete graphs, which have no separating set
    witness_cut: Optional[frozenset[int]]
    pair: tuple[int, int]
    sample_paths: tuple[tuple[int, ...], ...]

    def to_text(self, labels: Optional[dict[int, str]] = None) -> str:
        """Plain-text certificate: kappa, cut, then one path per line."""

        def name(v: int) -> str:
            return labels.get(v, str(v)) if labels else str(v)

        if self.witness_cut is None:
            cut = "none (complete graph)"
        else:
            cut = "{" + ", ".join(name(v) for v in sorted(self.witness_cut)) + "}"
        s, u = self.pair
        lines = [
            f"kappa: {self.kappa}",
            f"witness_cut: {cut}",
            f"pair: {name(s)} {name(u)}",
            f"disjoint_paths: {len(self.sample_paths)}",
        ]
        lines.extend("  " + " - ".join(name(v) for v in path) for path in self.sample_paths)
        return "\n".join(lines) + "\n"


class _SplitNetwork:
    """Residual network for one (s, u) pair."""

    def __init__(self, t: Topology, s: int, u: int):
        self.s, self.u = s, u
        self.residual: dict[tuple, dict[tuple, int]] = {}
        big = len(t.nodes) + 1
        for v in t.nodes:
            if v not in (s, u):
                self._arc(("in", v), ("out", v), 1)
        for a, b in t.sorted_edges():
            for x, y in ((a, b), (b, a)):
                if x == u or y == s:
                    continue
                # the direct s-u link is one path; other edges are never the
                # bottleneck, which keeps residual cuts made of node arcs
                cap = 1 if (x, y) == (s, u) else big
                self._arc(("out", x), ("in", y), cap)
        self.capacity = {(x, y): c for x, nbrs in self.residual.items() for y, c in nbrs.items()}
        self.source = ("out", s)
        self.sink = ("in", u)

    def _arc(self, x, y, cap):
        self.residual.setdefault(x, {})
        self.residual.setdefault(y, {})
        self.residual[x][y] = self.residual[x].get(y, 0) + cap
        self.residual[y].setdefault(x, 0)

    def _augmenting_path(self):
        parent = {self.source: None}
        queue = deque([self.source])
        while queue:
            x = queue.popleft()
            for y, c in self.residual.get(x, {}).items():
                if c > 0 and y not in parent:
                    parent[y] = x
                    if y == self.sink:
                        return parent
                    queue.append(y)
        return None

    def max_flow(self) -> int:
        flow = 0
        if self.source not in self.residual or self.sink not in self.residual:
            return 0
        while True:
            parent = self._augmenting_path()
            if parent is None:
                return flow
            y = self.sink
            while parent[y] is not None:
                x = parent[y]
                self.residual[x][y] -= 1
                self.residual[y][x] += 1
                y = x
            flow += 1

    def reachable(self) -> set:
        seen = {self.source}
        queue = deque([self.source])
        while queue:
            x = queue.popleft()
            for y, c in self.residual.get(x, {}).items():
                if c > 0 and y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen

    def paths(self) -> list[tuple[int, ...]]:
        flow = {
            arc: cap - self.residual[arc[0]][arc[1]]
            for arc, cap in self.capacity.items()
            if cap - self.residual[arc[0]][arc[1]] > 0
        }
        out_arcs: dict[tuple, list[tuple]] = {}
        for (x, y), f in sorted(flow.items()):
            if x[0] == "out":
                out_arcs.setdefault(x, []).extend([y] * f)
        result = []
        while out_arcs.get(self.source):
            path = [self.s]
            node = self.source
            while True:
                nxt = out_arcs[node].pop(0)
                path.append(nxt[1])
                if nxt == self.sink:
                    break
                node = ("out", nxt[1])
            result.append(tuple(path))
        return result


def _check_pair(t: Topology, s: int, u: int) -> None:
    nodes = set(t.nodes)
    if s not in nodes or u not in nodes:
        raise TopologyError(f"nodes {s}, {u} must both be in the topology")
    if s == u:
        raise ValueError("local connectivity needs two distinct nodes")


def local_connectivity(t: Topology, s: int, u: int) -> LocalConnectivity:
    """Maximum number of internally vertex-disjoint ``s``-``u`` paths.

    Adjacent pairs count the direct link as one path.
    """
    _check_pair(t, s, u)
    net = _SplitNetwork(t, s, u)
    value = net.max_flow()
    paths = tuple(net.paths())
    assert len(paths) == value
    cut = None
    if not t.has_edge(s, u):
        reach = net.reachable()
        cut = frozenset(v for v in t.nodes if ("in", v) in reach and ("out", v) not in reach and v not in (s, u))
    return LocalConnectivity(s, u, value, paths, cut)


def vertex_connectivity(t: Topology) -> ConnectivityReport:
    """Exact vertex connectivity, minimised over all non-adjacent pairs.

    Complete graphs report ``len(nodes) - 1`` by convention. Ties between
    pairs go to the lexicographically smallest pair.
    """
    nodes = t.nodes
    if len(nodes) < 2:
        raise TopologyError("vertex connectivity needs at least 2 nodes")
    if t.is_complete():
        local = local_connectivity(t, nodes[0], nodes[1])
        return ConnectivityReport(len(nodes) - 1, None, (nodes[0], nodes[1]), local.paths)
    if not is_connected(t):
        comps = components(t)
        s, u = sorted((comps[0][0], comps[1][0]))
        return ConnectivityReport(0, frozenset(), (s, u), ())

    best: Optional[LocalConnectivity] = None
    for s, u in combinations(nodes, 2):
        if t.has_edge(s, u):
            continue
        local = local_connectivity(t, s, u)
        if best is None or local.value < best.value:
            best = local
    assert best is not None and best.cut is not None
    if len(best.cut) != best.value or is_connected(remove_nodes(t, best.cut)):
        raise RuntimeError(f"witness cut {sorted(best.cut)} failed re-check")
    return ConnectivityReport(best.value, best.cut, (best.s, best.u), best.paths)


def is_k_connected(t: Topology, k: int) -> tuple[bool, ConnectivityReport]:
    """Whether ``kappa >= k``, with the report as certificate either way."""
    if not 1 <= k <= len(t.nodes) - 1:
        raise ValueError(f"k must satisfy 1 <= k <= n-1, got k={k} for {len(t.nodes)} nodes")
    report = vertex_connectivity(t)
    return report.kappa >= k, report


def brute_force_connectivity(t: Topology) -> int:
    """Smallest node set whose removal disconnects the rest, by enumeration.

    Removals that leave fewer than two nodes do not count, so the complete
    graph gets ``n - 1``. Exponential; refuses graphs above 12 nodes.
    """
    nodes = t.nodes
    if len(nodes) > BRUTE_FORCE_MAX_N:
        raise ValueError(
            f"brute-force connectivity is limited to {BRUTE_FORCE_MAX_N} nodes, got {len(nodes)}"
        )
    if len(nodes) < 2:
        raise TopologyError("vertex connectivity needs at least 2 nodes")
    for size in range(len(nodes) - 1):
        for removed in combinations(nodes, size):
            if not is_connected(remove_nodes(t, removed)):
                return size
    return len(nodes) - 1


def validate_paths(t: Topology, s: int, u: int, paths) -> bool:
    """True when every path is a simple ``s``-``u`` walk along edges of ``t``
    and no two paths share an internal node or both use the direct link."""
    seen_internal: set[int] = set()
    direct = 0
    for path in paths:
        if len(path) < 2 or path[0] != s or path[-1] != u:
            return False
        if len(set(path)) != len(path):
            return False
        if any(not t.has_edge(a, b) for a, b in zip(path, path[1:])):
            return False
        inner = set(path[1:-1])
        if not inner:
            direct += 1
        if inner & seen_internal:
            return False
        seen_internal |= inner
    return direct <= 1


def validate_cut(t: Topology, cut) -> bool:
    """True when removing ``cut`` leaves at least two nodes, disconnected."""
    rest = remove_nodes(t, cut)
    return len(rest.nodes) >= 2 and not is_connected(rest)
