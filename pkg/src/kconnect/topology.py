"""Undirected simple graphs on ranked nodes, plus edge-list and DOT I/O."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Optional, Union

METHODS = ("bipartite", "sequential", "harary", "hypercube", "external")


class TopologyError(ValueError):
    pass


def _canonical(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Topology:
    """Undirected simple graph.

    Nodes are the integers ``1..n`` unless the topology is an induced
    subgraph, in which case ``nodes`` holds the survivors under their
    original numbers. Edges are stored once as ``(u, v)`` with ``u < v``.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    method: str = "external"
    k: Optional[int] = None
    nodes: tuple[int, ...] = ()
    warnings: tuple[str, ...] = field(default=(), compare=False)

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        method: str = "external",
        k: Optional[int] = None,
        nodes: Optional[Iterable[int]] = None,
        warnings: Iterable[str] = (),
    ):
        if n < 0:
            raise TopologyError(f"node count must be >= 0, got {n}")
        if method not in METHODS:
            raise TopologyError(f"unknown method tag {method!r}")
        node_tuple = tuple(range(1, n + 1)) if nodes is None else tuple(sorted(set(nodes)))
        node_set = set(node_tuple)
        if any(not 1 <= v <= n for v in node_tuple):
            raise TopologyError(f"nodes must lie in 1..{n}")
        canon = set()
        for u, v in edges:
            if u == v:
                raise TopologyError(f"self-loop at node {u}")
            if u not in node_set or v not in node_set:
                raise TopologyError(f"edge ({u}, {v}) has an endpoint outside the node set")
            e = _canonical(u, v)
            if e in canon:
                raise TopologyError(f"duplicate edge {e}")
            canon.add(e)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(canon))
        object.__setattr__(self, "method", method)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "nodes", node_tuple)
        object.__setattr__(self, "warnings", tuple(warnings))

    def __len__(self) -> int:
        return len(self.nodes)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.nodes}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def has_edge(self, u: int, v: int) -> bool:
        return _canonical(u, v) in self.edges

    def is_complete(self) -> bool:
        m = len(self.nodes)
        return len(self.edges) == m * (m - 1) // 2


def degree(t: Topology, v: int) -> int:
    if v not in set(t.nodes):
        raise TopologyError(f"node {v} is not in the topology")
    return sum(1 for e in t.edges if v in e)


def min_degree(t: Topology) -> int:
    adj = t.adjacency()
    return min((len(nbrs) for nbrs in adj.values()), default=0)


def is_connected(t: Topology) -> bool:
    """Single BFS from the smallest node; a one-node graph is connected."""
    if not t.nodes:
        raise TopologyError("connectivity of an empty graph is undefined")
    adj = t.adjacency()
    start = t.nodes[0]
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(t.nodes)


def components(t: Topology) -> list[list[int]]:
    adj = t.adjacency()
    seen: set[int] = set()
    out = []
    for start in t.nodes:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def remove_nodes(t: Topology, s: Iterable[int]) -> Topology:
    """Induced subgraph on the nodes not in ``s``; identities are preserved."""
    drop = set(s)
    unknown = drop - set(t.nodes)
    if unknown:
        raise TopologyError(f"cannot remove unknown nodes {sorted(unknown)}")
    keep = [v for v in t.nodes if v not in drop]
    edges = [(u, v) for u, v in t.edges if u not in drop and v not in drop]
    return Topology(t.n, edges, t.method, t.k, nodes=keep)


def remove_edges(t: Topology, s: Iterable[tuple[int, int]]) -> Topology:
    drop = {_canonical(u, v) for u, v in s}
    return Topology(t.n, t.edges - drop, t.method, t.k, nodes=t.nodes)


# -- serialization ---------------------------------------------------------


def to_edgelist(t: Topology) -> str:
    """Header ``n k method`` followed by sorted ``u v`` lines.

    An unknown requested connectivity is written as ``0``.
    """
    lines = [f"{t.n} {t.k if t.k is not None else 0} {t.method}"]
    lines.extend(f"{u} {v}" for u, v in t.sorted_edges())
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Topology:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise TopologyError("edge list is empty (missing 'n k method' header)")
    header = lines[0].split()
    if len(header) not in (2, 3):
        raise TopologyError(f"bad header {lines[0]!r}; expected 'n k method'")
    try:
        n, k = int(header[0]), int(header[1])
    except ValueError:
        raise TopologyError(f"bad header {lines[0]!r}; n and k must be integers") from None
    method = header[2] if len(header) == 3 else "external"
    edges = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 2:
            raise TopologyError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise TopologyError(f"line {lineno}: node ids must be integers") from None
    return Topology(n, edges, method, k if k > 0 else None)


def read_edgelist(path: Union[str, Path]) -> Topology:
    return parse_edgelist(Path(path).read_text())


def to_dot(t: Topology, labels: Optional[Mapping[int, str]] = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in t.nodes:
        if labels is not None and v in labels:
            lines.append(f'  {v} [label="{labels[v]}"];')
        else:
            lines.append(f"  {v};")
    lines.extend(f"  {u} -- {v};" for u, v in t.sorted_edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
