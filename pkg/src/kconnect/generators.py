"""Topology constructions: the complete-bipartite design and its comparators.

All generators work on ranked nodes ``1..n``: node 1 is the cheapest node
by accumulated cost, node ``n`` the most expensive.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .topology import Topology


class ConnectivityWarning(UserWarning):
    """A construction cannot reach the requested connectivity."""


@dataclass(frozen=True)
class GeneratorParams:
    n: int
    k: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"need at least 2 nodes, got n={self.n}")
        if not 1 <= self.k <= self.n - 1:
            raise ValueError(f"k must satisfy 1 <= k <= n-1, got k={self.k}, n={self.n}")


def _params(n: int, k: int) -> GeneratorParams:
    return GeneratorParams(n, k)


def _warn(message: str) -> str:
    warnings.warn(message, ConnectivityWarning, stacklevel=3)
    return message


def generate_bipartite(n: int, k: int) -> Topology:
    """Complete bipartite graph between ranks ``1..k`` and ``k+1..n``.

    Uses ``k * (n - k)`` links. Its vertex connectivity is ``min(k, n - k)``,
    so for ``k > n // 2`` the result is only ``(n - k)``-connected; a
    :class:`ConnectivityWarning` is issued and recorded on the topology.
    """
    p = _params(n, k)
    edges = [(i, j) for i in range(1, p.k + 1) for j in range(p.k + 1, p.n + 1)]
    notes = []
    if p.k > p.n // 2:
        notes.append(
            _warn(
                f"achieved connectivity {p.n - p.k} < requested {p.k} "
                f"(bipartite design with k > n/2)"
            )
        )
    return Topology(p.n, edges, "bipartite", p.k, warnings=notes)


def generate_sequential(n: int, k: int) -> Topology:
    """Each of the first ``k`` ranks links to every higher rank.

    Link count is ``(n-1) + (n-2) + ... + (n-k)``.
    """
    p = _params(n, k)
    edges = [(i, j) for i in range(1, p.k + 1) for j in range(i + 1, p.n + 1)]
    return Topology(p.n, edges, "sequential", p.k)


def generate_harary(n: int, k: int) -> Topology:
    """Circulant Harary graph with ``ceil(k * n / 2)`` links.

    Nodes sit on a ring. Each links to its ``k // 2`` nearest neighbours on
    either side; odd ``k`` adds diameter chords (``n // 2`` of them for even
    ``n``, ``n // 2 + 1`` for odd ``n``).

    For ``k == 1`` and ``n >= 4`` that link budget is below the ``n - 1``
    any connected graph needs, so the result is disconnected and a
    :class:`ConnectivityWarning` is issued.
    """
    p = _params(n, k)
    n, k = p.n, p.k
    half_k = k // 2
    edges = set()

    def link(a: int, b: int) -> None:
        # ring positions are 0-based; ranks are 1-based
        a, b = a % n + 1, b % n + 1
        edges.add((a, b) if a < b else (b, a))

    for i in range(n):
        for step in range(1, half_k + 1):
            link(i, i + step)
    if k % 2 == 1:
        half_n = n // 2
        chords = half_n if n % 2 == 0 else half_n + 1
        for i in range(chords):
            link(i, i + half_n)
    notes = []
    if k == 1 and n >= 4:
        notes.append(
            _warn(f"{len(edges)} links cannot connect {n} nodes; harary design with k=1 is disconnected")
        )
    return Topology(n, edges, "harary", k, warnings=notes)


def generate_hypercube(k: int) -> Topology:
    """Hypercube on ``2**k`` nodes: ranks whose ``k``-bit codes of
    ``rank - 1`` differ in exactly one bit are linked."""
    if k < 1:
        raise ValueError(f"hypercube dimension must be >= 1, got {k}")
    n = 1 << k
    edges = [(i + 1, (i ^ (1 << b)) + 1) for i in range(n) for b in range(k) if i < i ^ (1 << b)]
    return Topology(n, edges, "hypercube", k)


GENERATORS = {
    "bipartite": generate_bipartite,
    "sequential": generate_sequential,
    "harary": generate_harary,
}


def generate(method: str, n: int | None, k: int) -> Topology:
    """Dispatch by method tag. ``n`` is ignored (but checked) for hypercube."""
    if method == "hypercube":
        if n is not None and n != 1 << k:
            raise ValueError(f"hypercube needs n = 2**k = {1 << k}, got n={n}")
        return generate_hypercube(k)
    if method not in GENERATORS:
        raise ValueError(f"unknown method {method!r}")
    if n is None:
        raise ValueError(f"method {method!r} needs n")
    return GENERATORS[method](n, k)
