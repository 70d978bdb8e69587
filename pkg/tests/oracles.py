"""Independent reference computations used to freeze expected values.

Nothing here imports kconnect; graphs are plain ``(nodes, edges)`` pairs.
"""

from itertools import combinations


def row_sums(labels, rows):
    return {label: sum(row) for label, row in zip(labels, rows)}


def stable_rank(labels, totals):
    keyed = sorted((totals[label], pos, label) for pos, label in enumerate(labels))
    return {label: rank for rank, (_, _, label) in enumerate(keyed, start=1)}


def _connected(nodes, edges):
    nodes = set(nodes)
    if not nodes:
        return False
    start = min(nodes)
    reached = {start}
    changed = True
    while changed:
        changed = False
        for a, b in edges:
            if a in nodes and b in nodes and (a in reached) != (b in reached):
                reached |= {a, b}
                changed = True
    return reached == nodes


def connected(nodes, edges):
    return _connected(nodes, edges)


def kappa(nodes, edges):
    """Smallest removal set that disconnects at least two survivors."""
    nodes = sorted(nodes)
    for size in range(len(nodes) - 1):
        for cut in combinations(nodes, size):
            rest = set(nodes) - set(cut)
            if not _connected(rest, edges):
                return size
    return len(nodes) - 1


def _separates(nodes, edges, s, u, cut):
    rest = set(nodes) - set(cut)
    reached = {s}
    changed = True
    while changed:
        changed = False
        for a, b in edges:
            if a in rest and b in rest and (a in reached) != (b in reached):
                reached |= {a, b}
                changed = True
    return u not in reached


def local_kappa(nodes, edges, s, u):
    """Max internally disjoint s-u paths via Menger, by enumerating separators.

    For an adjacent pair the direct link is one path and the rest is the
    separator size in the graph without that link.
    """
    direct = any({a, b} == {s, u} for a, b in edges)
    others = [(a, b) for a, b in edges if {a, b} != {s, u}]
    inner = [v for v in sorted(nodes) if v not in (s, u)]
    for size in range(len(inner) + 1):
        for cut in combinations(inner, size):
            if _separates(nodes, others, s, u, cut):
                return size + direct
    raise AssertionError("unreachable: removing every inner node separates s and u")


def survival_fraction_nodes(nodes, edges, f):
    """(survivors, total) over all f-subsets of failed nodes."""
    ok = total = 0
    for failed in combinations(sorted(nodes), f):
        total += 1
        ok += _connected(set(nodes) - set(failed), edges)
    return ok, total
