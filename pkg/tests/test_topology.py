import pytest

from kconnect.topology import (
    Topology,
    TopologyError,
    degree,
    is_connected,
    parse_edgelist,
    remove_nodes,
    to_dot,
    to_edgelist,
)

from conftest import K34_EDGES


def test_degrees_of_k34(k34):
    assert degree(k34, 1) == 4
    assert degree(k34, 7) == 3
    assert sum(degree(k34, v) for v in k34.nodes) == 2 * len(k34.edges)


def test_degree_errors(k34):
    assert degree(Topology(3), 2) == 0
    with pytest.raises(TopologyError):
        degree(k34, 8)


def test_is_connected():
    assert is_connected(Topology(7, K34_EDGES))
    assert not is_connected(Topology(2))
    assert is_connected(Topology(3, [(1, 2), (2, 3)]))
    assert is_connected(Topology(1))
    with pytest.raises(TopologyError):
        is_connected(Topology(0))


def test_remove_nodes(k34):
    rest = remove_nodes(k34, {1, 2, 3})
    assert rest.nodes == (4, 5, 6, 7) and not rest.edges
    assert remove_nodes(k34, set()) == k34
    k24 = remove_nodes(k34, {1})
    assert k24.edges == frozenset((i, j) for i in (2, 3) for j in (4, 5, 6, 7))
    assert all(1 not in e for e in k24.edges)


@pytest.mark.parametrize(
    "edges, fragment",
    [([(1, 1)], "self-loop"), ([(1, 2), (2, 1)], "duplicate"), ([(1, 5)], "outside")],
)
def test_invalid_topologies(edges, fragment):
    with pytest.raises(TopologyError, match=fragment):
        Topology(3, edges)


def test_canonical_storage():
    t = Topology(3, [(3, 1), (2, 1)])
    assert t.sorted_edges() == [(1, 2), (1, 3)]


def test_edgelist_roundtrip(k34):
    text = to_edgelist(k34)
    assert text.splitlines()[:3] == ["7 3 bipartite", "1 4", "1 5"]
    assert parse_edgelist(text) == k34
    assert to_edgelist(parse_edgelist(text)) == text


def test_edgelist_skips_comments():
    t = parse_edgelist("# hello\n3 0 external\n1 2\n# kappa: 1\n")
    assert t.k is None and t.sorted_edges() == [(1, 2)]


@pytest.mark.parametrize("text", ["", "x y z\n", "3 1 external\n1\n", "3 1 external\n1 a\n", "3 1 bogus\n"])
def test_edgelist_errors(text):
    with pytest.raises(TopologyError):
        parse_edgelist(text)


def test_dot_export(k34):
    dot = to_dot(k34, {1: "F", 4: "A"})
    assert dot.startswith("graph G {\n")
    assert '  1 [label="F"];' in dot and "  2;" in dot
    assert "  3 -- 7;" in dot and dot.rstrip().endswith("}")
