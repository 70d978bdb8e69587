import random
import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kconnect.connectivity import (
    brute_force_connectivity,
    is_k_connected,
    local_connectivity,
    validate_cut,
    validate_paths,
    vertex_connectivity,
)
from kconnect.topology import Topology, min_degree

from conftest import complete, cycle
from oracles import kappa as oracle_kappa
from oracles import local_kappa


@pytest.mark.parametrize("s, u", [(1, 4), (1, 5), (4, 5), (1, 2)])
def test_local_connectivity_k34(k34, s, u):
    local = local_connectivity(k34, s, u)
    assert local.value == local_kappa(k34.nodes, k34.edges, s, u)
    assert len(local.paths) == local.value
    assert validate_paths(k34, s, u, local.paths)


def test_local_connectivity_values(k34):
    # s=1, u=5 is adjacent; node 5 has only 3 neighbours so 3 paths is the cap
    assert local_connectivity(k34, 1, 5).value == 3
    assert local_connectivity(k34, 1, 4).value == 3
    assert local_connectivity(k34, 1, 2).value == 4
    assert local_connectivity(Topology(3, [(1, 2), (2, 3)]), 1, 3).value == 1


def test_local_connectivity_errors(k34):
    with pytest.raises(ValueError):
        local_connectivity(k34, 2, 2)
    with pytest.raises(ValueError):
        local_connectivity(k34, 1, 9)


def test_vertex_connectivity_examples(k34):
    report = vertex_connectivity(k34)
    assert report.kappa == 3
    assert report.witness_cut == {1, 2, 3}
    assert validate_cut(k34, report.witness_cut)
    assert validate_paths(k34, *report.pair, report.sample_paths)
    k5 = vertex_connectivity(complete(5))
    assert k5.kappa == 4 and k5.witness_cut is None and len(k5.sample_paths) == 4
    k42 = Topology(6, [(i, j) for i in range(1, 5) for j in (5, 6)])
    assert vertex_connectivity(k42).kappa == 2


def test_disconnected_report():
    t = Topology(5, [(1, 2), (3, 4), (4, 5)])
    report = vertex_connectivity(t)
    assert report.kappa == 0 and report.witness_cut == frozenset()
    assert report.pair == (1, 3)


def test_is_k_connected(k34):
    ok, report = is_k_connected(k34, 3)
    assert ok and len(report.sample_paths) >= 3
    ok, report = is_k_connected(k34, 4)
    assert not ok and report.witness_cut == {1, 2, 3}
    ok, report = is_k_connected(Topology(2), 1)
    assert not ok and report.witness_cut == frozenset()
    with pytest.raises(ValueError):
        is_k_connected(k34, 7)


def test_brute_force_examples(k34):
    assert brute_force_connectivity(k34) == 3
    assert brute_force_connectivity(cycle(7)) == 2
    assert brute_force_connectivity(complete(4)) == 3
    with pytest.raises(ValueError, match="limited to 12"):
        brute_force_connectivity(cycle(13))


def test_vertex_connectivity_needs_two_nodes():
    with pytest.raises(ValueError):
        vertex_connectivity(Topology(1))


def random_graph(rng, n, density):
    edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < density]
    return Topology(n, edges)


@st.composite
def graphs(draw):
    n = draw(st.integers(2, 8))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Topology(n, [p for p, keep in zip(pairs, mask) if keep])


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_matches_independent_oracle(t):
    report = vertex_connectivity(t)
    assert report.kappa == oracle_kappa(t.nodes, t.edges)
    assert report.kappa == brute_force_connectivity(t)
    assert report.kappa <= min_degree(t) <= 2 * len(t.edges) / len(t.nodes)
    if report.witness_cut is not None:
        assert validate_cut(t, report.witness_cut)
        assert len(report.witness_cut) == report.kappa
    assert validate_paths(t, *report.pair, report.sample_paths)
    assert len(report.sample_paths) == report.kappa


@settings(max_examples=60, deadline=None)
@given(graphs(), st.data())
def test_menger_consistency(t, data):
    kappa = vertex_connectivity(t).kappa
    s, u = data.draw(st.sampled_from([(a, b) for a in t.nodes for b in t.nodes if a < b]))
    local = local_connectivity(t, s, u)
    assert local.value == local_kappa(t.nodes, t.edges, s, u)
    assert len(local.paths) == local.value and validate_paths(t, s, u, local.paths)
    if not t.has_edge(s, u):
        assert local.value >= kappa
        assert len(local.cut) == local.value


def test_validators_reject_bad_certificates(k34):
    assert not validate_paths(k34, 4, 5, [(4, 1, 5), (4, 1, 5)])
    assert not validate_paths(k34, 4, 5, [(4, 5)])
    assert not validate_paths(k34, 4, 5, [(4, 1, 6)])
    assert not validate_cut(k34, {1, 2})
    assert not validate_cut(k34, {1, 2, 3, 4, 5, 6})


def test_deterministic_across_runs():
    rng = random.Random(7)
    t = random_graph(rng, 9, 0.5)
    assert vertex_connectivity(t) == vertex_connectivity(t)


def test_desk_scale_speed():
    start = time.perf_counter()
    report = vertex_connectivity(cycle(60))
    assert report.kappa == 2
    assert time.perf_counter() - start < 20
