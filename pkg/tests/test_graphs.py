from __future__ import annotations

import random

import pytest

from kchi.errors import GraphError
from kchi.graphs import Multigraph, alpha_at_most_2, build, components_of
from helpers import cocktail, complete, cycle, path, random_simple


def test_build_triangle():
    g = build(3, [(0, 1), (1, 2), (0, 2)])
    assert g.n == 3 and g.m == 3
    assert g.degrees == (2, 2, 2)
    assert g.is_simple


def test_build_parallel_edges():
    g = build(2, [(0, 1), (0, 1)])
    assert g.degree(0) == 2
    assert g.multiplicity(0, 1) == 2
    assert g.edge_ids_between(1, 0) == (0, 1)
    assert not g.is_simple


def test_build_rejects_loop():
    with pytest.raises(GraphError, match="loop"):
        build(4, [(0, 0)])


def test_build_rejects_out_of_range():
    with pytest.raises(GraphError, match="range"):
        build(3, [(0, 3)])


def test_build_normalizes_endpoint_order():
    g = build(3, [(2, 0)])
    assert g.endpoints(0) == (0, 2)
    assert g.other_end(0, 2) == 0


def test_degree_sum_is_twice_edge_count():
    rng = random.Random(1)
    for _ in range(25):
        g = random_simple(rng.randint(0, 12), rng.random(), rng)
        assert sum(g.degrees) == 2 * g.m


def test_doubled_k3():
    g = complete(3).doubled()
    assert g.m == 6
    assert all(d == 4 for d in g.degrees)
    assert g.origin == (0, 0, 1, 1, 2, 2)


def test_doubled_empty_and_path():
    assert Multigraph(5, []).doubled().m == 0
    assert path(3).doubled().degrees == (2, 4, 2)


def test_doubled_degrees_double():
    rng = random.Random(7)
    for _ in range(20):
        g = random_simple(rng.randint(1, 10), 0.5, rng)
        d = g.doubled()
        assert d.degrees == tuple(2 * x for x in g.degrees)


def test_complement_c5_self():
    c5 = cycle(5)
    co = c5.complement()
    assert sorted(co.degrees) == [2, 2, 2, 2, 2]
    assert co.complement() == c5


def test_complement_k4_empty():
    assert complete(4).complement().m == 0
    assert Multigraph(3, []).complement() == complete(3)


def test_complement_rejects_multigraph():
    with pytest.raises(GraphError, match="simple"):
        build(2, [(0, 1), (0, 1)]).complement()


def test_alpha_examples():
    assert alpha_at_most_2(cycle(5))
    assert not alpha_at_most_2(Multigraph(3, []))
    assert alpha_at_most_2(cocktail(3))  # K6 minus a perfect matching
    assert not alpha_at_most_2(cycle(7))
    assert alpha_at_most_2(complete(1))
    assert alpha_at_most_2(Multigraph(0, []))


def test_components_of_whole_triangle():
    g = complete(3)
    comps = components_of(g, range(3))
    assert len(comps) == 1
    (c,) = comps
    assert c.regular and c.min_degree == 2
    assert c.cycle_parity == "odd"


def test_components_of_path_not_regular():
    g = path(3)
    (c,) = components_of(g, [0, 1])
    assert (c.min_degree, c.max_degree) == (1, 2)
    assert not c.regular
    assert c.cycle_parity is None


def test_components_of_empty_edge_set():
    g = cycle(4)
    comps = components_of(g, [])
    assert len(comps) == 4
    assert all(c.trivial and c.min_degree == 0 for c in comps)


def test_components_parallel_pair_is_even_cycle():
    g = build(2, [(0, 1), (0, 1)])
    (c,) = components_of(g, [0, 1])
    assert c.cycle_parity == "even"


def test_components_rejects_bad_edge_id():
    with pytest.raises(GraphError):
        components_of(path(3), [5])


def test_induced_maps():
    g = cycle(5)
    sub, vmap, emap = g.induced([1, 2, 3])
    assert sub.n == 3 and sub.m == 2
    assert [g.endpoints(e) for e in emap] == [(1, 2), (2, 3)]
    assert vmap == {1: 0, 2: 1, 3: 2}
