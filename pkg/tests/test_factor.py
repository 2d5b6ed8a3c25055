from __future__ import annotations

import random

import pytest

from kchi.errors import PremiseError, SizeGuardError
from kchi.factor import (
    DeficiencyPair,
    brute_force_deficiency,
    check_factor_properties,
    deficiency,
    max_deficiency_pair,
    max_f_bounded_subgraph,
)
from kchi.graphs import Multigraph
from helpers import complete, cycle, path, random_multigraph, random_simple, star

F2 = lambda v: 2  # noqa: E731 — the degree bound used throughout §2


def test_deficiency_doubled_star():
    g = star(3).doubled()
    assert deficiency(g, F2, {0}, {1, 2, 3}) == 6 - 2 + 0 - 0 == 4


def test_deficiency_empty_pair_is_zero():
    for g in (cycle(5).doubled(), complete(4).doubled(), Multigraph(3, [])):
        assert deficiency(g, F2, (), ()) == 0


def test_deficiency_doubled_edge_one_endpoint():
    g = complete(2).doubled()
    assert deficiency(g, F2, (), {0}) == 2 - 0 + 0 - 2 == 0


def test_deficiency_rejects_overlap():
    with pytest.raises(PremiseError, match="overlap"):
        deficiency(cycle(3), F2, {0}, {0, 1})


def test_deficiency_parity_term():
    # lone triangle with f ≡ 1: the component itself has odd f-sum,
    # so q(∅, ∅) = 1
    assert deficiency(complete(3), lambda v: 1, (), ()) == 1


def test_max_pair_doubled_star():
    pair = max_deficiency_pair(star(3).doubled())
    assert pair.s == {0}
    assert pair.t == {1, 2, 3}
    assert pair.value == 4
    assert pair.minimal


def test_max_pair_doubled_c5_and_k2():
    for g in (cycle(5).doubled(), complete(2).doubled()):
        pair = max_deficiency_pair(g)
        assert (pair.s, pair.t, pair.value) == (frozenset(), frozenset(), 0)


def test_max_pair_rejects_odd_multiplicity():
    with pytest.raises(PremiseError, match="multiplicity"):
        max_deficiency_pair(cycle(3))


def test_subgraph_doubled_star():
    g = star(3).doubled()
    h, pair = max_f_bounded_subgraph(g)
    assert len(h.two_cycles) == 1 and not h.odd_cycles
    tc = h.two_cycles[0]
    assert tc.u == 0 and tc.v in {1, 2, 3}
    assert h.degree_sum() == 4 == 2 * g.n - pair.value
    assert check_factor_properties(g, h, pair) == []


def test_subgraph_doubled_c5():
    g = cycle(5).doubled()
    h, pair = max_f_bounded_subgraph(g)
    assert not h.two_cycles
    assert len(h.odd_cycles) == 1 and len(h.odd_cycles[0]) == 5
    assert h.degree_sum() == 10
    assert check_factor_properties(g, h, pair) == []


def test_subgraph_doubled_k2_and_k3():
    h, pair = max_f_bounded_subgraph(complete(2).doubled())
    assert len(h.two_cycles) == 1 and h.degree_sum() == 4

    g3 = complete(3).doubled()
    h3, pair3 = max_f_bounded_subgraph(g3)
    assert pair3.value == 0 and h3.degree_sum() == 6
    assert check_factor_properties(g3, h3, pair3) == []


def test_subgraph_doubled_p3():
    g = path(3).doubled()
    h, pair = max_f_bounded_subgraph(g)
    assert pair.value == 2
    assert h.degree_sum() == 4
    assert check_factor_properties(g, h, pair) == []


def test_brute_examples():
    assert brute_force_deficiency(star(3).doubled(), F2).value == 4
    assert brute_force_deficiency(complete(3).doubled(), F2).value == 0
    lone = Multigraph(1, [])
    pair = brute_force_deficiency(lone, F2)
    # a single isolated vertex is its own maximally deficient T
    assert (pair.s, pair.t, pair.value) == (frozenset(), frozenset({0}), 2)
    assert deficiency(lone, F2, pair.s, pair.t) == pair.value


def test_brute_size_guard():
    with pytest.raises(SizeGuardError):
        brute_force_deficiency(Multigraph(15, []), F2)


def test_brute_general_matches_even_path():
    from kchi.factor import _brute_general

    rng = random.Random(99)
    for _ in range(30):
        g = random_multigraph(rng.randint(1, 6), 1, 0.5, rng).doubled()
        fast = brute_force_deficiency(g, F2)
        general = _brute_general(g, [2] * g.n)
        assert fast.value == general.value
        assert (fast.s, fast.t) == (general.s, general.t)


def test_brute_odd_f():
    # f ≡ 1 on a triangle exercises the parity term q
    g = complete(3)
    pair = brute_force_deficiency(g, lambda v: 1)
    assert pair.value == deficiency(g, lambda v: 1, pair.s, pair.t)
    assert pair.value >= deficiency(g, lambda v: 1, (), ())
    assert pair.value >= deficiency(g, lambda v: 1, (), {0})


def test_solver_agrees_with_brute_on_random_doubled_graphs():
    rng = random.Random(4242)
    for trial in range(120):
        base = random_multigraph(rng.randint(1, 8), rng.randint(1, 2), 0.45, rng)
        g = base.doubled()
        pair = max_deficiency_pair(g)
        brute = brute_force_deficiency(g, F2)
        assert pair.value == brute.value, (trial, base.edges)
        h, pair2 = max_f_bounded_subgraph(g)
        assert pair2 == pair
        problems = check_factor_properties(g, h, pair2)
        assert problems == [], (trial, base.edges, problems)


def test_lovasz_inequality_sampled():
    rng = random.Random(31337)
    for _ in range(60):
        base = random_simple(rng.randint(2, 9), 0.5, rng)
        g = base.doubled()
        h, pair = max_f_bounded_subgraph(g)
        for _ in range(12):
            verts = list(range(g.n))
            rng.shuffle(verts)
            k1 = rng.randint(0, g.n)
            k2 = rng.randint(0, g.n - k1)
            s, t = verts[:k1], verts[k1 : k1 + k2]
            assert h.degree_sum() <= 2 * g.n - deficiency(g, F2, s, t)
        # equality at the returned witness pair
        assert h.degree_sum() == 2 * g.n - deficiency(g, F2, pair.s, pair.t)


def test_empty_and_edgeless_graphs():
    g = Multigraph(4, [])
    h, pair = max_f_bounded_subgraph(g)
    assert pair.t == frozenset(range(4)) and pair.value == 8
    assert h.degree_sum() == 0
    assert check_factor_properties(g, h, pair) == []

    g0 = Multigraph(0, [])
    h0, pair0 = max_f_bounded_subgraph(g0)
    assert pair0.value == 0 and h0.degree_sum() == 0
