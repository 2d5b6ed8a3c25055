import random

import pytest

from kchi.errors import SizeGuardError
from kchi.graphs import Multigraph, alpha_at_most_2
from kchi.oracles import brute_alpha, brute_chi, brute_immersion_exists

from helpers import cocktail, complete, cycle, path, random_simple, star


def petersen() -> Multigraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Multigraph(10, outer + spokes + inner)


class TestBruteChi:
    def test_known_values(self):
        assert brute_chi(cycle(5)) == 3
        assert brute_chi(complete(4)) == 4
        assert brute_chi(petersen()) == 3

    def test_small_families(self):
        assert brute_chi(Multigraph(0, [])) == 0
        assert brute_chi(Multigraph(4, [])) == 1
        assert brute_chi(cycle(6)) == 2
        assert brute_chi(star(5)) == 2
        assert brute_chi(cocktail(3)) == 3

    def test_parallel_edges_are_irrelevant(self):
        assert brute_chi(Multigraph(3, [(0, 1), (0, 1), (1, 2)])) == 2

    def test_size_guard(self):
        with pytest.raises(SizeGuardError):
            brute_chi(Multigraph(13, []))


class TestBruteAlpha:
    def test_known_values(self):
        assert brute_alpha(cycle(5)) == 2
        assert brute_alpha(complete(6)) == 1
        assert brute_alpha(cocktail(3)) == 2

    def test_small_families(self):
        assert brute_alpha(Multigraph(0, [])) == 0
        assert brute_alpha(Multigraph(5, [])) == 5
        assert brute_alpha(star(4)) == 4
        assert brute_alpha(path(4)) == 2
        assert brute_alpha(cycle(8)) == 4

    def test_size_guard(self):
        with pytest.raises(SizeGuardError):
            brute_alpha(Multigraph(21, []))

    def test_agrees_with_alpha2_predicate(self):
        rng = random.Random(4021)
        for _ in range(60):
            g = random_simple(rng.randint(1, 9), rng.random(), rng)
            assert alpha_at_most_2(g) == (brute_alpha(g) <= 2)


class TestBruteImmersionExists:
    def test_known_values(self):
        assert brute_immersion_exists(complete(4), 4) is True
        assert brute_immersion_exists(cycle(5), 3) is True
        assert brute_immersion_exists(path(3), 3) is False

    def test_edge_budget_obstruction(self):
        # five edges cannot carry the six paths a K4 needs
        assert brute_immersion_exists(cycle(5), 4) is False

    def test_tiny_targets(self):
        assert brute_immersion_exists(Multigraph(2, []), 1) is True
        assert brute_immersion_exists(Multigraph(0, []), 0) is True
        assert brute_immersion_exists(star(3), 2) is True

    def test_parallel_edges_carry_separate_paths(self):
        assert brute_immersion_exists(Multigraph(2, [(0, 1)]), 2) is True
        g = Multigraph(3, [(0, 1), (0, 1), (1, 2), (1, 2), (0, 2)])
        assert brute_immersion_exists(g, 3) is True

    def test_size_guards(self):
        with pytest.raises(SizeGuardError):
            brute_immersion_exists(Multigraph(9, []), 2)
        with pytest.raises(SizeGuardError):
            brute_immersion_exists(complete(8), 6)

    def test_chi_corners_always_reachable_when_alpha_small(self):
        # spot-check of the headline claim at oracle scale
        rng = random.Random(993)
        cases = [cycle(5), complete(5), cocktail(3), cocktail(2)]
        while len(cases) < 24:
            g = random_simple(rng.randint(3, 7), 0.4 + 0.5 * rng.random(), rng)
            if alpha_at_most_2(g):
                cases.append(g)
        for g in cases:
            t = brute_chi(g)
            if t <= 5:
                assert brute_immersion_exists(g, t) is True
