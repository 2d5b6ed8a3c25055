import random

import pytest

from kchi.errors import GraphError
from kchi.generators import (
    emit_certificate,
    emit_dot,
    emit_edge_list,
    gen_alpha2,
    gen_family,
    gen_multigraph,
    parse_certificate,
    parse_edge_list,
)
from kchi.graphs import Multigraph, alpha_at_most_2
from kchi.immersion import chi_alpha2, faithful_immersion, refine_split, verify_immersion

from helpers import cocktail, complete, cycle, star


def test_alpha2_is_always_alpha2():
    for seed in range(40):
        g = gen_alpha2(1 + seed % 13, (seed % 7) / 6, seed)
        assert alpha_at_most_2(g)


def test_alpha2_edge_cases():
    assert gen_alpha2(1, 0.7, 3).n == 1
    g = gen_alpha2(7, 0.0, 5)  # complement of the empty graph
    assert g.m == 21 and g.is_simple


def test_alpha2_is_deterministic():
    a, b = gen_alpha2(15, 0.6, 99), gen_alpha2(15, 0.6, 99)
    assert a.edges == b.edges
    assert emit_edge_list(a) == emit_edge_list(b)
    assert gen_alpha2(15, 0.6, 100).edges != a.edges


def test_multigraph_respects_multiplicity_cap():
    g = gen_multigraph(12, 0.7, 4, max_mult=3)
    assert all(g.multiplicity(u, v) <= 3 for u, v in set(g.edges))
    assert g.edges == gen_multigraph(12, 0.7, 4, max_mult=3).edges


class TestFamilies:
    def test_named_families(self):
        assert gen_family("star", 4).edges == star(4).edges
        assert gen_family("cycle", 5).edges == cycle(5).edges
        assert gen_family("complete", 6).edges == complete(6).edges
        assert gen_family("cocktail", 3).edges == cocktail(3).edges

    def test_cocktail_is_k6_minus_matching(self):
        g = gen_family("cocktail", 3)
        assert g.m == 12
        assert not any(g.has_edge(2 * i, 2 * i + 1) for i in range(3))

    def test_doubled_wraps_another_family(self):
        g = gen_family("doubled", ("cycle", 5))
        assert g.m == 10 and all(g.multiplicity(u, v) == 2 for u, v in set(g.edges))

    def test_unknown_family(self):
        with pytest.raises(GraphError, match="unknown family"):
            gen_family("hypercube", 3)

    def test_faithful_instances_satisfy_the_premise(self):
        for k in range(1, 7):
            for seed in range(5):
                g = gen_family("faithful", (k, seed))
                chi, col = chi_alpha2(g)
                col = refine_split(g, col)
                assert not col.detached
                imm = faithful_immersion(g, col)
                assert verify_immersion(g, imm, chi, faithful_wrt=col).ok

    def test_faithful_accepts_bare_size(self):
        assert gen_family("faithful", 3).edges == gen_family("faithful", (3, 0)).edges


class TestEdgeListFormat:
    def test_parse_k3(self):
        g = parse_edge_list("3 3\n0 1\n1 2\n0 2\n")
        assert (g.n, sorted(g.edges)) == (3, [(0, 1), (0, 2), (1, 2)])

    def test_round_trip_is_canonical(self):
        text = "3 3\n0 2\n0 1\n1 2\n"
        canon = emit_edge_list(parse_edge_list(text))
        assert canon == "3 3\n0 1\n0 2\n1 2\n"
        assert emit_edge_list(parse_edge_list(canon)) == canon

    def test_round_trip_random(self):
        rng = random.Random(8)
        for _ in range(25):
            g = gen_multigraph(rng.randint(1, 9), rng.random(), rng.randint(0, 999))
            h = parse_edge_list(emit_edge_list(g))
            assert (h.n, sorted(h.edges)) == (g.n, sorted(g.edges))

    def test_comments_and_blank_lines(self):
        g = parse_edge_list("# triangle\n3 3\n\n0 1 # first\n1 2\n0 2\n")
        assert g.m == 3

    def test_loop_rejected(self):
        with pytest.raises(GraphError, match="loop"):
            parse_edge_list("3 1\n0 0\n")

    @pytest.mark.parametrize(
        "text, fragment",
        [
            ("", "line 1"),
            ("3\n", "line 1"),
            ("x 3\n", "column 1"),
            ("3 1\n0 y\n", "column 3"),
            ("3 1\n0 5\n", "outside 0..2"),
            ("3 2\n0 1\n", "promises 2 edges"),
            ("3 1\n0 1\n1 2\n", "promises 1 edges"),
            ("3 1\n0 1 2\n", "exactly two"),
        ],
    )
    def test_diagnostics_carry_positions(self, text, fragment):
        with pytest.raises(GraphError, match=fragment):
            parse_edge_list(text)

    def test_dot_emission(self):
        out = emit_dot(parse_edge_list("3 1\n0 1\n"))
        assert out == "graph g {\n  2;\n  0 -- 1;\n}\n"


class TestCertificateJson:
    def test_round_trip(self):
        from kchi.construct import construct_immersion

        g = cycle(5)
        imm = construct_immersion(g)
        back = parse_certificate(g, emit_certificate(imm))
        assert back.corners == imm.corners and back.paths == imm.paths

    def test_round_trip_with_classes(self):
        g = gen_family("faithful", (3, 1))
        chi, col = chi_alpha2(g)
        col = refine_split(g, col)
        imm = faithful_immersion(g, col)
        back = parse_certificate(g, emit_certificate(imm))
        assert back.faithful_to is not None
        assert back.faithful_to.classes == col.classes
        assert verify_immersion(g, back, chi).ok

    def test_emission_is_deterministic(self):
        from kchi.construct import construct_immersion

        imm = construct_immersion(cocktail(3))
        assert emit_certificate(imm) == emit_certificate(imm)

    def test_bad_json_and_bad_fields(self):
        g = cycle(5)
        with pytest.raises(GraphError, match="not valid JSON"):
            parse_certificate(g, "{nope")
        with pytest.raises(GraphError, match="certificate kind"):
            parse_certificate(g, '{"kind": "tour"}')
        with pytest.raises(GraphError, match="malformed certificate"):
            parse_certificate(g, '{"kind": "immersion", "corners": [0]}')
