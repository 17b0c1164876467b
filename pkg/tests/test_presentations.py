"""Presentation families, truncation, witness search, the spanning
construction, and the bimorphism-class probe."""

import pytest
from hypothesis import given, settings, strategies as st

from homoglab.errors import BadParams, BudgetExhausted
from homoglab.graphs import (
    Graph,
    complement,
    complete_graph,
    empty_graph,
    independence_number,
    induced_subgraph,
    path_graph,
    star_number,
)
from homoglab.morphisms import canonical_code
from homoglab.presentations import (
    check_property_bounded,
    classify_mb,
    extension_witness,
    make_presentation,
    parse_spec,
    spanning_rado,
    truncate,
)


class TestFamilies:
    def test_rs3_balanced_truncation(self):
        g = truncate(make_presentation("rs", 3), 9)
        expected = Graph(
            9,
            [(0, 4), (0, 5), (0, 7), (0, 8),
             (1, 3), (1, 5), (1, 6), (1, 8),
             (2, 3), (2, 4), (2, 6), (2, 7)]
            + [(u, v) for u in range(3, 9) for v in range(u + 1, 9)],
        )
        assert g == expected

    def test_rs3_smallest_window_is_the_block(self):
        assert truncate(make_presentation("rs", 3), 3) == empty_graph(3)

    def test_rs_rejects_small_n(self):
        with pytest.raises(BadParams):
            make_presentation("rs", 2)

    def test_rado_bit_small_truncation(self):
        g = truncate(make_presentation("rado_bit"), 4)
        assert sorted(g.edges()) == [(0, 1), (0, 3), (1, 2), (1, 3)]

    def test_i_omega_k_omega_truncations_are_clique_unions(self):
        p = make_presentation("i_omega_k_omega")
        for n in (5, 12, 30):
            g = truncate(p, n)
            # cliques are the classes of the reflexive-adjacency relation
            for u in range(n):
                for v in range(u + 1, n):
                    for w in range(v + 1, n):
                        if g.has_edge(u, v) and g.has_edge(v, w):
                            assert g.has_edge(u, w)

    def test_two_way_path_truncations_are_unions_of_paths(self):
        p = make_presentation("two_way_path")
        for n in (1, 4, 9, 16):
            g = truncate(p, n)
            degrees = [g.degree(v) for v in range(n)]
            assert max(degrees, default=0) <= 2
            assert g.edge_count() == max(0, n - 1) or n <= 2
            # union of at most two paths: at most 4 endpoints, no cycles
            assert sum(1 for d in degrees if d <= 1) <= 4

    def test_union_cliques_complement_groups(self):
        p = make_presentation("union_cliques_complement")
        g = truncate(p, 6)
        co = complement(g)
        # groups 0|12|345 appear as cliques of the complement
        assert sorted(co.edges()) == [(1, 2), (3, 4), (3, 5), (4, 5)]

    def test_lex_and_aliases(self):
        p = parse_spec("lex:k_omega,i_omega")
        g = truncate(p, 6)
        assert g.edge_count() > 0
        q = parse_spec("complement_of:i_omega_k_omega")
        assert truncate(q, 8) == complement(truncate(parse_spec("i_omega_k_omega"), 8))

    def test_nested_spec_parsing(self):
        p = parse_spec("complement_of:rs(3)")
        assert truncate(p, 9) == complement(truncate(parse_spec("rs:3"), 9))

    def test_unknown_family(self):
        with pytest.raises(BadParams):
            parse_spec("mystery:7")

    def test_truncate_zero(self):
        assert truncate(make_presentation("rado_bit"), 0) == empty_graph(0)


class TestOracleDiscipline:
    @pytest.mark.parametrize(
        "spec", ["rado_bit", "rs:4", "i_omega_k_omega", "two_way_path",
                  "union_cliques_complement", "lex:two_way_path,k_omega"]
    )
    def test_purity_and_monotonicity(self, spec):
        p = parse_spec(spec)
        g1, g2 = truncate(p, 24), truncate(p, 24)
        assert hash(g1) == hash(g2) and g1 == g2
        big = truncate(p, 31)
        sub, _ = induced_subgraph(big, range(24))
        assert sub == g1

    def test_double_complement_matches(self):
        p = parse_spec("complement_of:complement_of:rado_bit")
        q = parse_spec("rado_bit")
        for n in (7, 19):
            assert truncate(p, n) == truncate(q, n)

    @given(
        st.sampled_from(
            ["rado_bit", "rs:3", "rs:5", "k_omega", "null", "i_omega_k_omega",
             "union_cliques_complement", "two_way_path",
             "complement_of:rs(3)", "lex:two_way_path,null"]
        ),
        st.integers(min_value=0, max_value=200),
        st.integers(min_value=0, max_value=200),
    )
    @settings(max_examples=120)
    def test_symmetric_irreflexive(self, spec, i, j):
        p = parse_spec(spec)
        assert p.adjacent(i, j) == p.adjacent(j, i)
        assert not p.adjacent(i, i)


class TestExtensionWitness:
    def test_rado_basic(self):
        p = make_presentation("rado_bit")
        result = extension_witness(p, [0], [1], 64)
        assert result.status == "found" and result.vertex == 5

    def test_rs_block_cone_proven_absent(self):
        p = make_presentation("rs", 3)
        result = extension_witness(p, [0, 1, 2], [], 10_000)
        assert result.status == "proven_absent"
        assert result.certificate

    def test_trivial_empty_sides(self):
        p = make_presentation("rs", 3)
        assert extension_witness(p, [], [], 16).vertex == 0

    def test_overlapping_sides_rejected(self):
        p = make_presentation("rado_bit")
        with pytest.raises(ValueError):
            extension_witness(p, [1], [1], 8)

    def test_exhausted_is_not_proven(self):
        # No vertex below 9 carries bits 6, 7 and 8, so the least cone over
        # {6, 7, 8} is 0b111000000 = 448; budget 100 merely exhausts.
        p = make_presentation("rado_bit")
        result = extension_witness(p, [6, 7, 8], [], 100)
        assert result.status == "exhausted" and result.certificate is None
        found = extension_witness(p, [6, 7, 8], [], 512)
        assert found.status == "found" and found.vertex == 448

    def test_witness_replays(self):
        p = make_presentation("union_cliques_complement")
        a, b = (0, 2), (4,)
        result = extension_witness(p, a, b, 64)
        assert result.status == "found" and result.vertex == 3
        v = result.vertex
        assert all(p.adjacent(v, x) for x in a)
        assert not any(p.adjacent(v, y) for y in b)

    def test_impossible_mixed_requirement_refuted(self):
        # cocone over {1} forces the witness into the group of 1, but the
        # cone side contains 2 from that same group.
        p = make_presentation("union_cliques_complement")
        result = extension_witness(p, (0, 2), (1,), 64)
        assert result.status == "proven_absent"


class TestPropertyProbes:
    def test_rs_cone_fails_exactly_at_the_block(self):
        p = make_presentation("rs", 3)
        report = check_property_bounded(p, "cone", 3, 6, 512)
        assert [list(f[0]) for f in report.failures] == [[0, 1, 2]]
        assert report.failures[0][1] == "proven_absent"

    def test_rs4_cone_fails_exactly_at_the_block(self):
        p = make_presentation("rs", 4)
        report = check_property_bounded(p, "cone", 4, 8, 512)
        assert [list(f[0]) for f in report.failures] == [[0, 1, 2, 3]]

    def test_rado_probes_pass(self):
        p = make_presentation("rado_bit")
        assert check_property_bounded(p, "cone", 3, 8, 1 << 12).passed
        assert check_property_bounded(p, "cocone", 3, 8, 1 << 12).passed

    def test_union_cliques_cone_probe_passes(self):
        p = make_presentation("union_cliques_complement")
        assert check_property_bounded(p, "cone", 3, 8, 512).passed

    def test_parameter_validation(self):
        p = make_presentation("rado_bit")
        with pytest.raises(ValueError):
            check_property_bounded(p, "cone", 5, 4, 100)
        with pytest.raises(ValueError):
            check_property_bounded(p, "sideways", 2, 4, 100)


class TestSpanningConstruction:
    def test_empty_target(self):
        c = spanning_rado(make_presentation("rado_bit"), 0, 64)
        assert c.placed == () and c.schedule == ()

    def test_rado_replays(self):
        p = make_presentation("rado_bit")
        c = spanning_rado(p, 12, 1 << 16)
        assert set(range(12)) <= set(c.placed)
        assert c.verify(p) == []
        assert c.schedule  # requirements were actually served

    def test_union_cliques_replays(self):
        p = make_presentation("union_cliques_complement")
        c = spanning_rado(p, 12, 1 << 16)
        assert set(range(12)) <= set(c.placed)
        assert c.verify(p) == []

    def test_rs_fails_on_block_pattern(self):
        p = make_presentation("rs", 3)
        with pytest.raises(BudgetExhausted) as exc:
            spanning_rado(p, 80, 1 << 14)
        assert set(exc.value.requirement.cone_over) >= {0, 1, 2}

    def test_selected_edges_subset_of_host(self):
        p = make_presentation("rado_bit")
        c = spanning_rado(p, 16, 1 << 16)
        for u, v in c.selected_edges:
            assert p.adjacent(u, v)

    @given(st.integers(min_value=0, max_value=20), st.sampled_from(
        ["rado_bit", "union_cliques_complement", "complement_of:two_way_path"]
    ))
    @settings(max_examples=25, deadline=None)
    def test_replay_holds_for_any_target(self, n, spec):
        from homoglab.presentations import parse_spec as ps

        p = ps(spec)
        c = spanning_rado(p, n, 1 << 16)
        assert set(range(n)) <= set(c.placed)
        assert c.verify(p) == []

    def test_determinism(self):
        p = make_presentation("rado_bit")
        a = spanning_rado(p, 14, 1 << 16)
        b = spanning_rado(p, 14, 1 << 16)
        assert a == b


class TestClassification:
    @pytest.mark.parametrize(
        "spec,expected",
        [
            ("k_omega", "k_omega"),
            ("null", "null"),
            ("i_omega_k_omega", "i_omega_of_k_omega"),
            ("complement_of:i_omega_k_omega", "k_omega_of_i_omega"),
            ("rado_bit", "rado"),
            ("two_way_path", "not_mb_evidence"),
        ],
    )
    def test_builtins(self, spec, expected):
        report = classify_mb(parse_spec(spec), 512)
        assert report.verdict == expected

    def test_complement_of_the_bit_graph_is_still_rado(self):
        # Degrees of the complement repeat across single doublings (every
        # vertex of [2^k, 2^(k+1)) is bit-adjacent to k), which must not be
        # mistaken for stabilization.
        report = classify_mb(parse_spec("complement_of:rado_bit"), 512)
        assert report.verdict == "rado"

    def test_path_evidence_names_the_stabilized_vertex(self):
        report = classify_mb(parse_spec("two_way_path"), 512)
        assert report.evidence["stabilized"]["kind"] == "degree"
        assert report.evidence["stabilized"]["value"] == 2

    def test_finite_codegree_families_flagged(self):
        # Clique vertices of rs(n) have a single non-neighbour, and the
        # singleton group of the clique-union complement has none at all.
        for spec in ("rs:3", "union_cliques_complement"):
            report = classify_mb(parse_spec(spec), 512)
            assert report.verdict == "not_mb_evidence"
            assert report.evidence["stabilized"]["kind"] == "codegree"

    def test_budget_floor(self):
        with pytest.raises(ValueError):
            classify_mb(parse_spec("rado_bit"), 8)
