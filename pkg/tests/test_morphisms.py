"""Morphism search, endomorphism extension, canonical codes, enumeration."""

from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from homoglab.errors import OrderTooLarge, SeedNotLocalMorphism
from homoglab.graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    lex_product,
    path_graph,
)
from homoglab.morphisms import (
    MorphismConstraints,
    PartialMap,
    canonical_code,
    enumerate_graphs,
    extends_in,
    is_local_homomorphism,
    search_morphism,
    validate_total_map,
)

from conftest import brute_min_code, graph_from_bits


@st.composite
def graphs(draw, max_n=5):
    n = draw(st.integers(min_value=1, max_value=max_n))
    bits = draw(st.integers(min_value=0, max_value=(1 << (n * (n - 1) // 2)) - 1))
    return graph_from_bits(n, bits)


class TestPartialMap:
    def test_duplicate_source_rejected(self):
        with pytest.raises(ValueError):
            PartialMap([(0, 1), (0, 2)])

    def test_normalized(self):
        assert PartialMap([(2, 0), (1, 1)]).pairs == ((1, 1), (2, 0))


class TestSearchMorphism:
    def test_no_hom_onto_smaller_clique(self):
        assert search_morphism(complete_graph(3), complete_graph(2)) is None

    def test_odd_cycle_not_two_colorable(self):
        assert search_morphism(cycle_graph(5), complete_graph(2)) is None

    def test_path_onto_edge_surjective(self):
        got = search_morphism(
            path_graph(3),
            complete_graph(2),
            None,
            MorphismConstraints(surjective=True),
        )
        assert got == [0, 1, 0]

    def test_lexicographically_least_against_enumeration(self):
        a, b = path_graph(4), cycle_graph(4)
        got = search_morphism(a, b)
        best = None
        for f in product(range(b.n), repeat=a.n):
            if all(b.has_edge(f[u], f[v]) for u, v in a.edges()):
                best = list(f) if best is None else min(best, list(f))
        assert got == best

    def test_seed_respected(self):
        seed = PartialMap([(0, 2)])
        got = search_morphism(path_graph(3), cycle_graph(4), seed)
        assert got is not None and got[0] == 2

    def test_inconsistent_seed_gives_none(self):
        seed = PartialMap([(0, 0), (1, 0)])  # edge collapsed to a vertex
        assert search_morphism(path_graph(2), complete_graph(2), seed) is None

    @given(graphs(), graphs())
    @settings(max_examples=40)
    def test_witness_validates(self, a, b):
        for constraints in (
            MorphismConstraints(),
            MorphismConstraints(injective=True),
            MorphismConstraints(surjective=True),
            MorphismConstraints(injective=True, surjective=True, respect_nonedges=True),
        ):
            got = search_morphism(a, b, None, constraints)
            if got is not None:
                assert validate_total_map(a, b, got, constraints)


class TestExtendsIn:
    def test_clique_automorphism_extension(self):
        got = extends_in(complete_graph(4), PartialMap([(0, 3), (2, 1)]), "A")
        assert got is not None and got[0] == 3 and got[2] == 1
        assert sorted(got) == [0, 1, 2, 3]

    def test_p5_gap_map_has_no_extension(self):
        assert extends_in(path_graph(5), PartialMap([(0, 0), (2, 4)]), "H") is None

    def test_p3_fold(self):
        got = extends_in(path_graph(3), PartialMap([(0, 0), (2, 0)]), "H")
        assert got == [0, 1, 0]

    def test_seed_kind_checked(self):
        # {0->0, 2->0} is a local homomorphism but not a monomorphism.
        with pytest.raises(SeedNotLocalMorphism):
            extends_in(path_graph(3), PartialMap([(0, 0), (2, 0)]), "M")
        # An edge mapped to a non-edge is not even a local homomorphism.
        with pytest.raises(SeedNotLocalMorphism):
            extends_in(path_graph(3), PartialMap([(0, 0), (1, 2)]), "H")

    def test_b_equals_a(self):
        cases = [
            (cycle_graph(5), PartialMap([(0, 1)])),
            (path_graph(4), PartialMap([(0, 3), (1, 2)])),
            (disjoint_union(complete_graph(2), complete_graph(2)), PartialMap([(0, 2)])),
            (complete_graph(3), PartialMap([])),
        ]
        for g, f in cases:
            assert (extends_in(g, f, "B") is None) == (extends_in(g, f, "A") is None)

    @staticmethod
    def _check_h_extension_against_enumeration(g):
        homs = [
            f
            for f in product(range(g.n), repeat=g.n)
            if all(g.has_edge(f[u], f[v]) for u, v in g.edges())
        ]
        for size in range(g.n + 1):
            for domain in combinations(range(g.n), size):
                for imgs in product(range(g.n), repeat=size):
                    f = PartialMap(tuple(zip(domain, imgs)))
                    if not is_local_homomorphism(g, g, f):
                        continue
                    searched = extends_in(g, f, "H")
                    exists = any(all(h[u] == t for u, t in f.pairs) for h in homs)
                    assert (searched is not None) == exists
                    if searched is not None:
                        assert tuple(searched) in homs

    def test_h_extension_matches_total_enumeration_exhaustively(self):
        # Every local homomorphism of every graph up to order 4.
        for n in range(1, 5):
            for g in enumerate_graphs(n):
                self._check_h_extension_against_enumeration(g)

    @given(graphs(max_n=5))
    @settings(max_examples=15, deadline=None)
    def test_h_extension_matches_total_enumeration_sampled(self, g):
        self._check_h_extension_against_enumeration(g)


class TestCanonicalCode:
    def test_c4_equals_k2_of_i2(self):
        assert canonical_code(cycle_graph(4)) == canonical_code(
            lex_product(complete_graph(2), empty_graph(2))
        )

    def test_k3_differs_from_p3(self):
        assert canonical_code(complete_graph(3)) != canonical_code(path_graph(3))

    def test_relabeling_invariance(self):
        c5 = cycle_graph(5)
        for perm in ([1, 3, 0, 2, 4], [4, 2, 0, 3, 1], [2, 0, 4, 1, 3]):
            assert canonical_code(c5.relabel(perm)) == canonical_code(c5)

    def test_order_cap(self):
        with pytest.raises(OrderTooLarge):
            canonical_code(empty_graph(11))

    @given(graphs(max_n=5), graphs(max_n=5))
    @settings(max_examples=60)
    def test_complete_invariant_matches_brute_force(self, a, b):
        assert (canonical_code(a) == canonical_code(b)) == (
            brute_min_code(a) == brute_min_code(b)
        )


class TestEnumeration:
    def test_counts_match_brute_force_dedup(self):
        expected = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34}
        for n, count in expected.items():
            codes = set()
            for bits in range(1 << (n * (n - 1) // 2)):
                codes.add(brute_min_code(graph_from_bits(n, bits)))
            assert len(codes) == count
            assert sum(1 for _ in enumerate_graphs(n)) == count

    def test_distinct_codes(self):
        for n in (4, 5, 6):
            codes = [canonical_code(g) for g in enumerate_graphs(n)]
            assert len(codes) == len(set(codes))

    def test_order_cap(self):
        with pytest.raises(OrderTooLarge):
            next(enumerate_graphs(9))

    def test_deterministic_order(self):
        first = [canonical_code(g) for g in enumerate_graphs(5)]
        second = [canonical_code(g) for g in enumerate_graphs(5)]
        assert first == second
