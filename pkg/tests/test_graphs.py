"""Graph representation, graph6 codec and structural operations."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fracmatch.graphs import (
    Graph,
    Graph6Error,
    are_isomorphic,
    complement,
    complete_graph,
    cycle_graph,
    degree_stats,
    delete_edges,
    disjoint_union,
    empty_graph,
    from_graph6,
    join,
    path_graph,
    relabel,
    to_graph6,
)

from conftest import random_graph


class TestGraphType:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError, match="self-loop"):
            Graph(2, (0b01, 0b10))

    def test_rejects_asymmetry(self):
        with pytest.raises(ValueError, match="asymmetric"):
            Graph(2, (0b10, 0b00))

    def test_rejects_out_of_range_neighbor(self):
        with pytest.raises(ValueError, match="neighbor index"):
            Graph(2, (0b100, 0b000))

    def test_rejects_bad_vertex_count(self):
        with pytest.raises(ValueError):
            Graph(0, ())
        with pytest.raises(ValueError):
            Graph(65, (0,) * 65)

    def test_edges_roundtrip(self):
        g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        assert g.edges() == [(0, 1), (1, 2), (2, 3)]
        assert Graph.from_edge_mask(4, g.edge_mask()) == g


class TestGraph6:
    def test_decode_empty5(self):
        g = from_graph6("D??")
        assert g.n == 5 and g.edge_count() == 0

    def test_decode_k5(self):
        g = from_graph6("D~{")
        assert g.n == 5 and g.edge_count() == 10

    def test_decode_k3(self):
        assert from_graph6("Bw") == complete_graph(3)

    def test_encode_k3(self):
        assert to_graph6(complete_graph(3)) == "Bw"

    def test_encode_path3(self):
        assert to_graph6(path_graph(3)) == "Bg"

    def test_encode_empty5(self):
        assert to_graph6(empty_graph(5)) == "D??"

    def test_header_variants(self):
        # n = 63 and 64 use the extended ~ header
        for n in (62, 63, 64):
            g = empty_graph(n)
            assert from_graph6(to_graph6(g)) == g

    def test_malformed_header(self):
        with pytest.raises(Graph6Error, match="malformed header"):
            from_graph6("D?")  # truncated payload
        with pytest.raises(Graph6Error, match="alphabet"):
            from_graph6("D??\x19")

    def test_trailing_bits(self):
        # path on 2 vertices is 'A_'; 'A' + char with stray low bits set
        with pytest.raises(Graph6Error, match="trailing bits"):
            from_graph6("A" + chr(63 + 0b000001))

    def test_out_of_range_vertex_count(self):
        with pytest.raises(Graph6Error, match="out of supported range"):
            from_graph6("~?@@")  # extended header, n = 65
        with pytest.raises(Graph6Error, match="out of supported range"):
            from_graph6("?")  # n = 0

    @given(st.data())
    @settings(max_examples=200, deadline=None)
    def test_roundtrip_property(self, data):
        n = data.draw(st.integers(1, 12))
        mask = data.draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
        g = Graph.from_edge_mask(n, mask)
        assert from_graph6(to_graph6(g)) == g

    def test_agrees_with_networkx(self, rng):
        # independent implementation of the same format
        import networkx as nx

        for n in (1, 2, 5, 9, 13, 30, 62, 63, 64):
            g = random_graph(rng, n)
            ref = nx.Graph()
            ref.add_nodes_from(range(n))
            ref.add_edges_from(g.edges())
            encoded = nx.to_graph6_bytes(ref, header=False).decode().strip()
            assert to_graph6(g) == encoded
            assert from_graph6(encoded) == g


class TestOperations:
    def test_complement_k5(self):
        assert complement(complete_graph(5)) == empty_graph(5)

    def test_complement_empty4(self):
        assert complement(empty_graph(4)) == complete_graph(4)

    def test_c5_self_complementary(self):
        c5 = cycle_graph(5)
        assert are_isomorphic(c5, complement(c5))

    def test_complement_involution(self, rng):
        for _ in range(50):
            g = random_graph(rng, rng.randint(1, 10))
            assert complement(complement(g)) == g

    def test_join_star(self):
        star = join(complete_graph(1), empty_graph(4))
        assert degree_stats(star) == (1, 4, [4, 1, 1, 1, 1])

    def test_join_edge_count(self):
        g = join(complete_graph(2), empty_graph(5))
        assert g.edge_count() == 1 + 0 + 10

    def test_join_base_construction(self):
        inner = disjoint_union(complete_graph(2), empty_graph(4))
        g = join(complete_graph(1), inner)
        assert g.n == 7 and g.edge_count() == 7

    def test_join_overflow(self):
        with pytest.raises(ValueError, match="64"):
            join(complete_graph(33), complete_graph(32))

    def test_join_degree_rule(self, rng):
        g = random_graph(rng, 5)
        h = random_graph(rng, 4)
        j = join(g, h)
        assert j.edge_count() == g.edge_count() + h.edge_count() + 20
        for v in range(5):
            assert j.degree(v) == g.degree(v) + 4

    def test_disjoint_union(self):
        g = disjoint_union(complete_graph(2), complete_graph(2))
        assert g.n == 4 and g.edge_count() == 2
        h = disjoint_union(complete_graph(3), empty_graph(2))
        assert h.n == 5 and h.edge_count() == 3

    def test_union_identity_on_empty(self):
        assert disjoint_union(None, complete_graph(4)) == complete_graph(4)

    def test_delete_edges(self):
        g = delete_edges(complete_graph(3), [(0, 1)])
        assert g.edge_count() == 2
        star = join(complete_graph(1), empty_graph(4))
        h = delete_edges(star, [(0, 1)])
        assert degree_stats(h)[0] == 0 and h.edge_count() == 3

    def test_delete_edge_at_degree2_vertex(self):
        g = join(complete_graph(2), empty_graph(5))
        h = delete_edges(g, [(0, 2)])
        assert h.edge_count() == 10 and degree_stats(h)[0] == 1

    def test_delete_absent_edge(self):
        with pytest.raises(ValueError, match="not present"):
            delete_edges(empty_graph(3), [(0, 1)])

    def test_delete_duplicate_edge(self):
        with pytest.raises(ValueError, match="duplicate"):
            delete_edges(complete_graph(3), [(0, 1), (1, 0)])

    def test_degree_stats_c5(self):
        assert degree_stats(cycle_graph(5)) == (2, 2, [2, 2, 2, 2, 2])

    def test_degree_stats_star(self):
        lo, hi, seq = degree_stats(join(complete_graph(1), empty_graph(3)))
        assert (lo, hi) == (1, 3) and sorted(seq) == [1, 1, 1, 3]


class TestIsomorphism:
    def test_different_degree_sequences(self):
        k13 = join(complete_graph(1), empty_graph(3))
        k3_plus = disjoint_union(complete_graph(3), empty_graph(1))
        assert not are_isomorphic(k13, k3_plus)

    def test_same_degrees_not_isomorphic(self):
        # C_6 and 2 triangles are both 2-regular on 6 vertices
        c6 = cycle_graph(6)
        tt = disjoint_union(complete_graph(3), complete_graph(3))
        assert not are_isomorphic(c6, tt)

    @given(st.data())
    @settings(max_examples=100, deadline=None)
    def test_relabel_invariance(self, data):
        n = data.draw(st.integers(2, 9))
        mask = data.draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
        perm = data.draw(st.permutations(range(n)))
        g = Graph.from_edge_mask(n, mask)
        assert are_isomorphic(g, relabel(g, list(perm)))

    def test_equivalence_relation_sample(self, rng):
        graphs = [random_graph(rng, 6) for _ in range(8)]
        for g in graphs:
            assert are_isomorphic(g, g)
        for g in graphs:
            for h in graphs:
                assert are_isomorphic(g, h) == are_isomorphic(h, g)
