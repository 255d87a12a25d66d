import random
from math import comb

import pytest

from seidelspec import (
    CapExceededError,
    EmptyPartitionError,
    Graph,
    GraphFormatError,
    IntMatrix,
    Partition,
    charpoly_oracle,
    complete_multipartite,
    enumerate_graphs,
    graph6_decode,
    graph6_encode,
    graph_isomorphic,
    normalize_at,
    partitions_of,
    recognize_complete_multipartite,
    seidel_matrix,
    switch,
    switching_equivalent,
)

P3 = Graph(3, [(0, 1), (1, 2)])
K3 = Graph(3, [(0, 1), (0, 2), (1, 2)])


def random_graph(rng, n):
    return Graph.from_mask(n, rng.getrandbits(comb(n, 2)))


def random_subset(rng, n):
    return [v for v in range(n) if rng.getrandbits(1)]


def brute_force_equivalent(g, h):
    """Try every switch set (vertex 0 fixed outside) and isomorphism."""
    if g.n != h.n:
        return False
    for umask in range(1 << max(g.n - 1, 0)):
        u = [v + 1 for v in range(g.n - 1) if (umask >> v) & 1]
        if graph_isomorphic(switch(g, u), h) is not None:
            return True
    return False


class TestSeidelMatrix:
    def test_empty_graph_is_all_plus_one(self):
        m = seidel_matrix(Graph(3))
        assert m == IntMatrix([[0, 1, 1], [1, 0, 1], [1, 1, 0]])

    def test_complete_graph_is_all_minus_one(self):
        assert seidel_matrix(K3) == IntMatrix([[0, -1, -1], [-1, 0, -1], [-1, -1, 0]])

    def test_path(self):
        assert seidel_matrix(P3) == IntMatrix([[0, -1, 1], [-1, 0, -1], [1, -1, 0]])


class TestSwitch:
    def test_empty_set_is_identity(self):
        g = Graph(4, [(0, 1), (2, 3)])
        assert switch(g, []) == g

    def test_star_center_switch_removes_all_edges(self):
        # switching the center of a 2-leaf star deletes both cut edges and
        # the non-edge between the leaves stays put
        star = Graph(3, [(0, 1), (0, 2)])
        assert switch(star, [0]) == Graph(3)

    def test_empty_graph_switch_gives_complete_bipartite(self):
        n1, n2 = 3, 2
        g = switch(Graph(n1 + n2), range(n1))
        assert g == complete_multipartite([n1, n2])

    def test_involution_and_complement_set(self):
        rng = random.Random(21)
        for _ in range(50):
            n = rng.randint(1, 8)
            g = random_graph(rng, n)
            u = random_subset(rng, n)
            assert switch(switch(g, u), u) == g
            rest = [v for v in range(n) if v not in u]
            assert switch(g, u) == switch(g, rest)

    def test_invalid_vertex(self):
        with pytest.raises(IndexError):
            switch(Graph(3), [3])

    def test_spectral_invariance(self):
        rng = random.Random(22)
        for _ in range(40):
            n = rng.randint(2, 8)
            g = random_graph(rng, n)
            h = switch(g, random_subset(rng, n))
            assert charpoly_oracle(seidel_matrix(g)) == charpoly_oracle(seidel_matrix(h))


class TestNormalization:
    def test_base_vertex_isolated(self):
        rng = random.Random(23)
        for _ in range(30):
            n = rng.randint(1, 8)
            g = random_graph(rng, n)
            v = rng.randrange(n)
            assert normalize_at(g, v).degree(v) == 0

    def test_invariant_under_pre_switching(self):
        rng = random.Random(24)
        for _ in range(30):
            n = rng.randint(1, 8)
            g = random_graph(rng, n)
            v = rng.randrange(n)
            u = random_subset(rng, n)
            assert normalize_at(switch(g, u), v) == normalize_at(g, v)


class TestIsomorphism:
    def test_path_relabeled(self):
        h = P3.relabel((2, 0, 1))
        perm = graph_isomorphic(P3, h)
        assert perm is not None
        assert P3.relabel(perm) == h

    def test_different_edge_counts(self):
        assert graph_isomorphic(K3, Graph(3)) is None

    def test_degree_sequences_differ(self):
        c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        star = Graph(4, [(0, 1), (0, 2), (0, 3)])
        assert graph_isomorphic(c4, star) is None

    def test_pinned_pair(self):
        h = P3.relabel((2, 0, 1))
        # vertex 1 is the middle of P3, image must be its middle (0)
        assert graph_isomorphic(P3, h, pinned=(1, 0)) is not None
        assert graph_isomorphic(P3, h, pinned=(1, 2)) is None


class TestSwitchingEquivalent:
    def test_reflexive(self):
        rng = random.Random(25)
        for _ in range(20):
            g = random_graph(rng, rng.randint(1, 7))
            w = switching_equivalent(g, g)
            assert w is not None
            assert w.apply(g) == g

    def test_complete_bipartite_and_empty(self):
        g = complete_multipartite([2, 2])
        h = Graph(4)
        w = switching_equivalent(g, h)
        assert w is not None
        assert w.apply(g) == h
        assert set(w.subset) in ({0, 1}, {2, 3})

    def test_distinct_spectra_not_equivalent(self):
        assert switching_equivalent(
            complete_multipartite([2, 1, 1]), complete_multipartite([3, 1])
        ) is None

    def test_symmetric_with_witness_replay(self):
        rng = random.Random(26)
        for _ in range(30):
            n = rng.randint(1, 6)
            g = random_graph(rng, n)
            h = switch(g, random_subset(rng, n)).relabel(
                tuple(rng.sample(range(n), n))
            )
            w = switching_equivalent(g, h)
            assert w is not None and w.apply(g) == h
            back = switching_equivalent(h, g)
            assert back is not None and back.apply(h) == g

    def test_agrees_with_brute_force(self):
        rng = random.Random(27)
        for _ in range(40):
            n = rng.randint(1, 6)
            g = random_graph(rng, n)
            h = random_graph(rng, n)
            assert (switching_equivalent(g, h) is not None) == brute_force_equivalent(g, h)

    def test_label_preserving_flag(self):
        g = complete_multipartite([2, 2])
        h = switch(g, [0])
        assert switching_equivalent(g, h, relabel=False) is not None
        # a relabeled switch need not be a plain switch
        rot = switch(g, [0]).relabel((1, 2, 3, 0))
        plain = switching_equivalent(g, rot, relabel=False)
        full = switching_equivalent(g, rot)
        assert full is not None
        if plain is not None:
            assert plain.apply(g) == rot

    def test_orders_differ(self):
        assert switching_equivalent(Graph(3), Graph(4)) is None

    def test_cap(self):
        with pytest.raises(CapExceededError):
            switching_equivalent(Graph(11), Graph(11))


class TestCompleteMultipartite:
    def test_all_singletons_is_complete(self):
        assert complete_multipartite([1, 1, 1]) == K3

    def test_single_part_is_empty(self):
        assert complete_multipartite([5]) == Graph(5)

    def test_two_by_two_is_four_cycle(self):
        g = complete_multipartite([2, 2])
        assert sorted(g.edges()) == [(0, 2), (0, 3), (1, 2), (1, 3)]

    def test_empty_partition(self):
        with pytest.raises(EmptyPartitionError):
            complete_multipartite([])


class TestRecognize:
    def test_four_cycle(self):
        c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        assert recognize_complete_multipartite(c4) == Partition([2, 2])

    def test_path_three(self):
        assert recognize_complete_multipartite(P3) == Partition([2, 1])

    def test_path_four_is_not(self):
        p4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
        assert recognize_complete_multipartite(p4) is None

    def test_roundtrip_all_partitions(self):
        for n in range(1, 13):
            for p in partitions_of(n):
                assert recognize_complete_multipartite(complete_multipartite(p)) == p


class TestEnumeration:
    @pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 8), (4, 64)])
    def test_counts(self, n, count):
        graphs = list(enumerate_graphs(n))
        assert len(graphs) == count
        assert len(set(graphs)) == count

    def test_cap(self):
        with pytest.raises(CapExceededError):
            next(enumerate_graphs(8))


class TestGraph6:
    def test_known_strings(self):
        assert graph6_encode(complete_multipartite([1, 1, 1, 1])) == "C~"
        assert graph6_encode(Graph(5)) == "D??"
        assert graph6_encode(complete_multipartite([2, 2])) == "C]"

    def test_decode_known(self):
        g = graph6_decode("C]")
        assert g == complete_multipartite([2, 2])

    def test_header_prefix(self):
        assert graph6_decode(">>graph6<<C~") == complete_multipartite([1, 1, 1, 1])

    def test_roundtrip_exhaustive_small(self):
        for n in range(0, 6):
            for g in enumerate_graphs(n):
                assert graph6_decode(graph6_encode(g)) == g

    def test_bad_inputs(self):
        with pytest.raises(GraphFormatError):
            graph6_decode("")
        with pytest.raises(GraphFormatError):
            graph6_decode("C")  # truncated body
        with pytest.raises(GraphFormatError):
            graph6_decode("~???")  # long-order form unsupported
        with pytest.raises(GraphFormatError):
            graph6_decode("B" + chr(63 + 1))  # nonzero padding bit


class TestGraphBasics:
    def test_self_loop_rejected(self):
        with pytest.raises(ValueError):
            Graph(3, [(1, 1)])

    def test_oversized_order_rejected(self):
        with pytest.raises(CapExceededError):
            Graph(65)

    def test_complement_involution(self):
        rng = random.Random(28)
        for _ in range(20):
            g = random_graph(rng, rng.randint(0, 8))
            assert g.complement().complement() == g

    def test_induced(self):
        g = complete_multipartite([2, 1])
        sub = g.induced([0, 2])
        assert sorted(sub.edges()) == [(0, 1)]
