import pytest

from cactusguard import Graph, GraphKind, classify
from cactusguard.generator import (
    GeneratorSpec,
    canonical_key,
    enumerate_christmas_cacti,
    generate,
    random_cactus_with_red,
    random_connected_graph,
)


class TestGenerate:
    def test_single_vertex(self):
        g = generate(GeneratorSpec(n=1))
        assert g.n == 1 and g.m == 0

    def test_christmas_class_property(self):
        for seed in range(25):
            g = generate(GeneratorSpec(n=9, christmas=True, seed=seed))
            assert g.n == 9
            assert classify(g).kind is GraphKind.CHRISTMAS_CACTUS

    def test_cactus_class_property(self):
        for seed in range(25):
            g = generate(GeneratorSpec(n=12, christmas=False, cycle_ratio=0.4, seed=seed))
            assert classify(g).kind in (GraphKind.CACTUS, GraphKind.CHRISTMAS_CACTUS)

    def test_deterministic_under_seed(self):
        a = generate(GeneratorSpec(n=40, seed=123))
        b = generate(GeneratorSpec(n=40, seed=123))
        assert a == b
        c = generate(GeneratorSpec(n=40, seed=124))
        assert a != c

    def test_invalid_specs(self):
        with pytest.raises(ValueError):
            generate(GeneratorSpec(n=0))
        with pytest.raises(ValueError):
            generate(GeneratorSpec(n=3, cycle_ratio=1.5))
        with pytest.raises(ValueError):
            generate(GeneratorSpec(n=3, max_cycle=2))


class TestEnumeration:
    def test_counts_up_to_seven(self):
        corpus = enumerate_christmas_cacti(7)
        by_n = {}
        for g in corpus:
            by_n[g.n] = by_n.get(g.n, 0) + 1
        # n=4 verified by hand: path, C4, triangle with pendant (the star is
        # not a Christmas cactus); the rest frozen from the enumerator
        assert by_n == {1: 1, 2: 1, 3: 2, 4: 3, 5: 6, 6: 12, 7: 26}

    def test_all_members_are_christmas_cacti(self):
        for g in enumerate_christmas_cacti(6):
            assert classify(g).kind is GraphKind.CHRISTMAS_CACTUS

    def test_no_isomorphic_duplicates(self):
        corpus = enumerate_christmas_cacti(6)
        keys = {canonical_key(g) for g in corpus}
        assert len(keys) == len(corpus)

    def test_canonical_key_relabeling_invariance(self):
        import random

        rng = random.Random(7)
        for g in enumerate_christmas_cacti(5):
            perm = list(range(g.n))
            rng.shuffle(perm)
            h = Graph.from_edges(g.n, [(min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in g.edges()])
            assert canonical_key(g) == canonical_key(h)


class TestAuxiliaryGenerators:
    def test_random_connected(self):
        for seed in range(10):
            g = random_connected_graph(8, 3, seed=seed)
            assert g.is_connected()

    def test_random_cactus_with_red(self):
        g = random_cactus_with_red(9, seed=1)
        assert g is not None
        from cactusguard import block_cut_tree

        assert any(k >= 3 for k in block_cut_tree(g).vertex_blocks)
