import pytest

from cactusguard import (
    DisconnectedGraphError,
    Graph,
    GraphFormatError,
    GraphKind,
    block_cut_tree,
    classify,
    cycle_edges,
    leaf_blocks,
    parse_graph,
    serialize_graph,
)
from cactusguard.generator import random_connected_graph
from conftest import cycle, path


class TestParse:
    def test_triangle(self):
        g = parse_graph("3 3\n0 1\n1 2\n0 2\n")
        assert (g.n, g.m) == (3, 3)
        assert g.adjacency == ((1, 2), (0, 2), (0, 1))

    def test_single_edge(self):
        g = parse_graph("2 1\n0 1\n")
        assert (g.n, g.m) == (2, 1)

    def test_duplicate_edge_rejected(self):
        with pytest.raises(GraphFormatError, match="duplicate"):
            parse_graph("3 3\n0 1\n1 2\n1 2\n")

    def test_self_loop_rejected(self):
        with pytest.raises(GraphFormatError):
            Graph.from_edges(2, [(1, 1)])

    def test_vertex_out_of_range(self):
        with pytest.raises(GraphFormatError, match="out of range"):
            parse_graph("2 1\n0 3\n")

    def test_header_edge_count_mismatch(self):
        with pytest.raises(GraphFormatError, match="declares"):
            parse_graph("3 2\n0 1\n")

    def test_requires_u_less_than_v(self):
        with pytest.raises(GraphFormatError, match="u < v"):
            parse_graph("2 1\n1 0\n")

    def test_comments_and_blank_lines_ignored(self):
        g = parse_graph("# triangle\n3 3\n\n0 1\n# middle\n1 2\n0 2\n")
        assert g.m == 3

    def test_disconnected_accepted_by_parser(self):
        g = parse_graph("4 1\n0 1\n")
        assert not g.is_connected()

    def test_round_trip(self):
        for seed in range(5):
            g = random_connected_graph(9, 4, seed=seed)
            again = parse_graph(serialize_graph(g))
            assert again == g

    def test_round_trip_with_labels(self):
        g = cycle(4)
        text = serialize_graph(g, labels=[10, 11, 12, 13])
        assert parse_graph(text) == g
        assert "# label 0 10" in text


class TestBlockCutTree:
    def test_triangle_single_block(self, triangle):
        bc = block_cut_tree(triangle)
        assert bc.blocks == ((0, 1, 2),)
        assert bc.articulations == ()

    def test_path_three(self):
        bc = block_cut_tree(path(3))
        assert bc.blocks == ((0, 1), (1, 2))
        assert bc.articulations == (1,)
        assert bc.block_articulations == ((1,), (1,))

    def test_bull(self, bull):
        bc = block_cut_tree(bull)
        assert sorted(len(b) for b in bc.blocks) == [2, 2, 3]
        assert bc.articulations == (1, 2)

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedGraphError):
            block_cut_tree(Graph.from_edges(4, [(0, 1), (2, 3)]))

    def test_size_identity_and_tree_shape(self):
        # sum of block sizes = n + sum over articulations of (blocks - 1),
        # and the incidence structure is a tree
        for seed in range(12):
            g = random_connected_graph(8, seed % 5, seed=seed)
            bc = block_cut_tree(g)
            lhs = sum(len(b) for b in bc.blocks)
            rhs = g.n + sum(bc.vertex_blocks[a] - 1 for a in bc.articulations)
            assert lhs == rhs
            incidences = sum(len(x) for x in bc.block_articulations)
            assert incidences == bc.n_blocks + len(bc.articulations) - 1

    def test_leaf_blocks(self, triangle, bull):
        assert leaf_blocks(block_cut_tree(triangle)) == [0]
        assert leaf_blocks(block_cut_tree(path(3))) == [0, 1]
        bc = block_cut_tree(bull)
        leaves = leaf_blocks(bc)
        assert all(len(bc.blocks[b]) == 2 for b in leaves)
        assert len(leaves) == 2


class TestClassify:
    def test_k4_general_with_edge_witness(self, k4):
        cls = classify(k4)
        assert cls.kind is GraphKind.GENERAL
        assert cls.witness_edge is not None

    def test_star_cactus_with_vertex_witness(self, star):
        cls = classify(star)
        assert cls.kind is GraphKind.CACTUS
        assert cls.witness_vertex == 0

    def test_bull_is_christmas(self, bull):
        assert classify(bull).kind is GraphKind.CHRISTMAS_CACTUS

    def test_class_lattice(self):
        for seed in range(10):
            g = random_connected_graph(7, seed % 4, seed=seed)
            cls = classify(g)
            if cls.kind is GraphKind.CHRISTMAS_CACTUS:
                assert cls.witness_edge is None and cls.witness_vertex is None

    def test_cycle_edges(self, bull):
        assert cycle_edges(bull) == {(0, 1), (0, 2), (1, 2)}
        assert cycle_edges(path(4)) == set()
