import math

import pytest

from cactusguard import Graph, GraphKind, NotCactusError, classify, exact_number
from cactusguard.oracle import GameVariant
from cactusguard.reduction import (
    BULL,
    CYCLE,
    ELEMENTARY_FINISH,
    LEAF_CYCLE_REMOVE,
    LEAF_CYCLE_SHRINK,
    LEAF_EDGE_PAIR,
    PATH_THREE,
    PENDANT_ON_CYCLE,
    SINGLE_EDGE,
    SINGLE_VERTEX,
    THREE_PAN,
    ElementaryKind,
    choose_reduction,
    elementary_value,
    is_elementary,
    meden_christmas_cactus,
    residuals,
)
from conftest import cycle, path


class TestElementaryValues:
    @pytest.mark.parametrize(
        "kind,value",
        [
            (ElementaryKind(SINGLE_VERTEX), 1),
            (ElementaryKind(SINGLE_EDGE), 1),
            (ElementaryKind(PATH_THREE), 2),
            (ElementaryKind(CYCLE, length=9), 3),
            (ElementaryKind(THREE_PAN), 2),
            (ElementaryKind(BULL), 3),
        ],
    )
    def test_table(self, kind, value):
        assert elementary_value(kind) == value

    def test_cycle_needs_length(self):
        with pytest.raises(ValueError):
            ElementaryKind(CYCLE)


class TestIsElementary:
    def test_examples(self, bull, three_pan):
        assert is_elementary(cycle(3)) == ElementaryKind(CYCLE, length=3)
        assert is_elementary(three_pan) == ElementaryKind(THREE_PAN)
        assert is_elementary(bull) == ElementaryKind(BULL)
        assert is_elementary(path(3)) == ElementaryKind(PATH_THREE)
        assert is_elementary(Graph.from_edges(1, [])) == ElementaryKind(SINGLE_VERTEX)

    def test_c4_with_pendant_is_not(self):
        g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 3), (1, 4)])
        assert is_elementary(g) is None


class TestChooseReduction:
    def test_c5_with_tail_shrinks_the_cycle(self):
        g = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 5), (5, 6)])
        step = choose_reduction(g)
        assert step.kind == LEAF_CYCLE_SHRINK
        assert step.guard_increment == 1
        assert step.detail["cycle_len"] == 5

    def test_c7_leaf_cycle_removed(self):
        g = Graph.from_edges(10, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (0, 6), (0, 7), (7, 8), (8, 9)])
        step = choose_reduction(g)
        assert step.kind == LEAF_CYCLE_REMOVE
        assert step.guard_increment == 2

    def test_chain_removes_leaf_and_middle(self):
        step = choose_reduction(path(5))
        assert step.kind == LEAF_EDGE_PAIR
        assert step.guard_increment == 1
        assert len(step.removed_vertices) == 2

    def test_elementary_input_rejected(self, bull):
        with pytest.raises(ValueError, match="elementary"):
            choose_reduction(bull)


class TestMeden:
    def test_cycle_law(self):
        for k in range(3, 31):
            guards, _ = meden_christmas_cactus(cycle(k), want_trace=False)
            assert guards == math.ceil(k / 3)

    def test_path_four(self):
        assert meden_christmas_cactus(path(4), want_trace=False)[0] == 2

    def test_bull(self, bull):
        assert meden_christmas_cactus(bull, want_trace=False)[0] == 3

    def test_triangle_bridge_triangle_matches_frozen_oracle(self, triangle_bridge_triangle):
        # oracle EDN computed independently and frozen: 2
        assert meden_christmas_cactus(triangle_bridge_triangle, want_trace=False)[0] == 2

    def test_rejects_non_christmas(self, star, k4):
        for g in (star, k4):
            with pytest.raises(NotCactusError):
                meden_christmas_cactus(g)

    def test_shrink_increment_formula(self):
        # leaf cycle of length not 1 mod 3 contributes ceil(len/3) - 1
        for length in (3, 5, 6, 8, 9, 11, 12):
            ring = [(i, i + 1) for i in range(length - 1)] + [(0, length - 1)]
            tail = [(0, length), (length, length + 1)]
            g = Graph.from_edges(length + 2, ring + tail)
            step = choose_reduction(g)
            assert step.kind == LEAF_CYCLE_SHRINK
            assert step.guard_increment == math.ceil(length / 3) - 1

    def test_remove_increment_formula(self):
        for length in (4, 7, 10, 13):
            ring = [(i, i + 1) for i in range(length - 1)] + [(0, length - 1)]
            tail = [(0, length), (length, length + 1)]
            g = Graph.from_edges(length + 2, ring + tail)
            step = choose_reduction(g)
            assert step.kind == LEAF_CYCLE_REMOVE
            assert step.guard_increment == (length - 1) // 3


class TestTraceInvariants:
    def fixtures(self, bull, tbt):
        return [
            cycle(9),
            path(6),
            bull,
            tbt,
            Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 5), (5, 6)]),
            Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)]),
            Graph.from_edges(10, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (0, 6), (0, 7), (7, 8), (8, 9)]),
        ]

    def test_partition_totals_and_termination(self, bull, triangle_bridge_triangle):
        for g in self.fixtures(bull, triangle_bridge_triangle):
            guards, trace = meden_christmas_cactus(g)
            assert trace.total == guards
            assert sum(s.guard_increment for s in trace.steps) == guards
            assert len(trace.steps) <= g.n
            removed = []
            for s in trace.steps:
                assert s.removed_vertices or s.kind == ELEMENTARY_FINISH
                removed.extend(s.removed_vertices)
            assert sorted(removed) == list(range(g.n))
            assert len(set(removed)) == g.n

    def test_residuals_stay_christmas(self, bull, triangle_bridge_triangle):
        for g in self.fixtures(bull, triangle_bridge_triangle):
            guards, trace = meden_christmas_cactus(g)
            for res, _ in residuals(g, trace):
                assert classify(res).kind is GraphKind.CHRISTMAS_CACTUS

    def test_vertex_count_strictly_decreases(self, triangle_bridge_triangle):
        g = triangle_bridge_triangle
        _, trace = meden_christmas_cactus(g)
        sizes = [g.n] + [g.n - sum(len(s.removed_vertices) for s in trace.steps[: i + 1]) for i in range(len(trace.steps))]
        assert all(a > b for a, b in zip(sizes, sizes[1:]))

    def test_order_independence(self, bull, triangle_bridge_triangle):
        for g in self.fixtures(bull, triangle_bridge_triangle):
            a, _ = meden_christmas_cactus(g)
            b, _ = meden_christmas_cactus(g, fifo=True)
            c, _ = meden_christmas_cactus(g, want_trace=False)
            assert a == b == c

    def test_oracle_equivalence_small(self, bull, triangle_bridge_triangle):
        for g in self.fixtures(bull, triangle_bridge_triangle):
            if g.n <= 9:
                guards, _ = meden_christmas_cactus(g, want_trace=False)
                assert guards == exact_number(g, GameVariant.EDN)

    def test_pendant_step_detail_names_the_chord(self):
        # two pendants keep the C4 from being a leaf cycle, so the pendant
        # reduction fires (on the last-pushed leaf edge)
        g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (0, 3), (1, 4), (3, 5)])
        step = choose_reduction(g)
        assert step.kind == PENDANT_ON_CYCLE
        p, q = step.detail["chord"]
        assert step.detail["chord_real"] is False
        assert step.anchor == p
        assert set(step.removed_vertices) == {3, 5}
        assert {p, q} == {0, 2}
