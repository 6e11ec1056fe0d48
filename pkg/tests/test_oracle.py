import pytest

from cactusguard import (
    Attack,
    GameVariant,
    Graph,
    OracleBudgetError,
    attack_set,
    domination_number,
    exact_number,
    solve_safety,
    traversable,
    validate_witness,
)
from cactusguard.generator import random_connected_graph
from conftest import cycle, path


class TestTraversable:
    def test_cycle_shift(self):
        g = cycle(4)
        assert traversable(g, (0, 2), (1, 3))

    def test_too_far(self):
        assert not traversable(cycle(4), (0,), (2,))

    def test_identity(self):
        g = cycle(5)
        assert traversable(g, (0, 2), (0, 2))

    def test_order_mismatch(self):
        with pytest.raises(ValueError):
            traversable(cycle(4), (0,), (0, 1))

    def test_symmetric(self):
        g = random_connected_graph(7, 3, seed=1)
        import itertools

        configs = list(itertools.combinations(range(7), 2))
        for a in configs[:12]:
            for b in configs[:12]:
                assert traversable(g, a, b) == traversable(g, b, a)

    def test_multiset_guards(self):
        g = path(3)
        assert traversable(g, (1, 1), (0, 2))
        assert not traversable(g, (0, 0), (1, 2))


class TestDominationNumber:
    def test_c7(self):
        assert domination_number(cycle(7)) == 3

    def test_k4(self, k4):
        assert domination_number(k4) == 1

    def test_bull(self, bull):
        assert domination_number(bull) == 2

    def test_size_guard(self):
        with pytest.raises(OracleBudgetError):
            domination_number(cycle(25))


class TestSolveSafety:
    def test_one_guard_defends_triangle(self):
        assert solve_safety(cycle(3), 1, GameVariant.EDN) is not None

    def test_one_guard_loses_c4(self):
        assert solve_safety(cycle(4), 1, GameVariant.EDN) is None

    def test_two_guards_defend_c6_with_eviction(self):
        assert solve_safety(cycle(6), 2, GameVariant.EDE) is not None

    def test_budget_guard(self):
        with pytest.raises(OracleBudgetError):
            solve_safety(cycle(12), 4, GameVariant.EDN, budget=10)

    def test_witnesses_validate(self, bull, three_pan):
        for g in (bull, three_pan, cycle(6)):
            for variant in GameVariant:
                order = exact_number(g, variant)
                witness = solve_safety(g, order, variant)
                assert validate_witness(g, witness) == []

    def test_k1_has_no_eviction_moves(self):
        k1 = Graph.from_edges(1, [])
        kinds = {a.kind for a in attack_set(k1, GameVariant.EDE)}
        assert kinds == {"attack"}
        assert exact_number(k1, GameVariant.EDE) == 1


class TestExactNumbers:
    def test_c9(self):
        assert exact_number(cycle(9), GameVariant.EDN) == 3

    def test_bull_all_variants(self, bull):
        assert [exact_number(bull, v) for v in GameVariant] == [3, 3, 3]

    def test_star_edn_two(self, star):
        assert exact_number(star, GameVariant.EDN) == 2

    def test_triangle_bridge_triangle(self, triangle_bridge_triangle):
        # frozen from this oracle before the reduction engine existed
        assert exact_number(triangle_bridge_triangle, GameVariant.EDN) == 2

    def test_chain_on_random_graphs(self):
        for seed in range(15):
            g = random_connected_graph(6, seed % 6, seed=seed)
            gamma = domination_number(g)
            egc = exact_number(g, GameVariant.EGC)
            edn = exact_number(g, GameVariant.EDN)
            ede = exact_number(g, GameVariant.EDE)
            assert gamma <= egc <= edn <= ede

    def test_egc_monotone_in_order(self, bull, three_pan):
        for g in (bull, three_pan, cycle(5), path(4)):
            k = exact_number(g, GameVariant.EGC)
            assert solve_safety(g, k + 1, GameVariant.EGC) is not None

    def test_edn_monotone_on_fixtures(self, bull, three_pan):
        for g in (bull, three_pan, cycle(5), path(4)):
            k = exact_number(g, GameVariant.EDN)
            if k + 1 <= g.n:
                assert solve_safety(g, k + 1, GameVariant.EDN) is not None

    def test_ede_is_not_monotone(self, bull):
        # with n-1 guards an edge eviction demands two empty vertices but
        # only one exists, so more guards can lose: the search in
        # exact_number must not assume monotonicity, and does not
        assert exact_number(bull, GameVariant.EDE) == 3
        assert solve_safety(bull, 4, GameVariant.EDE) is None
