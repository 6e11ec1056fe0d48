"""Randomized invariants driven by hypothesis."""

from hypothesis import given, settings
from hypothesis import strategies as st

from cactusguard import Graph, parse_graph, serialize_graph, traversable
from cactusguard.generator import GeneratorSpec, canonical_key, generate


@st.composite
def christmas_cacti(draw):
    n = draw(st.integers(min_value=1, max_value=14))
    seed = draw(st.integers(min_value=0, max_value=2**20))
    ratio = draw(st.floats(min_value=0.0, max_value=1.0))
    return generate(GeneratorSpec(n=n, cycle_ratio=ratio, max_cycle=7, christmas=True, seed=seed))


@settings(max_examples=60, deadline=None)
@given(christmas_cacti())
def test_serialization_round_trip(g):
    assert parse_graph(serialize_graph(g)) == g


@settings(max_examples=40, deadline=None)
@given(christmas_cacti(), st.randoms(use_true_random=False))
def test_canonical_key_is_relabeling_invariant(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    h = Graph.from_edges(g.n, [(min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in g.edges()])
    assert canonical_key(h) == canonical_key(g)


@settings(max_examples=40, deadline=None)
@given(christmas_cacti(), st.data())
def test_traversable_is_symmetric(g, data):
    k = data.draw(st.integers(min_value=1, max_value=min(3, g.n)))
    a = tuple(sorted(data.draw(st.lists(st.integers(0, g.n - 1), min_size=k, max_size=k))))
    b = tuple(sorted(data.draw(st.lists(st.integers(0, g.n - 1), min_size=k, max_size=k))))
    assert traversable(g, a, b) == traversable(g, b, a)
