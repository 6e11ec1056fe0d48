"""Red vertices, red-component contraction, the Christmas cactus
decomposition, and the resulting upper bound for general cactus graphs.

A vertex of a cactus is red when it lies in more than two blocks. Red
connected components are contracted, black components of the contracted
graph are extended by their red neighbors (red vertices are duplicated into
every adjacent black component), and every resulting component is a
Christmas cactus, solvable by the linear reduction. Summing those values and
correcting for the red bookkeeping bounds the m-eternal domination number of
the whole cactus from above.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .graph import (
    BlockCutTree,
    Graph,
    GraphKind,
    NotCactusError,
    block_cut_tree,
    classify,
)
from .reduction import meden_christmas_cactus


class DecompositionError(RuntimeError):
    """A decomposition component failed Christmas cactus validation."""


@dataclass(frozen=True)
class RedColoring:
    red: Tuple[bool, ...]
    red_components: Tuple[Tuple[int, ...], ...]

    @property
    def count(self) -> int:  # R(G)
        return sum(self.red)

    @property
    def component_count(self) -> int:  # Rg(G)
        return len(self.red_components)


@dataclass(frozen=True)
class Component:
    """One Christmas cactus of the decomposition.

    ``original`` maps the component's dense vertex ids back to vertices of
    the contracted graph's originals: red copies carry the id of one original
    red member of their group (the smallest) and are flagged.
    """

    graph: Graph
    original: Tuple[int, ...]
    red_copy: Tuple[bool, ...]

    @property
    def red_copies(self) -> int:
        return sum(self.red_copy)


@dataclass(frozen=True)
class Decomposition:
    components: Tuple[Component, ...]
    contracted: Graph
    contracted_original: Tuple[Tuple[int, ...], ...]  # contracted id -> original vertices
    coloring: RedColoring


def color_red(g: Graph, bc: Optional[BlockCutTree] = None) -> RedColoring:
    """Flag vertices lying in three or more blocks; group them into
    connected components (connected in g)."""
    if bc is None:
        bc = block_cut_tree(g)
    cls = classify(g, bc)
    if cls.kind is GraphKind.GENERAL:
        raise NotCactusError("red coloring needs a cactus, witness edge %r" % (cls.witness_edge,))
    red = tuple(bc.vertex_blocks[v] >= 3 for v in range(g.n))
    seen = [False] * g.n
    comps = []
    for v in range(g.n):
        if not red[v] or seen[v]:
            continue
        stack, comp = [v], []
        seen[v] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.adjacency[u]:
                if red[w] and not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return RedColoring(red=red, red_components=tuple(sorted(comps)))


def contract_red_components(g: Graph, coloring: RedColoring) -> Tuple[Graph, List[int], List[List[int]]]:
    """Contract each red component to a single red vertex.

    Returns the contracted graph, the map original -> contracted id, and the
    reverse map contracted id -> original vertices. Parallel edges merge and
    self-loops drop.
    """
    comp_of = {}
    for i, comp in enumerate(coloring.red_components):
        for v in comp:
            comp_of[v] = i
    mapping = [0] * g.n
    groups: List[List[int]] = [list(c) for c in coloring.red_components]
    next_id = len(groups)
    for v in range(g.n):
        if coloring.red[v]:
            mapping[v] = comp_of[v]
        else:
            mapping[v] = next_id
            groups.append([v])
            next_id += 1
    edges = set()
    for u, w in g.edges():
        a, b = mapping[u], mapping[w]
        if a != b:
            edges.add((min(a, b), max(a, b)))
    contracted = Graph.from_edges(next_id, sorted(edges))
    return contracted, mapping, groups


def christmas_decomposition(g: Graph, coloring: Optional[RedColoring] = None) -> Decomposition:
    """Black components of the contracted graph, each extended by its red
    neighbors; every red group vertex is duplicated into every adjacent
    component. Components are validated as Christmas cacti."""
    if coloring is None:
        coloring = color_red(g)
    contracted, mapping, groups = contract_red_components(g, coloring)
    n_red = len(coloring.red_components)
    is_red = lambda cv: cv < n_red

    seen = [False] * contracted.n
    components = []
    for s in range(contracted.n):
        if is_red(s) or seen[s]:
            continue
        stack, black = [s], []
        seen[s] = True
        while stack:
            u = stack.pop()
            black.append(u)
            for w in contracted.adjacency[u]:
                if not is_red(w) and not seen[w]:
                    seen[w] = True
                    stack.append(w)
        reds = sorted({w for u in black for w in contracted.adjacency[u] if is_red(w)})
        verts = sorted(black) + reds
        local = {cv: i for i, cv in enumerate(verts)}
        edges = []
        for u in verts:
            for w in contracted.adjacency[u]:
                # distinct red groups are never adjacent (they would be one
                # group), so every kept edge has a black endpoint here
                if w in local and u < w:
                    edges.append((local[u], local[w]))
        comp_graph = Graph.from_edges(len(verts), sorted(edges))
        cls = classify(comp_graph)
        if cls.kind is not GraphKind.CHRISTMAS_CACTUS:
            raise DecompositionError(
                "decomposition component is %s, not a Christmas cactus (witness %r)"
                % (cls.kind.value, cls.witness_edge or cls.witness_vertex)
            )
        original = tuple(min(groups[cv]) for cv in verts)
        red_copy = tuple(is_red(cv) for cv in verts)
        components.append(Component(graph=comp_graph, original=original, red_copy=red_copy))
    return Decomposition(
        components=tuple(components),
        contracted=contracted,
        contracted_original=tuple(tuple(grp) for grp in groups),
        coloring=coloring,
    )


def cactus_upper_bound(g: Graph, decomposition: Optional[Decomposition] = None) -> int:
    """Upper bound on the m-eternal domination number of a connected cactus:
    sum over components of (component value - red copies in it), plus the
    number of red vertices plus the number of red components."""
    if decomposition is None:
        decomposition = christmas_decomposition(g)
    total = 0
    for comp in decomposition.components:
        value, _ = meden_christmas_cactus(comp.graph, want_trace=False)
        total += value - comp.red_copies
    coloring = decomposition.coloring
    return total + coloring.count + coloring.component_count
