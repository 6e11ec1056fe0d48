"""Graph generators: random (Christmas) cacti, random connected graphs, and
the exhaustive small Christmas cactus corpus used by the verification
harness."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterable, List, Optional

from .graph import Graph, GraphKind, block_cut_tree, classify


@dataclass(frozen=True)
class GeneratorSpec:
    n: int
    cycle_ratio: float = 0.6
    max_cycle: int = 9
    christmas: bool = True
    seed: int = 0

    def validate(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not (0.0 <= self.cycle_ratio <= 1.0):
            raise ValueError("cycle_ratio must lie in [0, 1]")
        if self.max_cycle < 3:
            raise ValueError("max_cycle must be >= 3")


def generate(spec: GeneratorSpec) -> Graph:
    """Connected cactus of the requested class, built by attaching edge or
    cycle blocks at eligible vertices. Deterministic under the seed."""
    spec.validate()
    rng = random.Random(spec.seed)
    n, edges = 1, []
    # blocks per vertex; a Christmas cactus allows at most two
    bcount = [0]
    eligible = [0]
    while n < spec.n:
        j = rng.randrange(len(eligible))
        v = eligible[j]
        room = spec.n - n
        want_cycle = room >= 2 and rng.random() < spec.cycle_ratio
        if want_cycle:
            length = rng.randint(3, min(spec.max_cycle, room + 1))
            ring = [v] + list(range(n, n + length - 1))
            for i in range(length - 1):
                bcount.append(1)
                eligible.append(n + i)
            for i in range(length):
                a, b = ring[i], ring[(i + 1) % length]
                edges.append((min(a, b), max(a, b)))
            n += length - 1
        else:
            edges.append((v, n))
            bcount.append(1)
            eligible.append(n)
            n += 1
        bcount[v] += 1
        if spec.christmas and bcount[v] >= 2:
            # swap-pop: appends never shift index j, so v is still there
            eligible[j] = eligible[-1]
            eligible.pop()
    g = Graph.from_edges(n, edges)
    cls = classify(g)
    want = GraphKind.CHRISTMAS_CACTUS if spec.christmas else GraphKind.CACTUS
    if spec.christmas and cls.kind is not want:
        raise AssertionError("generator produced %s for a christmas spec" % cls.kind)
    return g


def random_connected_graph(n: int, extra_edges: int, seed: int) -> Graph:
    """Connected graph of no particular class: a random spanning tree plus
    uniformly chosen extra edges."""
    rng = random.Random(seed)
    edges = set()
    for v in range(1, n):
        u = rng.randrange(v)
        edges.add((u, v))
    candidates = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    rng.shuffle(candidates)
    for e in candidates[:extra_edges]:
        edges.add(e)
    return Graph.from_edges(n, sorted(edges))


def _vertex_signatures(g: Graph):
    return [
        (len(g.adjacency[v]), tuple(sorted(len(g.adjacency[w]) for w in g.adjacency[v])))
        for v in range(g.n)
    ]


def canonical_key(g: Graph):
    """Isomorphism-invariant key: the minimal edge tuple over relabelings
    that respect vertex signatures. Exact for the sizes used here."""
    sig = _vertex_signatures(g)
    classes = {}
    for v in range(g.n):
        classes.setdefault(sig[v], []).append(v)
    ordered = sorted(classes.items())
    new_of_class = []
    base = 0
    for _, members in ordered:
        new_of_class.append(range(base, base + len(members)))
        base += len(members)
    best = None
    for combo in product(*(permutations(members) for _, members in ordered)):
        mapping = {}
        for placed, olds in zip(new_of_class, combo):
            for new, old in zip(placed, olds):
                mapping[old] = new
        relabeled = tuple(sorted(tuple(sorted((mapping[u], mapping[v]))) for u, v in g.edges()))
        if best is None or relabeled < best:
            best = relabeled
    return (g.n, best)


def enumerate_christmas_cacti(max_n: int) -> List[Graph]:
    """All connected Christmas cacti with up to max_n vertices, one per
    isomorphism class, grown by attaching blocks to every smaller cactus."""
    start = Graph.from_edges(1, [])
    seen = {canonical_key(start)}
    by_n = {1: [start]}
    for n in range(1, max_n):
        for g in by_n.get(n, []):
            bc = block_cut_tree(g)
            for v in range(g.n):
                if bc.vertex_blocks[v] >= 2:
                    continue
                for extra in _attachments(g, v, max_n - n):
                    key = canonical_key(extra)
                    if key not in seen:
                        seen.add(key)
                        by_n.setdefault(extra.n, []).append(extra)
    out = []
    for n in sorted(by_n):
        out.extend(by_n[n])
    return out


def _attachments(g: Graph, v: int, room: int) -> Iterable[Graph]:
    edges = g.edges()
    if room >= 1:
        yield Graph.from_edges(g.n + 1, edges + [(v, g.n)])
    for length in range(3, room + 2):
        ring = [v] + list(range(g.n, g.n + length - 1))
        cyc = [(min(ring[i], ring[(i + 1) % length]), max(ring[i], ring[(i + 1) % length])) for i in range(length)]
        yield Graph.from_edges(g.n + length - 1, edges + cyc)


def random_christmas_corpus(count: int, n_range, seed: int, cycle_ratio: float = 0.6, max_cycle: int = 9):
    """Seeded batch of random Christmas cacti with n drawn from n_range."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.choice(list(n_range))
        out.append(generate(GeneratorSpec(n=n, cycle_ratio=cycle_ratio, max_cycle=max_cycle, christmas=True, seed=rng.randrange(2**31))))
    return out


def random_cactus_with_red(n: int, seed: int, max_tries: int = 200) -> Optional[Graph]:
    """A random connected cactus on n vertices containing a red vertex (a
    vertex in at least three blocks), or None if the budget runs out."""
    rng = random.Random(seed)
    for _ in range(max_tries):
        g = generate(GeneratorSpec(n=n, cycle_ratio=rng.uniform(0.2, 0.8), max_cycle=min(6, n), christmas=False, seed=rng.randrange(2**31)))
        bc = block_cut_tree(g)
        if any(k >= 3 for k in bc.vertex_blocks):
            return g
    return None
