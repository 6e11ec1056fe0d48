"""Linear-time m-eternal domination of Christmas cactus graphs.

The solver runs reductions over block sizes and incidences of the block-cut
tree, never rebuilding the graph, so a computation is O(n + m). Each
reduction removes a leaf feature:

  LeafCycleShrink    leaf cycle of length != 1 (mod 3): collapses to a
                     pendant edge, +ceil(len/3) - 1 guards
  LeafCycleRemove    leaf cycle of length == 1 (mod 3): interior removed,
                     +(len-1)/3 guards
  LeafEdgePair       leaf vertex whose neighbor has degree 2: both removed,
                     +1 guard
  PendantOnCycle     leaf vertex attached to a cycle vertex: both removed,
                     the cycle closes over a chord, +1 guard
  ElementaryFinish   the residual is elementary (vertex, edge, path on three
                     vertices, cycle, bull, or 3-pan): its known value

Reductions are chosen in that priority order, with pendants on triangles
deferred until a far corner of the triangle is bare or carries just a leaf
(the leaf 3-pan / leaf bull shapes). Any order yields the same count; this
order guarantees every emitted step maps onto a strategy-synthesis gadget.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .graph import (
    BlockCutTree,
    Graph,
    GraphKind,
    NotCactusError,
    block_cut_tree,
    block_cycle_order,
    classify,
)

LEAF_CYCLE_SHRINK = "leaf-cycle-shrink"
LEAF_CYCLE_REMOVE = "leaf-cycle-remove"
LEAF_EDGE_PAIR = "leaf-edge-pair"
PENDANT_ON_CYCLE = "pendant-on-cycle"
ELEMENTARY_FINISH = "elementary-finish"

SINGLE_VERTEX = "single-vertex"
SINGLE_EDGE = "single-edge"
PATH_THREE = "path-three-vertices"
CYCLE = "cycle"
BULL = "bull"
THREE_PAN = "three-pan"


@dataclass(frozen=True)
class ElementaryKind:
    name: str
    length: Optional[int] = None  # cycles only

    def __post_init__(self):
        if self.name == CYCLE and (self.length is None or self.length < 3):
            raise ValueError("cycle kind requires length >= 3")


def elementary_value(kind: ElementaryKind) -> int:
    """Guards needed for an elementary graph."""
    if kind.name in (SINGLE_VERTEX, SINGLE_EDGE):
        return 1
    if kind.name in (PATH_THREE, THREE_PAN):
        return 2
    if kind.name == CYCLE:
        return -(-kind.length // 3)
    if kind.name == BULL:
        return 3
    raise ValueError("unknown elementary kind %r" % (kind,))


def is_elementary(g: Graph) -> Optional[ElementaryKind]:
    """Recognize elementary graphs structurally (g must be connected).

    Vertex/edge counts plus the degree sequence identify each shape uniquely
    among connected graphs.
    """
    n, m = g.n, g.m
    if n == 1:
        return ElementaryKind(SINGLE_VERTEX)
    if n == 2 and m == 1:
        return ElementaryKind(SINGLE_EDGE)
    if n == 3 and m == 2:
        return ElementaryKind(PATH_THREE)
    degs = sorted(len(g.adjacency[v]) for v in range(n))
    if m == n and degs[0] == 2 and degs[-1] == 2:
        return ElementaryKind(CYCLE, length=n)
    if n == 4 and m == 4 and degs == [1, 2, 2, 3]:
        return ElementaryKind(THREE_PAN)
    if n == 5 and m == 5 and degs == [1, 1, 2, 3, 3]:
        return ElementaryKind(BULL)
    return None


@dataclass(frozen=True)
class ReductionStep:
    kind: str
    removed_vertices: Tuple[int, ...]
    anchor: Optional[int]
    guard_increment: int
    detail: dict = field(default_factory=dict)


@dataclass(frozen=True)
class ReductionTrace:
    steps: Tuple[ReductionStep, ...]
    total: int
    input_n: int


class _Reducer:
    """Mutable block-cut-tree state driving the reductions.

    Blocks carry a size, a member set, and the set of incident articulation
    vertices; cycle blocks get a next/prev ring (built lazily before their
    first surgery) so pendant removal is O(1). Candidate leaf blocks wait in
    priority buckets and are re-validated when popped.
    """

    B_CYCLE, B_PAIR, B_BIG, B_TRI = 0, 1, 2, 3

    def __init__(self, g: Graph, bc: Optional[BlockCutTree] = None, want_trace: bool = True, fifo: bool = False):
        if bc is None:
            bc = block_cut_tree(g)
        cls = classify(g, bc)
        if cls.kind is not GraphKind.CHRISTMAS_CACTUS:
            raise NotCactusError(
                "input is %s, not a Christmas cactus (witness: %r)"
                % (cls.kind.value, cls.witness_edge or cls.witness_vertex)
            )
        self.g = g
        self.want_trace = want_trace
        self.fifo = fifo
        nb = bc.n_blocks
        self.size = [len(v) for v in bc.blocks]
        self.members: List[set] = [set(v) for v in bc.blocks]
        self.artics: List[set] = [set(a) for a in bc.block_articulations]
        self.alive = bytearray(b"\x01" * nb)
        self.alive_set = set(range(nb))
        self.vblocks: Dict[int, set] = {}
        for b, verts in enumerate(bc.blocks):
            for v in verts:
                self.vblocks.setdefault(v, set()).add(b)
        self.ring_next: List[Optional[dict]] = [None] * nb
        self.ring_prev: List[Optional[dict]] = [None] * nb
        self.buckets: List[List[int]] = [[], [], [], []]
        self.guards = 0
        self.steps: List[ReductionStep] = []
        for b in range(nb):
            self._enqueue(b)

    # ---- bookkeeping ---------------------------------------------------------

    def _ring(self, b: int):
        if self.ring_next[b] is None:
            # must run before any surgery on b: relies on original adjacency
            order = block_cycle_order(self.g, tuple(sorted(self.members[b])))
            nxt, prv = {}, {}
            k = len(order)
            for i, v in enumerate(order):
                nxt[v] = order[(i + 1) % k]
                prv[v] = order[(i - 1) % k]
            self.ring_next[b] = nxt
            self.ring_prev[b] = prv
        return self.ring_next[b], self.ring_prev[b]

    def _other_block(self, vertex: int, not_b: int) -> int:
        for b in self.vblocks[vertex]:
            if b != not_b:
                return b
        raise AssertionError("vertex %d has no block other than %d" % (vertex, not_b))

    def _is_artic(self, v: int) -> bool:
        return len(self.vblocks.get(v, ())) >= 2

    def _bucket_of(self, b: int) -> int:
        if self.size[b] >= 3:
            return self.B_CYCLE
        a = next(iter(self.artics[b]))
        u = self._other_block(a, b)
        if self.size[u] == 2:
            return self.B_PAIR
        if self.size[u] >= 4:
            return self.B_BIG
        return self.B_TRI

    def _enqueue(self, b: int):
        # only leaf blocks that still hang off the rest of the tree
        if self.alive[b] and len(self.artics[b]) == 1:
            self.buckets[self._bucket_of(b)].append(b)

    def _repush_pendants_of(self, u: int):
        # u changed (size or incidences): leaf edges hanging off u may have
        # moved buckets or become reducible
        if not self.alive[u]:
            return
        for a in self.artics[u]:
            other = self._other_block(a, u)
            if self.alive[other] and self.size[other] == 2 and len(self.artics[other]) == 1:
                self.buckets[self._bucket_of(other)].append(other)

    def _corner_event(self, c: int):
        # c turned bare or its hanging block turned into a leaf edge: pendants
        # on a triangle through c may have become reducible
        for t in self.vblocks.get(c, ()):
            if self.alive[t] and self.size[t] == 3:
                self._repush_pendants_of(t)

    def _detach_articulation(self, a: int, dead_block: int):
        """dead_block was erased; a stays in the graph and stops linking it."""
        blocks = self.vblocks[a]
        blocks.discard(dead_block)
        if len(blocks) == 1:
            u = next(iter(blocks))
            self.artics[u].discard(a)
            self._enqueue(u)
            self._repush_pendants_of(u)
            self._corner_event(a)

    def _erase_vertex(self, v: int):
        self.vblocks.pop(v, None)

    def _kill(self, b: int):
        self.alive[b] = 0
        self.alive_set.discard(b)

    # ---- elementary residual detection ----------------------------------------

    def _elementary(self) -> Optional[ElementaryKind]:
        if len(self.alive_set) > 3:
            return None
        ids = sorted(self.alive_set)
        sizes = sorted(self.size[b] for b in ids)
        if len(ids) == 1:
            s = sizes[0]
            if s == 1:
                return ElementaryKind(SINGLE_VERTEX)
            if s == 2:
                return ElementaryKind(SINGLE_EDGE)
            return ElementaryKind(CYCLE, length=s)
        if len(ids) == 2:
            if sizes == [2, 2]:
                return ElementaryKind(PATH_THREE)
            if sizes == [2, 3]:
                return ElementaryKind(THREE_PAN)
            return None
        if sizes == [2, 2, 3]:
            tri = next(b for b in ids if self.size[b] == 3)
            if len(self.artics[tri]) == 2:
                return ElementaryKind(BULL)
        return None

    def _cycle_order_of(self, b: int) -> Tuple[int, ...]:
        nxt, prv = self._ring(b)
        start = min(self.members[b])
        step = nxt if nxt[start] < prv[start] else prv
        order = [start]
        while len(order) < self.size[b]:
            order.append(step[order[-1]])
        return tuple(order)

    def _elementary_detail(self, kind: ElementaryKind) -> dict:
        ids = sorted(self.alive_set)
        if kind.name == SINGLE_VERTEX:
            return {"vertex": next(iter(self.members[ids[0]]))}
        if kind.name == SINGLE_EDGE:
            u, v = sorted(self.members[ids[0]])
            return {"edge": (u, v)}
        if kind.name == CYCLE:
            return {"cycle": self._cycle_order_of(ids[0])}
        if kind.name == PATH_THREE:
            b1, b2 = ids
            mid = next(iter(self.artics[b1]))
            ends = sorted((self.members[b1] | self.members[b2]) - {mid})
            return {"path": (ends[0], mid, ends[1])}
        if kind.name == THREE_PAN:
            tri = next(b for b in ids if self.size[b] == 3)
            edge = next(b for b in ids if self.size[b] == 2)
            x = next(iter(self.artics[tri]))
            leaf = next(iter(self.members[edge] - {x}))
            v, y = sorted(self.members[tri] - {x})
            return {"triangle": (v, x, y), "carrier": x, "leaf": leaf}
        tri = next(b for b in ids if self.size[b] == 3)
        x, y = sorted(self.artics[tri])
        v = next(iter(self.members[tri] - {x, y}))
        leaf_of = {}
        for b in ids:
            if self.size[b] == 2:
                a = next(iter(self.artics[b]))
                leaf_of[a] = next(iter(self.members[b] - {a}))
        return {"triangle": (v, x, y), "leaf_of": leaf_of}

    def _residual_members(self) -> set:
        out = set()
        for b in self.alive_set:
            out |= self.members[b]
        return out

    # ---- reductions ------------------------------------------------------------

    def _pop_candidate(self):
        for bucket_id in (self.B_CYCLE, self.B_PAIR, self.B_BIG, self.B_TRI):
            bucket = self.buckets[bucket_id]
            while bucket:
                b = bucket.pop(0) if self.fifo else bucket.pop()
                if not self.alive[b] or len(self.artics[b]) != 1:
                    continue
                actual = self._bucket_of(b)
                if actual != bucket_id:
                    self.buckets[actual].append(b)
                    continue
                if bucket_id == self.B_TRI and not self._triangle_qualifies(b):
                    continue  # re-enqueued by corner events once it qualifies
                return bucket_id, b
        return None

    def _triangle_state(self, b: int):
        """(leafed_corner, bare_corner) of the triangle behind pendant b.

        A corner is "leafed" when its only other block is a leaf edge (the
        leaf bull shape) and "bare" when it is no articulation at all (the
        leaf 3-pan shape). Pendants on triangles with two busy corners are
        not reducible yet; corner events re-enqueue them.
        """
        a = next(iter(self.artics[b]))
        tri = self._other_block(a, b)
        leafed = bare = None
        for c in sorted(self.members[tri] - {a}):
            if not self._is_artic(c):
                if bare is None:
                    bare = c
            else:
                other = self._other_block(c, tri)
                if self.size[other] == 2 and len(self.artics[other]) == 1:
                    if leafed is None:
                        leafed = c
        return leafed, bare

    def _triangle_qualifies(self, b: int) -> bool:
        leafed, bare = self._triangle_state(b)
        return leafed is not None or bare is not None

    def _reduce_leaf_cycle(self, b: int):
        a = next(iter(self.artics[b]))
        length = self.size[b]
        nxt, prv = self._ring(b)
        if length % 3 == 1:
            walk = nxt if nxt[a] < prv[a] else prv
            removed = []
            x = walk[a]
            while x != a:
                removed.append(x)
                x = walk[x]
            inc = (length - 1) // 3
            self.guards += inc
            if self.want_trace:
                self.steps.append(
                    ReductionStep(
                        kind=LEAF_CYCLE_REMOVE,
                        removed_vertices=tuple(sorted(removed)),
                        anchor=a,
                        guard_increment=inc,
                        detail={"cycle": tuple([a] + removed), "cycle_len": length},
                    )
                )
            for x in removed:
                self._erase_vertex(x)
            self._kill(b)
            self._detach_articulation(a, b)
        else:
            walk = nxt if nxt[a] < prv[a] else prv
            survivor = walk[a]
            removed = []
            x = walk[survivor]
            while x != a:
                removed.append(x)
                x = walk[x]
            inc = -(-length // 3) - 1
            self.guards += inc
            if self.want_trace:
                self.steps.append(
                    ReductionStep(
                        kind=LEAF_CYCLE_SHRINK,
                        removed_vertices=tuple(sorted(removed)),
                        anchor=a,
                        guard_increment=inc,
                        detail={
                            "cycle": tuple([a, survivor] + removed),
                            "cycle_len": length,
                            "survivor": survivor,
                        },
                    )
                )
            for x in removed:
                self._erase_vertex(x)
            self.size[b] = 2
            self.members[b] = {a, survivor}
            self.ring_next[b] = None
            self.ring_prev[b] = None
            self._enqueue(b)
            self._corner_event(a)  # a's hanging block is now a leaf edge

    def _reduce_leaf_pair(self, b: int):
        a = next(iter(self.artics[b]))
        leaf = next(iter(self.members[b] - {a}))
        u = self._other_block(a, b)
        w = next(iter(self.members[u] - {a}))
        self.guards += 1
        if self.want_trace:
            self.steps.append(
                ReductionStep(
                    kind=LEAF_EDGE_PAIR,
                    removed_vertices=tuple(sorted((leaf, a))),
                    anchor=w,
                    guard_increment=1,
                    detail={"leaf": leaf, "middle": a, "anchor": w},
                )
            )
        self._kill(b)
        self._kill(u)
        self._erase_vertex(leaf)
        self._erase_vertex(a)
        self._detach_articulation(w, u)

    def _reduce_pendant(self, b: int):
        a = next(iter(self.artics[b]))
        leaf = next(iter(self.members[b] - {a}))
        u = self._other_block(a, b)
        nxt, prv = self._ring(u)
        p, q = sorted((nxt[a], prv[a]))
        chord_real = self.size[u] == 3
        leafed = bare = None
        if chord_real:
            leafed, bare = self._triangle_state(b)
        self.guards += 1
        if self.want_trace:
            self.steps.append(
                ReductionStep(
                    kind=PENDANT_ON_CYCLE,
                    removed_vertices=tuple(sorted((leaf, a))),
                    anchor=p,
                    guard_increment=1,
                    detail={
                        "leaf": leaf,
                        "attachment": a,
                        "chord": (p, q),
                        "chord_real": chord_real,
                        "bare_corner": None if leafed is not None else bare,
                        "bull_corner": leafed,
                    },
                )
            )
        self._kill(b)
        self._erase_vertex(leaf)
        # unlink a from the ring of u and drop it from the graph
        pn, pv = nxt[a], prv[a]
        nxt[pv] = pn
        prv[pn] = pv
        del nxt[a], prv[a]
        self.members[u].discard(a)
        self.artics[u].discard(a)
        self.size[u] -= 1
        self._erase_vertex(a)
        if len(self.artics[u]) <= 1:
            self._enqueue(u)
        self._repush_pendants_of(u)
        if leafed is not None:
            # a leaf bull reduces as pendant + leaf-edge pair; emit the pair
            # immediately so the two steps stay adjacent for synthesis
            pair = self._other_block(leafed, u)
            self._reduce_leaf_pair(pair)

    def _advance(self) -> bool:
        popped = self._pop_candidate()
        if popped is None:
            return False
        bucket_id, b = popped
        if bucket_id == self.B_CYCLE:
            self._reduce_leaf_cycle(b)
        elif bucket_id == self.B_PAIR:
            self._reduce_leaf_pair(b)
        else:
            self._reduce_pendant(b)
        return True

    def run(self) -> Tuple[int, Optional[ReductionTrace]]:
        n = self.g.n
        while True:
            kind = self._elementary()
            if kind is not None:
                inc = elementary_value(kind)
                self.guards += inc
                if self.want_trace:
                    detail = self._elementary_detail(kind)
                    detail["elementary"] = kind.name
                    if kind.length is not None:
                        detail["length"] = kind.length
                    self.steps.append(
                        ReductionStep(
                            kind=ELEMENTARY_FINISH,
                            removed_vertices=tuple(sorted(self._residual_members())),
                            anchor=None,
                            guard_increment=inc,
                            detail=detail,
                        )
                    )
                break
            if not self._advance():
                raise AssertionError("non-elementary residual with no applicable reduction")
        trace = None
        if self.want_trace:
            trace = ReductionTrace(steps=tuple(self.steps), total=self.guards, input_n=n)
        return self.guards, trace


def _alg1_count(bc: BlockCutTree) -> int:
    """Counters-only reduction over the block-cut tree, processing leaf
    blocks from a stack in any order. Vertex identities never matter for the
    count, so this path carries only sizes and articulation links."""
    nb = bc.n_blocks
    size = [len(v) for v in bc.blocks]
    artics = [set(a) for a in bc.block_articulations]
    alive = bytearray(b"\x01" * nb)
    # every articulation of a Christmas cactus joins exactly two blocks
    vb0 = {}
    vb1 = {}
    for b in range(nb):
        for a in bc.block_articulations[b]:
            if a in vb0:
                vb1[a] = b
            else:
                vb0[a] = b
    guards = 0
    stack = [b for b in range(nb) if len(bc.block_articulations[b]) <= 1]

    def other_block(a: int, b: int) -> int:
        first = vb0[a]
        return vb1[a] if first == b else first

    def remove_leaf_block(b: int):
        nonlocal guards
        alive[b] = 0
        arts = artics[b]
        if arts:
            a = next(iter(arts))
            u = other_block(a, b)
            artics[u].discard(a)
            if len(artics[u]) <= 1:
                stack.append(u)
        else:
            guards += -(-size[b] // 3)

    while stack:
        b = stack.pop()
        if not alive[b]:
            continue
        arts = artics[b]
        if not arts:
            guards += -(-size[b] // 3)
            alive[b] = 0
            continue
        if len(arts) > 1:
            continue  # stale entry: still an inner block
        a = next(iter(arts))
        u = other_block(a, b)
        s = size[b]
        if s >= 3:
            if s % 3 == 1:
                guards += (s - 1) // 3
                remove_leaf_block(b)
            else:
                guards += -(-s // 3) - 1
                size[b] = 2
                stack.append(b)
        else:
            if size[u] == 2:
                guards += 1
                remove_leaf_block(b)
                remove_leaf_block(u)
            else:
                guards += 1
                remove_leaf_block(b)
                size[u] -= 1
    return guards


def meden_christmas_cactus(
    g: Graph,
    bc: Optional[BlockCutTree] = None,
    want_trace: bool = True,
    fifo: bool = False,
) -> Tuple[int, Optional[ReductionTrace]]:
    """EDN (= EGC = EDE) of a connected Christmas cactus, with its trace.

    Runs in O(n + m). With ``want_trace`` the reductions follow the priority
    order strategy synthesis relies on; without it a counters-only pass over
    the block-cut tree computes the same number (the count is order
    independent; tests assert both paths agree). ``fifo`` flips the trace
    path's within-bucket order.
    """
    if not want_trace:
        if bc is None:
            bc = block_cut_tree(g)
        cls = classify(g, bc)
        if cls.kind is not GraphKind.CHRISTMAS_CACTUS:
            raise NotCactusError(
                "input is %s, not a Christmas cactus (witness: %r)"
                % (cls.kind.value, cls.witness_edge or cls.witness_vertex)
            )
        return _alg1_count(bc), None
    return _Reducer(g, bc=bc, want_trace=want_trace, fifo=fifo).run()


def choose_reduction(g: Graph, bc: Optional[BlockCutTree] = None) -> ReductionStep:
    """The next reduction for a non-elementary connected Christmas cactus."""
    if is_elementary(g) is not None:
        raise ValueError("input is elementary; no reduction applies")
    r = _Reducer(g, bc=bc, want_trace=True)
    if not r._advance():
        raise AssertionError("reducer found no step on a non-elementary input")
    return r.steps[0]


def residuals(g: Graph, trace: ReductionTrace):
    """Materialize the residual graph after each step (tests and synthesis).

    Yields (residual, keep) pairs where ``keep`` maps the residual's dense ids
    back to original vertex ids. Chord edges introduced by PendantOnCycle are
    added explicitly; the final ElementaryFinish step empties the graph and
    yields nothing.
    """
    verts = set(range(g.n))
    edges = set(g.edges())
    for step in trace.steps:
        removed = set(step.removed_vertices)
        verts -= removed
        edges = {e for e in edges if e[0] not in removed and e[1] not in removed}
        if step.kind == PENDANT_ON_CYCLE:
            p, q = step.detail["chord"]
            edges.add((min(p, q), max(p, q)))
        if not verts:
            return
        keep = sorted(verts)
        remap = {v: i for i, v in enumerate(keep)}
        yield Graph.from_edges(len(keep), sorted((remap[u], remap[w]) for u, w in edges)), keep
