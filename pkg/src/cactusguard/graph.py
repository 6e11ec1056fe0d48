"""Undirected simple graphs, edge-list I/O, block-cut trees, cactus recognition.

Vertices are dense integers 0..n-1. All structures are immutable after
construction and safe to share across threads. The biconnectivity traversal is
iterative (explicit stacks) so inputs with ~10^6 vertices do not overflow the
interpreter's call stack.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence


class GraphFormatError(ValueError):
    """Raised for malformed edge-list documents or invalid edge sets."""


class DisconnectedGraphError(ValueError):
    """Raised by operations that require a connected input."""


class NotCactusError(ValueError):
    """Raised when an operation needs a (Christmas) cactus and the input is not one."""


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph with sorted adjacency lists.

    Invariants: no self-loops, no parallel edges, adjacency symmetric,
    m == sum(len(adj)) / 2.
    """

    n: int
    adjacency: tuple  # tuple of tuples of neighbor ids, each sorted
    m: int

    @staticmethod
    def from_edges(n: int, edges: Iterable) -> "Graph":
        if n < 1:
            raise GraphFormatError("vertex count must be >= 1, got %r" % n)
        adj = [[] for _ in range(n)]
        seen = set()
        count = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError("edge (%d, %d) out of range for n=%d" % (u, v, n))
            if u == v:
                raise GraphFormatError("self-loop at vertex %d" % u)
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphFormatError("duplicate edge (%d, %d)" % key)
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
            count += 1
        for row in adj:
            row.sort()
        return Graph(n=n, adjacency=tuple(tuple(row) for row in adj), m=count)

    def edges(self):
        """Edges as sorted (u, v) pairs with u < v, lexicographic order."""
        out = []
        for u in range(self.n):
            for v in self.adjacency[u]:
                if u < v:
                    out.append((u, v))
        return out

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        row = self.adjacency[u]
        lo, hi = 0, len(row)
        while lo < hi:
            mid = (lo + hi) // 2
            if row[mid] < v:
                lo = mid + 1
            else:
                hi = mid
        return lo < len(row) and row[lo] == v

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = bytearray(self.n)
        seen[0] = 1
        stack = [0]
        reached = 1
        adj = self.adjacency
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = 1
                    reached += 1
                    stack.append(w)
        return reached == self.n


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: header "n m", then m lines "u v".

    Lines starting with '#' are comments; blank lines are ignored. Vertex ids
    must satisfy 0 <= u < v < n. The parse is format-only: disconnected inputs
    are accepted here and rejected later by operations that need connectivity.
    """
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise GraphFormatError("line %d: expected header 'n m'" % lineno)
            try:
                header = (int(parts[0]), int(parts[1]))
            except ValueError:
                raise GraphFormatError("line %d: non-integer header" % lineno) from None
            continue
        if len(parts) != 2:
            raise GraphFormatError("line %d: expected 'u v'" % lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError("line %d: non-integer vertex id" % lineno) from None
        if not (u < v):
            raise GraphFormatError("line %d: edges must satisfy u < v, got %d %d" % (lineno, u, v))
        edges.append((u, v))
    if header is None:
        raise GraphFormatError("empty document")
    n, m = header
    if len(edges) != m:
        raise GraphFormatError("header declares %d edges, found %d" % (m, len(edges)))
    return Graph.from_edges(n, edges)


def serialize_graph(g: Graph, labels: Optional[Sequence[int]] = None) -> str:
    """Emit the edge-list format, edges sorted lexicographically.

    When ``labels`` is given, a trailing comment table "# label <local>
    <original>" maps local ids back to the caller's vertex names; the parser
    ignores it, so round-trips stay valid.
    """
    lines = ["%d %d" % (g.n, g.m)]
    lines.extend("%d %d" % e for e in g.edges())
    if labels is not None:
        lines.extend("# label %d %d" % (i, lab) for i, lab in enumerate(labels))
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class BlockCutTree:
    """Blocks and articulations of a connected graph, with incidence.

    ``blocks[i]`` is the sorted tuple of member vertices of block i.
    ``block_articulations[i]`` lists the articulation vertices inside block i
    (this is the bipartite incidence; deg(i) is its length). ``vertex_blocks``
    counts, per vertex, how many blocks contain it.
    """

    blocks: tuple
    articulations: tuple
    block_articulations: tuple
    vertex_blocks: tuple

    @property
    def n_blocks(self) -> int:
        return len(self.blocks)

    def deg(self, block_id: int) -> int:
        return len(self.block_articulations[block_id])

    def block_size(self, block_id: int) -> int:
        return len(self.blocks[block_id])


def block_cut_tree(g: Graph) -> BlockCutTree:
    """Compute the block-cut tree of a connected graph in O(n + m).

    Iterative Hopcroft-Tarjan biconnectivity with an explicit vertex stack:
    when an articulation closes a block, the vertices discovered inside it
    are popped and form the block together with the articulation. Isolated
    K1 (n == 1) yields a single block containing the lone vertex.
    """
    n = g.n
    if n == 1:
        return BlockCutTree(blocks=((0,),), articulations=(), block_articulations=((),), vertex_blocks=(1,))

    adj = g.adjacency
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    ptr = [0] * n
    vstack = []
    blocks = []
    is_artic = bytearray(n)

    root = 0
    disc[root] = low[root] = 0
    timer = 1
    dfs = [root]
    vstack.append(root)
    root_children = 0

    while dfs:
        u = dfs[-1]
        row = adj[u]
        i = ptr[u]
        advanced = False
        while i < len(row):
            w = row[i]
            i += 1
            dw = disc[w]
            if dw == -1:
                ptr[u] = i
                parent[w] = u
                disc[w] = low[w] = timer
                timer += 1
                dfs.append(w)
                vstack.append(w)
                if u == root:
                    root_children += 1
                advanced = True
                break
            if dw < low[u] and w != parent[u]:
                low[u] = dw
        if advanced:
            continue
        ptr[u] = i
        dfs.pop()
        if not dfs:
            break
        p = dfs[-1]
        lu = low[u]
        if lu < low[p]:
            low[p] = lu
        if lu >= disc[p]:
            # p closes the block entered through u: pop u and everything
            # discovered after it, the block is that set plus p
            comp = [p]
            while True:
                x = vstack.pop()
                comp.append(x)
                if x == u:
                    break
            comp.sort()
            blocks.append(tuple(comp))
            if p != root:
                is_artic[p] = 1
    if root_children > 1:
        is_artic[root] = 1

    if timer != n:
        raise DisconnectedGraphError("graph is not connected (%d of %d vertices reachable)" % (timer, n))

    blocks.sort()

    vertex_blocks = [0] * n
    block_artics = []
    for verts in blocks:
        arts = []
        for v in verts:
            vertex_blocks[v] += 1
            if is_artic[v]:
                arts.append(v)
        block_artics.append(tuple(arts))

    articulations = tuple(v for v in range(n) if is_artic[v])
    return BlockCutTree(
        blocks=tuple(blocks),
        articulations=articulations,
        block_articulations=tuple(block_artics),
        vertex_blocks=tuple(vertex_blocks),
    )


def leaf_blocks(bc: BlockCutTree):
    """Ids of blocks incident to at most one articulation, ascending."""
    return [i for i in range(bc.n_blocks) if bc.deg(i) <= 1]


class GraphKind(Enum):
    GENERAL = "general"
    CACTUS = "cactus"
    CHRISTMAS_CACTUS = "christmas-cactus"


@dataclass(frozen=True)
class GraphClass:
    kind: GraphKind
    witness_edge: Optional[tuple] = None  # an edge lying on two cycles
    witness_vertex: Optional[int] = None  # a vertex in >= 3 blocks


def _block_is_edge_or_cycle(g: Graph, verts: tuple) -> bool:
    k = len(verts)
    if k <= 2:
        return True
    # a biconnected block on k >= 3 vertices is a cycle iff it has exactly k edges,
    # iff every member vertex has exactly 2 neighbors inside the block
    members = set(verts)
    for v in verts:
        inside = 0
        for w in g.adjacency[v]:
            if w in members:
                inside += 1
                if inside > 2:
                    return False
        if inside != 2:
            return False
    return True


def classify(g: Graph, bc: Optional[BlockCutTree] = None) -> GraphClass:
    """Classify a connected graph as Christmas cactus, cactus, or general.

    Cactus: every block is a single edge or a cycle. Christmas cactus:
    additionally every vertex lies in at most two blocks. The witness for a
    failed test is the first offending edge (inside a non-cycle block, hence
    on two cycles) or vertex (in >= 3 blocks).
    """
    if bc is None:
        bc = block_cut_tree(g)
    for verts in bc.blocks:
        if not _block_is_edge_or_cycle(g, verts):
            members = set(verts)
            u = verts[0]
            w = min(x for x in g.adjacency[u] if x in members)
            return GraphClass(kind=GraphKind.GENERAL, witness_edge=(min(u, w), max(u, w)))
    for v in range(g.n):
        if bc.vertex_blocks[v] >= 3:
            return GraphClass(kind=GraphKind.CACTUS, witness_vertex=v)
    return GraphClass(kind=GraphKind.CHRISTMAS_CACTUS)


def cycle_edges(g: Graph, bc: Optional[BlockCutTree] = None) -> set:
    """Edges lying on some cycle: exactly the edges inside blocks of size >= 3."""
    if bc is None:
        bc = block_cut_tree(g)
    out = set()
    for verts in bc.blocks:
        if len(verts) < 3:
            continue
        members = set(verts)
        for u in verts:
            for w in g.adjacency[u]:
                if u < w and w in members:
                    out.add((u, w))
    return out


def block_cycle_order(g: Graph, verts: tuple) -> list:
    """Member vertices of a cycle block in ring order, starting at verts[0],
    second element the smaller neighbor. Requires the block to be a cycle."""
    members = set(verts)
    start = verts[0]
    inside = [w for w in g.adjacency[start] if w in members]
    if len(verts) == 2:
        return [start, inside[0]]
    order = [start, min(inside)]
    while len(order) < len(verts):
        cur = order[-1]
        prev = order[-2]
        nxt = None
        for w in g.adjacency[cur]:
            if w in members and w != prev:
                nxt = w
                break
        if nxt is None:
            raise NotCactusError("block %r is not a cycle" % (verts,))
        order.append(nxt)
    return order
