"""Block-tree radial layout hints for the attack console.

Blocks fan out from a root block; cycles are drawn as regular polygons
anchored at the articulation they were entered through, edges as spokes.
Purely a presentation hint: deterministic, unit-scale, refined client-side.
"""

from __future__ import annotations

import math
from typing import Dict, Tuple

from .graph import Graph, block_cut_tree


def radial_layout(g: Graph) -> Dict[int, Tuple[float, float]]:
    if g.n == 1:
        return {0: (0.0, 0.0)}
    bc = block_cut_tree(g)
    blocks_of = {}
    for b, verts in enumerate(bc.blocks):
        for v in verts:
            blocks_of.setdefault(v, []).append(b)

    pos: Dict[int, Tuple[float, float]] = {}
    placed_blocks = set()

    def subtree_weight(block: int, entry) -> int:
        total = len(bc.blocks[block]) - (1 if entry is not None else 0)
        for a in bc.block_articulations[block]:
            if a == entry:
                continue
            for nb in blocks_of[a]:
                if nb != block and nb not in placed_blocks:
                    total += subtree_weight(nb, a)
        return max(total, 1)

    def place_block(block: int, entry, angle_lo: float, angle_hi: float):
        placed_blocks.add(block)
        verts = bc.blocks[block]
        mid = (angle_lo + angle_hi) / 2.0
        if entry is None:
            anchor = verts[0]
            pos[anchor] = (0.0, 0.0)
            entry = anchor
        ex, ey = pos[entry]
        others = [v for v in verts if v != entry]
        if len(verts) == 2:
            member_pos = {others[0]: (ex + math.cos(mid), ey + math.sin(mid))}
        else:
            k = len(verts)
            r = max(1.0, k / (2.0 * math.pi) * 1.6)
            cx, cy = ex + r * math.cos(mid), ey + r * math.sin(mid)
            base = math.atan2(ey - cy, ex - cx)
            order = _ring_order(g, verts, entry)
            member_pos = {}
            for i, v in enumerate(order[1:], start=1):
                th = base + 2.0 * math.pi * i / k
                member_pos[v] = (cx + r * math.cos(th), cy + r * math.sin(th))
        pos.update(member_pos)
        # fan the hanging subtrees around their articulations
        hangs = []
        for a in bc.block_articulations[block]:
            for nb in blocks_of[a]:
                if nb != block and nb not in placed_blocks:
                    hangs.append((a, nb, subtree_weight(nb, a)))
        total = sum(w for _, _, w in hangs) or 1
        for a, nb, w in hangs:
            span = max((angle_hi - angle_lo) * w / total, 0.6)
            ax, ay = pos[a]
            out = math.atan2(ay - ey, ax - ex) if (ax, ay) != (ex, ey) else mid
            place_block(nb, a, out - span / 2.0, out + span / 2.0)

    root = 0
    place_block(root, None, -math.pi, math.pi)
    # any block missed through shared articulations (defensive)
    for b in range(bc.n_blocks):
        if b not in placed_blocks:
            entry = next((v for v in bc.blocks[b] if v in pos), bc.blocks[b][0])
            if entry not in pos:
                pos[entry] = (0.0, 0.0)
            place_block(b, entry, -math.pi, math.pi)
    return pos


def _ring_order(g: Graph, verts, start):
    members = set(verts)
    if len(verts) == 2:
        return [start, next(v for v in verts if v != start)]
    inside = [w for w in g.adjacency[start] if w in members]
    order = [start, min(inside)]
    while len(order) < len(verts):
        cur, prev = order[-1], order[-2]
        nxt = next(w for w in g.adjacency[cur] if w in members and w != prev)
        order.append(nxt)
    return order
