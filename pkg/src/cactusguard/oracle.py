"""Exact m-eternal domination numbers on small graphs via safety games.

The infinite guard game is solved as a safety game on the configuration
graph: enumerate candidate configurations, then iteratively delete every
configuration that has an attack without a surviving answer. The greatest
fixed point is the winning region; nonempty means the guard count suffices.

This module is the project's ground truth and is kept independent of the
linear-time reduction algorithm it validates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from itertools import combinations, combinations_with_replacement
from typing import Dict, Optional, Tuple

from .graph import Graph, DisconnectedGraphError, cycle_edges


class OracleBudgetError(RuntimeError):
    """The requested state space exceeds the configured oracle budget."""


class GameVariant(Enum):
    EGC = "egc"  # multiple guards may share a vertex
    EDN = "edn"  # at most one guard per vertex
    EDE = "ede"  # EDN plus vertex and cycle-edge evictions


ATTACK_VERTEX = "attack"
EVICT_VERTEX = "evict-vertex"
EVICT_EDGE = "evict-edge"


@dataclass(frozen=True)
class Attack:
    kind: str
    v: int
    u: Optional[int] = None  # second endpoint for edge evictions

    @staticmethod
    def vertex(v: int) -> "Attack":
        return Attack(ATTACK_VERTEX, v)

    @staticmethod
    def evict_vertex(v: int) -> "Attack":
        return Attack(EVICT_VERTEX, v)

    @staticmethod
    def evict_edge(u: int, v: int) -> "Attack":
        return Attack(EVICT_EDGE, max(u, v), min(u, v))

    def endpoints(self) -> Tuple[int, ...]:
        return (self.v,) if self.u is None else (self.u, self.v)

    def satisfied_by(self, config: Tuple[int, ...]) -> bool:
        if self.kind == ATTACK_VERTEX:
            return self.v in config
        if self.kind == EVICT_VERTEX:
            return self.v not in config
        return self.v not in config and self.u not in config


def closed_neighborhood_masks(g: Graph):
    masks = []
    for v in range(g.n):
        m = 1 << v
        for w in g.adjacency[v]:
            m |= 1 << w
        masks.append(m)
    return masks


def traversable(g: Graph, a: Tuple[int, ...], b: Tuple[int, ...], nmask=None) -> bool:
    """True iff configuration a can move to b in one round.

    A perfect matching must pair each guard of a with a target of b inside its
    closed neighborhood. Decided by a subset DP (guards are few); repetitions
    are honored, so this works for EGC multisets too. ``nmask`` may carry
    precomputed closed-neighborhood masks for hot loops.
    """
    if len(a) != len(b):
        raise ValueError("configurations differ in order: %d vs %d" % (len(a), len(b)))
    k = len(a)
    if nmask is None:
        nmask = closed_neighborhood_masks(g)
    target_masks = []
    for gu in a:
        m = 0
        allowed = nmask[gu]
        for j, tv in enumerate(b):
            if (allowed >> tv) & 1:
                m |= 1 << j
        if m == 0:
            return False
        target_masks.append(m)
    reachable = 1  # bitset over subsets of b-slots: empty set reachable
    for i in range(k):
        new = 0
        mask = target_masks[i]
        s_bits = reachable
        while s_bits:
            low = s_bits & -s_bits
            s = low.bit_length() - 1
            s_bits ^= low
            free = mask & ~s
            while free:
                fb = free & -free
                new |= 1 << (s | fb)
                free ^= fb
        reachable = new
        if not reachable:
            return False
    return (reachable >> ((1 << k) - 1)) & 1 == 1


def domination_number(g: Graph, limit: int = 20) -> int:
    """Minimum dominating set size by increasing-size subset search."""
    if not g.is_connected():
        raise DisconnectedGraphError("domination_number requires a connected graph")
    if g.n > limit:
        raise OracleBudgetError("n=%d exceeds the subset-search limit %d" % (g.n, limit))
    nmask = closed_neighborhood_masks(g)
    full = (1 << g.n) - 1
    order = sorted(range(g.n), key=lambda v: -len(g.adjacency[v]))
    for k in range(1, g.n + 1):
        for sub in combinations(order, k):
            cover = 0
            for v in sub:
                cover |= nmask[v]
            if cover == full:
                return k
    return g.n


def attack_set(g: Graph, variant: GameVariant):
    """All attacker moves for the variant.

    Edge evictions target only edges on cycles. A single-vertex graph admits
    no evictions at all (there is no configuration omitting the only vertex).
    """
    attacks = [Attack.vertex(v) for v in range(g.n)]
    if variant is GameVariant.EDE and g.n >= 2:
        attacks.extend(Attack.evict_vertex(v) for v in range(g.n))
        attacks.extend(Attack.evict_edge(u, v) for (u, v) in sorted(cycle_edges(g)))
    return attacks


@dataclass(frozen=True)
class StrategyWitness:
    """Winning region of the safety game plus one chosen answer per attack."""

    variant: GameVariant
    order: int
    configs: tuple  # sorted tuple of sorted configuration tuples
    successors: Dict  # (config_index, Attack) -> config_index

    def initial(self) -> Tuple[int, ...]:
        return self.configs[0]


def _dominating_configs(g: Graph, order: int, variant: GameVariant):
    nmask = closed_neighborhood_masks(g)
    full = (1 << g.n) - 1
    gen = combinations_with_replacement if variant is GameVariant.EGC else combinations
    out = []
    for cfg in gen(range(g.n), order):
        cover = 0
        for v in cfg:
            cover |= nmask[v]
        if cover == full:
            out.append(cfg)
    return out


def _successor_masks(g: Graph, configs, variant: GameVariant):
    """For each configuration, the bitmask of traversable configurations.

    Successors are generated by moving every guard within its closed
    neighborhood and canonicalizing; only configurations present in
    ``configs`` (the dominating ones) are kept, which is sound because a
    configuration answering vertex attacks must itself be dominating.
    """
    index = {cfg: i for i, cfg in enumerate(configs)}
    dedup_ok = variant is GameVariant.EGC
    closed = [tuple(sorted((v,) + g.adjacency[v])) for v in range(g.n)]
    out = []
    for cfg in configs:
        seen = set()
        mask = 0
        stack = [((), 0)]
        while stack:
            partial, i = stack.pop()
            if i == len(cfg):
                key = tuple(sorted(partial))
                if key not in seen:
                    seen.add(key)
                    j = index.get(key)
                    if j is not None:
                        mask |= 1 << j
                continue
            for t in closed[cfg[i]]:
                stack.append((partial + (t,), i + 1))
        if not dedup_ok:
            pass  # duplicate-containing keys are simply absent from the index
        out.append(mask)
    return out


def solve_safety(
    g: Graph,
    order: int,
    variant: GameVariant,
    budget: int = 10**7,
) -> Optional[StrategyWitness]:
    """Greatest set of configurations surviving every attack, as a witness.

    Returns None when the defender loses with this many guards. The fixed
    point is computed by round-based deletion; deletion order does not affect
    the result.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    if not g.is_connected():
        raise DisconnectedGraphError("solve_safety requires a connected graph")
    attacks = attack_set(g, variant)
    approx_states = math.comb(g.n + order - 1, order) if variant is GameVariant.EGC else math.comb(g.n, order)
    if approx_states * max(1, len(attacks)) > budget:
        raise OracleBudgetError(
            "state space %d x %d attacks exceeds budget %d" % (approx_states, len(attacks), budget)
        )

    configs = _dominating_configs(g, order, variant)
    if not configs:
        return None
    succ = _successor_masks(g, configs, variant)

    sat_masks = []
    for atk in attacks:
        m = 0
        for i, cfg in enumerate(configs):
            if atk.satisfied_by(cfg):
                m |= 1 << i
        sat_masks.append(m)

    alive = (1 << len(configs)) - 1
    changed = True
    while changed:
        changed = False
        bits = alive
        while bits:
            low = bits & -bits
            i = low.bit_length() - 1
            bits ^= low
            reach = succ[i] & alive
            for sm in sat_masks:
                if reach & sm == 0:
                    alive &= ~low
                    changed = True
                    break
    if alive == 0:
        return None

    safe_ids = []
    bits = alive
    while bits:
        low = bits & -bits
        safe_ids.append(low.bit_length() - 1)
        bits ^= low
    remap = {old: new for new, old in enumerate(safe_ids)}
    safe_configs = tuple(configs[i] for i in safe_ids)

    successors = {}
    for old_i in safe_ids:
        reach = succ[old_i] & alive
        for atk, sm in zip(attacks, sat_masks):
            choices = reach & sm
            low = choices & -choices
            successors[(remap[old_i], atk)] = remap[low.bit_length() - 1]
    return StrategyWitness(variant=variant, order=order, configs=safe_configs, successors=successors)


def exact_number(
    g: Graph,
    variant: GameVariant,
    max_order: Optional[int] = None,
    budget: int = 10**7,
) -> int:
    """Smallest guard count winning the variant's game on g.

    The search starts at the domination number (a valid lower bound for all
    three variants) and increments until the safety game is won.
    """
    lo = domination_number(g)
    hi = max_order if max_order is not None else g.n
    for k in range(lo, hi + 1):
        if solve_safety(g, k, variant, budget=budget) is not None:
            return k
    raise OracleBudgetError("no winning order found up to %d" % hi)


def validate_witness(g: Graph, witness: StrategyWitness) -> list:
    """Independent check of a witness: every chosen successor must satisfy its
    attack and be traversable from its source. Returns a list of violations."""
    problems = []
    attacks = attack_set(g, witness.variant)
    for i, cfg in enumerate(witness.configs):
        for atk in attacks:
            j = witness.successors.get((i, atk))
            if j is None:
                problems.append("missing successor for config %r attack %r" % (cfg, atk))
                continue
            nxt = witness.configs[j]
            if not atk.satisfied_by(nxt):
                problems.append("successor %r does not satisfy %r" % (nxt, atk))
            if not traversable(g, cfg, nxt):
                problems.append("successor %r not traversable from %r" % (nxt, cfg))
    return problems
