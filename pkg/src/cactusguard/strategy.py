"""Constructive defender strategies for Christmas cactus graphs.

A DefenderEngine is synthesized from a ReductionTrace as a chain of gadget
layers, one per reduction step, with a small elementary machine at the core.
Each layer owns the vertices its step removed, keeps the private guards that
step paid for, and translates incoming attacks into at most one simulated
attack or eviction on the residual graph below it, following the merge
arguments behind each reduction:

  leaf-edge pair     one private guard oscillates on the removed edge
  pendant on cycle   articulation merge: either the attachment is guarded or
                     both chord endpoints are evicted below, so no guard ever
                     needs to cross the chord
  pendant on a       bare-corner aliasing: the inner guard nominally on the
  triangle           bare corner stands physically on the attachment while
                     the chord is evicted, and returns next round
  leaf bull          two pendant-pair guards, fused from the step pair the
                     reducer emits for a leaf bull
  cycle shrink       the full-cycle rotation machine holds the articulation
                     exactly when the surviving leaf is unoccupied below, so
                     one guard is always shared between cycle and interior
  cycle removal      articulation merge against a rotation machine on the
                     cycle closed by a virtual edge

The engine works at configuration level: it emits guard sets, and the
traversability of consecutive sets (including reroutes over virtual chords
via their gadget's anchor) is checked by the verifier, not bookkept here.
All machines answer an already-satisfied demand with their current
configuration, which the merge arguments require.
"""

from __future__ import annotations

import copy
import random
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .graph import Graph, cycle_edges
from .oracle import (
    ATTACK_VERTEX,
    EVICT_EDGE,
    EVICT_VERTEX,
    Attack,
    closed_neighborhood_masks,
    traversable,
)
from .reduction import (
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
    ReductionTrace,
)


class StrategyError(RuntimeError):
    """Trace/graph mismatch or an attack the engine cannot interpret."""


# --------------------------------------------------------------------------
# elementary machines


class _VertexMachine:
    __slots__ = ("v",)

    def __init__(self, v: int):
        self.v = v

    def config(self):
        return {self.v}

    def state_key(self):
        return self.v

    def attack(self, z: int):
        pass

    def evict_vertex(self, z: int):
        raise StrategyError("cannot evict the only vertex")

    def evict_edge(self, u: int, v: int):
        raise StrategyError("single vertex has no edges")


class _EdgeMachine:
    """One guard defending and evicting both endpoints of an edge."""

    __slots__ = ("u", "v", "pos")

    def __init__(self, u: int, v: int, at: int):
        self.u, self.v, self.pos = u, v, at

    def config(self):
        return {self.pos}

    def state_key(self):
        return self.pos

    def _other(self, z: int) -> int:
        return self.v if z == self.u else self.u

    def attack(self, z: int):
        if self.pos != z:
            self.pos = z

    def evict_vertex(self, z: int):
        if self.pos == z:
            self.pos = self._other(z)

    def evict_edge(self, u: int, v: int):
        raise StrategyError("edge machine owns no cycle edge (%d, %d)" % (u, v))


class _PathThreeMachine:
    """Two guards on a path a-b-c."""

    __slots__ = ("a", "b", "c", "pos")

    def __init__(self, a: int, b: int, c: int):
        self.a, self.b, self.c = a, b, c
        self.pos = {a, c}

    def config(self):
        return set(self.pos)

    def state_key(self):
        return tuple(sorted(self.pos))

    def attack(self, z: int):
        if z in self.pos:
            return
        a, b, c = self.a, self.b, self.c
        if z == b:
            # from {a, c}: advance the a-side guard
            self.pos = {b, c}
        else:
            # z is an unoccupied end, so the middle is occupied
            self.pos = {a, c}

    def evict_vertex(self, z: int):
        if z not in self.pos:
            return
        a, b, c = self.a, self.b, self.c
        if z == a:
            self.pos = {b, c}
        elif z == c:
            self.pos = {a, b}
        else:
            self.pos = {a, c}

    def evict_edge(self, u: int, v: int):
        raise StrategyError("path core owns no cycle edge (%d, %d)" % (u, v))


class _CycleMachine:
    """ceil(n/3) guards rotating on a cycle.

    Vertex attacks rotate the whole configuration toward the attacked vertex;
    edge evictions either slide an existing gap onto the edge or peel the two
    incident guards outward. Vertex eviction evicts the ascending incident
    edge. All already-satisfied demands are answered in place.
    """

    __slots__ = ("ring", "index", "n", "count", "pos")

    def __init__(self, ring: Sequence[int], start: int = 0):
        self.ring = list(ring)
        self.n = len(self.ring)
        self.index = {v: i for i, v in enumerate(self.ring)}
        self.count = -(-self.n // 3)
        self.pos = set((start + 3 * t) % self.n for t in range(self.count))

    def config(self):
        return {self.ring[i] for i in self.pos}

    def state_key(self):
        return tuple(sorted(self.pos))

    def occupies(self, v: int) -> bool:
        return self.index[v] in self.pos

    def _rotate(self, d: int):
        n = self.n
        self.pos = {(i + d) % n for i in self.pos}

    def attack(self, z: int):
        i = self.index[z]
        if i in self.pos:
            return
        n = self.n
        if (i - 1) % n in self.pos:
            self._rotate(1)
        elif (i + 1) % n in self.pos:
            self._rotate(-1)
        else:
            raise AssertionError("cycle configuration lost domination")

    def evict_vertex(self, z: int):
        i = self.index[z]
        if i not in self.pos:
            return
        self.evict_edge(z, self.ring[(i + 1) % self.n])

    def evict_edge(self, u: int, v: int):
        n = self.n
        iu, iv = self.index[u], self.index[v]
        if (iu + 1) % n == iv:
            e, f = iu, iv
        elif (iv + 1) % n == iu:
            e, f = iv, iu
        else:
            raise StrategyError("(%d, %d) is not an edge of this cycle" % (u, v))
        pos = self.pos
        if e not in pos and f not in pos:
            return
        if n == 3:
            pos.clear()
            pos.add(3 - e - f)
            return
        d, g = (e - 1) % n, (f + 1) % n
        if d not in pos and e not in pos:
            self._rotate(1)
        elif f not in pos and g not in pos:
            self._rotate(-1)
        else:
            if e in pos:
                pos.discard(e)
                pos.add(d)
            if f in pos:
                pos.discard(f)
                pos.add(g)


class _ThreePanMachine:
    """Two guards on a triangle (v, x, y) with a leaf on x.

    g1 patrols the leaf edge; g2 covers v and y, parking on x (the only
    common neighbor) when the far triangle edge {v, y} is evicted.
    """

    __slots__ = ("v", "x", "y", "leaf", "g1", "g2")

    def __init__(self, v: int, x: int, y: int, leaf: int):
        self.v, self.x, self.y, self.leaf = v, x, y, leaf
        self.g1, self.g2 = x, v

    def config(self):
        return {self.g1, self.g2}

    def state_key(self):
        return (self.g1, self.g2)

    def attack(self, z: int):
        if z in (self.g1, self.g2):
            return
        if z == self.leaf:
            self.g1 = self.leaf
        elif z == self.x:
            if self.g2 == self.x:
                return
            self.g1 = self.x
        else:  # v or y: g2's zone (g2 is adjacent to both from anywhere)
            self.g2 = z

    def evict_vertex(self, z: int):
        if z == self.g1:
            self.g1 = self.leaf if z == self.x else self.x
            if self.g1 == self.g2:  # g2 parked on x: push it home first
                self.g2 = self.v
        elif z == self.g2:
            if z == self.v:
                self.g2 = self.y
            elif z == self.y:
                self.g2 = self.v
            else:  # parked on x
                self.g2 = self.v
        if self.g1 == self.g2:
            raise AssertionError("3-pan guards collided")

    def evict_edge(self, u: int, w: int):
        pair = {u, w}
        if pair == {self.x, self.v}:
            if self.g1 == self.x:
                self.g1 = self.leaf
            if self.g2 in pair:
                self.g2 = self.y
        elif pair == {self.x, self.y}:
            if self.g1 == self.x:
                self.g1 = self.leaf
            if self.g2 in pair:
                self.g2 = self.v
        elif pair == {self.v, self.y}:
            if self.g2 in pair:
                if self.g1 == self.x:
                    self.g1 = self.leaf
                self.g2 = self.x
        else:
            raise StrategyError("(%d, %d) is not a 3-pan cycle edge" % (u, w))


class _BullMachine:
    """Three guards on a bull: one per pendant pair, one floating on the
    triangle (v, x, y) with leaves on x and y."""

    __slots__ = ("v", "x", "y", "xl", "yl", "g1", "g2", "g3")

    def __init__(self, v: int, x: int, y: int, xl: int, yl: int):
        self.v, self.x, self.y, self.xl, self.yl = v, x, y, xl, yl
        self.g1, self.g2, self.g3 = x, y, v

    def config(self):
        return {self.g1, self.g2, self.g3}

    def state_key(self):
        return (self.g1, self.g2, self.g3)

    def attack(self, z: int):
        if z in (self.g1, self.g2, self.g3):
            return
        if z == self.xl:
            self.g1 = self.xl
        elif z == self.x:
            self.g1 = self.x
        elif z == self.yl:
            self.g2 = self.yl
        elif z == self.y:
            self.g2 = self.y
        else:
            self.g3 = self.v

    def evict_vertex(self, z: int):
        if z == self.x:
            if self.g3 == self.x:
                self.g3 = self.v
            if self.g1 == self.x:
                self.g1 = self.xl
        elif z == self.xl:
            if self.g1 == self.xl:
                if self.g3 == self.x:
                    self.g3 = self.v
                self.g1 = self.x
        elif z == self.y:
            if self.g3 == self.y:
                self.g3 = self.v
            if self.g2 == self.y:
                self.g2 = self.yl
        elif z == self.yl:
            if self.g2 == self.yl:
                if self.g3 == self.y:
                    self.g3 = self.v
                self.g2 = self.y
        elif z == self.v:
            if self.g3 == self.v:
                if self.g1 == self.xl:
                    self.g3 = self.x
                elif self.g2 == self.yl:
                    self.g3 = self.y
                else:
                    self.g1 = self.xl
                    self.g3 = self.x

    def evict_edge(self, u: int, w: int):
        pair = {u, w}
        if pair == {self.x, self.y}:
            if self.g1 == self.x:
                self.g1 = self.xl
            if self.g2 == self.y:
                self.g2 = self.yl
            if self.g3 in pair:
                self.g3 = self.v
        elif pair == {self.v, self.x}:
            if self.g1 == self.x:
                self.g1 = self.xl
            if self.g3 in pair:
                if self.g2 == self.y:
                    self.g2 = self.yl
                self.g3 = self.y
        elif pair == {self.v, self.y}:
            if self.g2 == self.y:
                self.g2 = self.yl
            if self.g3 in pair:
                if self.g1 == self.x:
                    self.g1 = self.xl
                self.g3 = self.x
        else:
            raise StrategyError("(%d, %d) is not a bull cycle edge" % (u, w))


# --------------------------------------------------------------------------
# gadget layers


class _CoreLayer:
    """Innermost layer: an elementary machine covering the whole residual."""

    def __init__(self, machine, vertices: set):
        self.machine = machine
        self.vertices = vertices

    def config(self):
        return self.machine.config()

    def state_key(self):
        return ("core", self.machine.state_key())

    def respond(self, atk: Attack):
        if atk.kind == ATTACK_VERTEX:
            self.machine.attack(atk.v)
        elif atk.kind == EVICT_VERTEX:
            self.machine.evict_vertex(atk.v)
        else:
            self.machine.evict_edge(atk.u, atk.v)

    def invariant_errors(self):
        return []


class _LeafPairLayer:
    """LeafEdgePair gadget: a private guard stays on the removed pair."""

    def __init__(self, leaf: int, mid: int, inner):
        self.leaf, self.mid = leaf, mid
        self.zone = {leaf, mid}
        self.machine = _EdgeMachine(leaf, mid, at=mid)
        self.inner = inner

    def config(self):
        return self.machine.config() | self.inner.config()

    def state_key(self):
        return ("pair", self.machine.state_key(), self.inner.state_key())

    def respond(self, atk: Attack):
        if atk.kind == EVICT_EDGE:
            ends = set(atk.endpoints())
            inside = ends & self.zone
            if not inside:
                self.inner.respond(atk)
            elif len(inside) == 1:
                z = inside.pop()
                self.machine.evict_vertex(z)
                self.inner.respond(Attack.evict_vertex((ends - {z}).pop()))
            else:
                raise StrategyError("eviction of the private pair edge is never routed here")
        elif atk.v in self.zone:
            if atk.kind == ATTACK_VERTEX:
                self.machine.attack(atk.v)
            else:
                self.machine.evict_vertex(atk.v)
        else:
            self.inner.respond(atk)

    def invariant_errors(self):
        if self.machine.pos not in self.zone:
            return ["leaf-pair guard left its edge"]
        return []


class _BullLayer:
    """Fused leaf-bull gadget: pendant pair plus leaf-edge pair (two guards),
    triangle evictions push both guards out while the junction is evicted
    below."""

    def __init__(self, x: int, xl: int, y: int, yl: int, junction: int, inner):
        self.x, self.xl, self.y, self.yl, self.junction = x, xl, y, yl, junction
        self.zone = {x, xl, y, yl}
        self.m1 = _EdgeMachine(xl, x, at=x)
        self.m2 = _EdgeMachine(yl, y, at=y)
        self.inner = inner

    def config(self):
        return self.m1.config() | self.m2.config() | self.inner.config()

    def state_key(self):
        return ("bull", self.m1.state_key(), self.m2.state_key(), self.inner.state_key())

    def _machine_for(self, z: int):
        return self.m1 if z in (self.x, self.xl) else self.m2

    def respond(self, atk: Attack):
        if atk.kind == EVICT_EDGE:
            ends = set(atk.endpoints())
            if ends == {self.x, self.y}:
                self.m1.evict_vertex(self.x)
                self.m2.evict_vertex(self.y)
                return
            if ends == {self.junction, self.x}:
                self.m1.evict_vertex(self.x)
                self.inner.respond(Attack.evict_vertex(self.junction))
                return
            if ends == {self.junction, self.y}:
                self.m2.evict_vertex(self.y)
                self.inner.respond(Attack.evict_vertex(self.junction))
                return
            if ends & self.zone:
                raise StrategyError("unexpected eviction %r at bull gadget" % (atk,))
            self.inner.respond(atk)
        elif atk.v in self.zone:
            m = self._machine_for(atk.v)
            if atk.kind == ATTACK_VERTEX:
                m.attack(atk.v)
            else:
                m.evict_vertex(atk.v)
        else:
            self.inner.respond(atk)

    def invariant_errors(self):
        errs = []
        if self.m1.pos not in (self.x, self.xl):
            errs.append("bull x-guard left its pair")
        if self.m2.pos not in (self.y, self.yl):
            errs.append("bull y-guard left its pair")
        return errs


class _PendantLayer:
    """PendantOnCycle gadget (cycle length >= 4 or leaf 3-pan shape).

    Virtual chord: articulation merge. Unrouted rounds keep the attachment
    guarded; rounds on the pair evict the chord below, so guards below never
    need the chord while the attachment is unguarded.

    Real chord with a bare corner: chord evictions put the inner guard that
    nominally defends the bare corner onto the attachment (the alias); it
    returns to its nominal vertex on the next response.
    """

    def __init__(self, leaf: int, attachment: int, chord: Tuple[int, int], chord_real: bool,
                 bare_corner: Optional[int], inner):
        self.leaf, self.attachment = leaf, attachment
        self.zone = {leaf, attachment}
        self.p, self.q = chord
        self.chord_real = chord_real
        self.bare = bare_corner
        if chord_real and bare_corner is None:
            raise StrategyError("triangle pendant without a bare corner cannot be synthesized alone")
        self.machine = _EdgeMachine(leaf, attachment, at=attachment)
        self.aliased = False
        self.inner = inner

    def config(self):
        cfg = self.inner.config()
        if self.aliased:
            cfg = (cfg - {self.bare}) | {self.attachment}
        return self.machine.config() | cfg

    def state_key(self):
        return ("pendant", self.machine.state_key(), self.aliased, self.inner.state_key())

    def _chord_attack(self) -> Attack:
        return Attack.evict_edge(self.p, self.q)

    def respond(self, atk: Attack):
        if atk.kind == EVICT_EDGE:
            ends = set(atk.endpoints())
            if ends == {self.p, self.q}:
                self._respond_chord_eviction()
                return
            inside = ends & self.zone
            if not inside:
                self._pass_down(atk)
                return
            if len(inside) == 2:
                raise StrategyError("eviction of the pendant edge is never routed here")
            z = inside.pop()
            if z != self.attachment:
                raise StrategyError("unexpected eviction %r at pendant gadget" % (atk,))
            other = (ends - {z}).pop()
            if self.aliased:
                # physical attachment holds the alias guard; moving the inner
                # guard off the far endpoint also clears or restores it
                if other == self.bare:
                    self.inner.respond(Attack.evict_vertex(self.bare))
                    self.aliased = False
                else:
                    self.inner.respond(Attack.evict_vertex(other))
                    self.aliased = False  # alias restored to its corner
            else:
                self.machine.evict_vertex(self.attachment)
                if self.chord_real:
                    self.inner.respond(Attack.evict_vertex(other))
                else:
                    self.inner.respond(self._chord_attack())
        elif atk.v in self.zone:
            if self.aliased:
                # machine sits on the leaf, alias guard on the attachment
                if atk.kind == ATTACK_VERTEX:
                    return  # both zone vertices are occupied
                if atk.v == self.leaf:
                    self.aliased = False  # alias returns to its corner
                    self.machine.evict_vertex(self.leaf)
                else:
                    self.aliased = False
                return
            if atk.kind == ATTACK_VERTEX:
                self.machine.attack(atk.v)
            else:
                self.machine.evict_vertex(atk.v)
            if not self.chord_real:
                self.inner.respond(self._chord_attack())
        else:
            self._pass_down(atk)

    def _respond_chord_eviction(self):
        if self.chord_real:
            other = self.q if self.bare == self.p else self.p
            self.inner.respond(Attack.evict_vertex(other))
            if self.bare not in self.inner.config():
                raise AssertionError("bare corner lost domination inside")
            self.machine.evict_vertex(self.attachment)
            self.aliased = True
        else:
            self.inner.respond(self._chord_attack())
            self.machine.attack(self.attachment)

    def _pass_down(self, atk: Attack):
        self.inner.respond(atk)
        if self.aliased:
            self.aliased = False  # restore: alias steps back or moved inside
        self.machine.attack(self.attachment)

    def invariant_errors(self):
        errs = []
        if self.machine.pos not in self.zone:
            errs.append("pendant guard left its pair")
        if not self.chord_real:
            inner_cfg = self.inner.config()
            if self.machine.pos != self.attachment and (self.p in inner_cfg or self.q in inner_cfg):
                errs.append("articulation merge invariant broken: attachment free with chord occupied")
        if self.aliased:
            if self.machine.pos != self.leaf:
                errs.append("alias active but machine not on the leaf")
            if self.bare not in self.inner.config():
                errs.append("alias active without a nominal guard on the bare corner")
        return errs


class _ShrinkLayer:
    """LeafCycleShrink gadget: full-cycle machine coupled to the residual
    pendant edge. The machine holds the articulation exactly when the
    surviving leaf is unoccupied below, so exactly one guard is shared."""

    def __init__(self, cycle: Sequence[int], survivor: int, inner):
        self.cycle = list(cycle)  # cycle[0] is the articulation
        self.v = self.cycle[0]
        self.survivor = survivor
        self.ring_set = set(self.cycle)
        self.zone = self.ring_set - {self.v, survivor}
        self.machine = _CycleMachine(self.cycle, start=0)
        self.inner = inner
        self._couple_machine()

    def _couple_machine(self):
        inner_cfg = self.inner.config()
        if self.survivor in inner_cfg:
            self.machine.evict_vertex(self.v)
        else:
            self.machine.attack(self.v)

    def config(self):
        return (self.inner.config() - {self.survivor}) | self.machine.config()

    def state_key(self):
        return ("shrink", self.machine.state_key(), self.inner.state_key())

    def _couple_inner(self):
        if self.machine.occupies(self.v):
            self.inner.respond(Attack.evict_vertex(self.survivor))
        else:
            self.inner.respond(Attack.vertex(self.survivor))

    def _ring_edge(self, ends: set) -> bool:
        if not ends <= self.ring_set:
            return False
        u, w = ends
        iu, iw = self.machine.index[u], self.machine.index[w]
        return (iu + 1) % self.machine.n == iw or (iw + 1) % self.machine.n == iu

    def respond(self, atk: Attack):
        if atk.kind == EVICT_EDGE:
            ends = set(atk.endpoints())
            if self._ring_edge(ends):
                self.machine.evict_edge(*ends)
                if self.v in ends:
                    self.inner.respond(Attack.evict_vertex(self.v))
                else:
                    self._couple_inner()
            elif ends & self.zone:
                raise StrategyError("unexpected eviction %r at shrink gadget" % (atk,))
            else:
                self.inner.respond(atk)
                self._couple_machine()
        elif atk.v in self.ring_set and atk.v != self.v:
            if atk.kind == ATTACK_VERTEX:
                self.machine.attack(atk.v)
            else:
                self.machine.evict_vertex(atk.v)
            self._couple_inner()
        else:
            self.inner.respond(atk)
            self._couple_machine()

    def invariant_errors(self):
        holds_v = self.machine.occupies(self.v)
        survivor_in = self.survivor in self.inner.config()
        if holds_v == survivor_in:
            return ["shrink coupling broken: articulation held %s, survivor occupied %s" % (holds_v, survivor_in)]
        return []


class _RemoveLayer:
    """LeafCycleRemove gadget: articulation merge between the residual and a
    cycle machine running on the removed interior closed by a virtual edge."""

    def __init__(self, cycle: Sequence[int], inner):
        self.v = cycle[0]
        self.interior = list(cycle[1:])
        self.zone = set(self.interior)
        # ring of the interior, closed between its two endpoints (the virtual
        # edge): guards never need it while the articulation is unguarded
        self.machine = _CycleMachine(self.interior, start=1)
        self.virtual = (self.interior[0], self.interior[-1])
        self.inner = inner

    def config(self):
        return self.inner.config() | self.machine.config()

    def state_key(self):
        return ("remove", self.machine.state_key(), self.inner.state_key())

    def _evict_virtual(self):
        self.machine.evict_edge(*self.virtual)

    def respond(self, atk: Attack):
        if atk.kind == EVICT_EDGE:
            ends = set(atk.endpoints())
            if ends <= self.zone:
                self.machine.evict_edge(*ends)
                self.inner.respond(Attack.vertex(self.v))
            elif self.v in ends and ends & self.zone:
                self.inner.respond(Attack.evict_vertex(self.v))
                self._evict_virtual()
            elif ends & self.zone:
                raise StrategyError("unexpected eviction %r at remove gadget" % (atk,))
            else:
                self.inner.respond(atk)
                self._evict_virtual()
        elif atk.v in self.zone:
            if atk.kind == ATTACK_VERTEX:
                self.machine.attack(atk.v)
            else:
                self.machine.evict_vertex(atk.v)
            self.inner.respond(Attack.vertex(self.v))
        else:
            self.inner.respond(atk)
            self._evict_virtual()

    def invariant_errors(self):
        if self.v in self.inner.config():
            return []
        m = self.machine
        if m.occupies(self.virtual[0]) or m.occupies(self.virtual[1]):
            return ["articulation merge invariant broken: virtual edge occupied with anchor free"]
        return []


# --------------------------------------------------------------------------
# engine


def _build_core(detail: dict) -> _CoreLayer:
    kind = detail["elementary"]
    if kind == SINGLE_VERTEX:
        v = detail["vertex"]
        return _CoreLayer(_VertexMachine(v), {v})
    if kind == SINGLE_EDGE:
        u, v = detail["edge"]
        return _CoreLayer(_EdgeMachine(u, v, at=min(u, v)), {u, v})
    if kind == PATH_THREE:
        a, b, c = detail["path"]
        return _CoreLayer(_PathThreeMachine(a, b, c), {a, b, c})
    if kind == CYCLE:
        ring = detail["cycle"]
        return _CoreLayer(_CycleMachine(ring), set(ring))
    if kind == THREE_PAN:
        x = detail["carrier"]
        v, y = sorted(set(detail["triangle"]) - {x})
        return _CoreLayer(_ThreePanMachine(v, x, y, detail["leaf"]), set(detail["triangle"]) | {detail["leaf"]})
    if kind == BULL:
        v, x, y = detail["triangle"]
        leaf_of = detail["leaf_of"]
        verts = {v, x, y} | set(leaf_of.values())
        return _CoreLayer(_BullMachine(v, x, y, leaf_of[x], leaf_of[y]), verts)
    raise StrategyError("unknown elementary core %r" % (kind,))


class DefenderEngine:
    """Stateful defender for a Christmas cactus, one session per engine.

    guard_count equals the reduction total; every response keeps the
    configuration duplicate-free and dominating, answers the attack, and is
    traversable from the previous configuration (verified externally).
    """

    def __init__(self, graph: Graph, trace: ReductionTrace):
        if trace.input_n != graph.n:
            raise StrategyError("trace was computed for a different graph")
        self.graph = graph
        self.trace = trace
        self.guard_count = trace.total
        self.cycle_edges = cycle_edges(graph)
        self._root = self._build()
        self.current = tuple(sorted(self._root.config()))
        if len(self.current) != self.guard_count:
            raise StrategyError(
                "initial configuration has %d guards, expected %d" % (len(self.current), self.guard_count)
            )

    def _build(self):
        steps = list(self.trace.steps)
        if not steps or steps[-1].kind != ELEMENTARY_FINISH:
            raise StrategyError("trace does not end in an elementary residual")
        layer = _build_core(steps[-1].detail)
        i = len(steps) - 2
        while i >= 0:
            s = steps[i]
            if s.kind == LEAF_EDGE_PAIR:
                prev = steps[i - 1] if i > 0 else None
                if (
                    prev is not None
                    and prev.kind == PENDANT_ON_CYCLE
                    and prev.detail.get("bull_corner") is not None
                    and prev.detail["bull_corner"] == s.detail["middle"]
                ):
                    pd = prev.detail
                    chord = set(pd["chord"])
                    junction = (chord - {pd["bull_corner"]}).pop()
                    layer = _BullLayer(
                        x=pd["attachment"],
                        xl=pd["leaf"],
                        y=s.detail["middle"],
                        yl=s.detail["leaf"],
                        junction=junction,
                        inner=layer,
                    )
                    i -= 2
                    continue
                layer = _LeafPairLayer(s.detail["leaf"], s.detail["middle"], layer)
            elif s.kind == PENDANT_ON_CYCLE:
                layer = _PendantLayer(
                    leaf=s.detail["leaf"],
                    attachment=s.detail["attachment"],
                    chord=s.detail["chord"],
                    chord_real=s.detail["chord_real"],
                    bare_corner=s.detail["bare_corner"],
                    inner=layer,
                )
            elif s.kind == LEAF_CYCLE_SHRINK:
                layer = _ShrinkLayer(s.detail["cycle"], s.detail["survivor"], layer)
            elif s.kind == LEAF_CYCLE_REMOVE:
                layer = _RemoveLayer(s.detail["cycle"], layer)
            else:
                raise StrategyError("unexpected step kind %r" % (s.kind,))
            i -= 1
        return layer

    def reset(self):
        self._root = self._build()
        self.current = tuple(sorted(self._root.config()))

    def state_key(self):
        return self._root.state_key()

    def validate_attack(self, atk: Attack):
        n = self.graph.n
        for v in atk.endpoints():
            if not (0 <= v < n):
                raise StrategyError("vertex %d out of range" % v)
        if atk.kind == EVICT_VERTEX and n == 1:
            raise StrategyError("cannot evict the only vertex")
        if atk.kind == EVICT_EDGE:
            e = (min(atk.u, atk.v), max(atk.u, atk.v))
            if e not in self.cycle_edges:
                raise StrategyError("edge %r is not on a cycle" % (e,))

    def respond(self, atk: Attack) -> Tuple[int, ...]:
        self.validate_attack(atk)
        self._root.respond(atk)
        self.current = tuple(sorted(self._root.config()))
        return self.current

    def layers(self):
        out = []
        node = self._root
        while node is not None:
            out.append(node)
            node = getattr(node, "inner", None)
        return out

    def invariant_errors(self):
        errs = []
        for layer in self.layers():
            errs.extend(layer.invariant_errors())
        return errs


def synthesize(g: Graph, trace: ReductionTrace) -> DefenderEngine:
    """Build the defender engine for g from its reduction trace."""
    return DefenderEngine(g, trace)


# --------------------------------------------------------------------------
# verification


@dataclass
class VerificationReport:
    trials: int
    length: int
    responses: int = 0
    distinct_configs: int = 0
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_response(g: Graph, nmask, full_mask: int, before, after, atk: Attack, guard_count: int):
    """The four per-response checks: order and duplicates, attack
    satisfaction, domination, traversability. Returns a list of violations."""
    problems = []
    if len(after) != guard_count or len(set(after)) != guard_count:
        problems.append("configuration %r is not %d distinct guards" % (after, guard_count))
    if atk.kind == ATTACK_VERTEX and atk.v not in after:
        problems.append("attack on %d not answered in %r" % (atk.v, after))
    if atk.kind == EVICT_VERTEX and atk.v in after:
        problems.append("eviction of %d not honored in %r" % (atk.v, after))
    if atk.kind == EVICT_EDGE and (atk.v in after or atk.u in after):
        problems.append("edge eviction %r not honored in %r" % ((atk.u, atk.v), after))
    cover = 0
    for v in after:
        cover |= nmask[v]
    if cover != full_mask:
        problems.append("configuration %r is not dominating" % (after,))
    if not traversable(g, tuple(before), tuple(after), nmask=nmask):
        problems.append("move %r -> %r is not traversable" % (before, after))
    return problems


def applicable_attacks(g: Graph, with_evictions: bool = True) -> List[Attack]:
    attacks = [Attack.vertex(v) for v in range(g.n)]
    if with_evictions and g.n >= 2:
        attacks.extend(Attack.evict_vertex(v) for v in range(g.n))
        attacks.extend(Attack.evict_edge(u, v) for (u, v) in sorted(cycle_edges(g)))
    return attacks


def verify_strategy(
    g: Graph,
    engine: DefenderEngine,
    trials: int,
    length: int,
    seed: int,
    with_evictions: bool = True,
    max_violations: int = 20,
) -> VerificationReport:
    """Drive the engine through random attack sequences and check every
    response for domination, satisfaction, traversability and duplicates.
    Violations are data for the report, not exceptions."""
    report = VerificationReport(trials=trials, length=length)
    attacks = applicable_attacks(g, with_evictions)
    nmask = closed_neighborhood_masks(g)
    full = (1 << g.n) - 1
    rng = random.Random(seed)
    seen = set()
    for _ in range(trials):
        engine.reset()
        before = engine.current
        seen.add(before)
        for _ in range(length):
            atk = rng.choice(attacks)
            after = engine.respond(atk)
            report.responses += 1
            seen.add(after)
            problems = check_response(g, nmask, full, before, after, atk, engine.guard_count)
            problems.extend(engine.invariant_errors())
            if problems:
                report.violations.extend("%r after %r: %s" % (atk, before, p) for p in problems)
                if len(report.violations) >= max_violations:
                    report.distinct_configs = len(seen)
                    return report
            before = after
    report.distinct_configs = len(seen)
    return report


def exhaustive_check(g: Graph, engine: DefenderEngine, with_evictions: bool = True, max_states: int = 200000):
    """Explore the engine's whole reachable state graph, checking every
    response to every applicable attack. Returns the list of violations."""
    attacks = applicable_attacks(g, with_evictions)
    nmask = closed_neighborhood_masks(g)
    full = (1 << g.n) - 1
    engine.reset()
    start = copy.deepcopy(engine)
    frontier = [start]
    seen = {start.state_key()}
    violations = []
    while frontier:
        state = frontier.pop()
        for atk in attacks:
            nxt = copy.deepcopy(state)
            before = nxt.current
            try:
                after = nxt.respond(atk)
            except Exception as exc:  # a routing hole is a finding, not a crash
                violations.append("%r from %r raised %s: %s" % (atk, before, type(exc).__name__, exc))
                continue
            problems = check_response(g, nmask, full, before, after, atk, nxt.guard_count)
            problems.extend(nxt.invariant_errors())
            violations.extend("%r from %r: %s" % (atk, before, p) for p in problems)
            key = nxt.state_key()
            if key not in seen:
                if len(seen) >= max_states:
                    violations.append("state budget exceeded")
                    return violations
                seen.add(key)
                frontier.append(nxt)
    return violations
