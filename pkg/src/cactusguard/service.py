"""Session-oriented HTTP API around the defender engine.

The attacker (browser console or scripts) creates a session from a graph
document, then posts attacks and receives the defender's configuration plus
per-guard movement pairs for animation. Christmas cacti get the synthesized
linear strategy; other graphs within the oracle budget get a safety-game
witness strategy. Sessions live in memory and expire when idle.
"""

from __future__ import annotations

import time
import uuid
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from fastapi import FastAPI, HTTPException
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .graph import Graph, GraphFormatError, GraphKind, classify, cycle_edges, parse_graph
from .layout import radial_layout
from .oracle import (
    Attack,
    GameVariant,
    OracleBudgetError,
    StrategyWitness,
    closed_neighborhood_masks,
    exact_number,
    solve_safety,
)
from .reduction import meden_christmas_cactus
from .strategy import StrategyError, check_response, synthesize


class _WitnessDefender:
    """Defender driven by a safety-game witness (non-Christmas graphs)."""

    def __init__(self, graph: Graph, witness: StrategyWitness):
        self.graph = graph
        self.witness = witness
        self.guard_count = witness.order
        self.state = 0
        self.current = witness.configs[0]

    def reset(self):
        self.state = 0
        self.current = self.witness.configs[0]

    def respond(self, atk: Attack) -> Tuple[int, ...]:
        nxt = self.witness.successors.get((self.state, atk))
        if nxt is None:
            raise StrategyError("attack %r is outside this witness's attack set" % (atk,))
        self.state = nxt
        self.current = self.witness.configs[nxt]
        return self.current


@dataclass
class Session:
    id: str
    graph: Graph
    variant: GameVariant
    defender: object
    initial: Tuple[int, ...]
    cyc_edges: set
    layout: dict
    history: List[dict] = field(default_factory=list)
    last_access: float = field(default_factory=time.monotonic)


class CreateSessionBody(BaseModel):
    graph: str
    variant: str = "ede"
    # strategy: Christmas cacti only; oracle: witness play on any small
    # graph; auto: strategy when possible, witness otherwise
    mode: str = "auto"


class AttackBody(BaseModel):
    type: str
    v: int
    u: Optional[int] = None


def lexicographic_moves(g: Graph, before, after) -> List[dict]:
    """Per-guard movement pairs for animation: the lexicographically
    smallest perfect matching of the traversability relation (guards in
    ascending order each take the smallest target that keeps a perfect
    matching possible for the rest)."""
    nmask = closed_neighborhood_masks(g)
    before = sorted(before)
    after_l = sorted(after)
    k = len(before)
    allowed = [[t for t in after_l if (nmask[s] >> t) & 1] for s in before]

    def feasible(from_guard: int, taken: set) -> bool:
        matched = {}

        def augment(j: int, seen: set) -> bool:
            for t in allowed[j]:
                if t in taken or t in seen:
                    continue
                seen.add(t)
                if t not in matched or augment(matched[t], seen):
                    matched[t] = j
                    return True
            return False

        return all(augment(j, set()) for j in range(from_guard, k))

    taken: set = set()
    chosen = []
    for i in range(k):
        placed = False
        for t in allowed[i]:
            if t in taken:
                continue
            taken.add(t)
            if feasible(i + 1, taken):
                chosen.append({"from": before[i], "to": t})
                placed = True
                break
            taken.discard(t)
        if not placed:
            raise StrategyError("no movement matching from %r to %r" % (before, after))
    return chosen


def create_app(idle_timeout: float = 1800.0) -> FastAPI:
    app = FastAPI(title="cactusguard attack service")
    sessions: Dict[str, Session] = {}

    def sweep():
        now = time.monotonic()
        stale = [sid for sid, s in sessions.items() if now - s.last_access > idle_timeout]
        for sid in stale:
            del sessions[sid]

    def get_session(sid: str) -> Session:
        sweep()
        s = sessions.get(sid)
        if s is None:
            raise HTTPException(status_code=404, detail="unknown session")
        s.last_access = time.monotonic()
        return s

    def describe(s: Session) -> dict:
        return {
            "id": s.id,
            "n": s.graph.n,
            "edges": [[u, v] for u, v in s.graph.edges()],
            "cycle_edges": [[u, v] for u, v in sorted(s.cyc_edges)],
            "layout": s.layout,
            "guards": s.defender.guard_count,
            "configuration": list(s.defender.current),
            "variant": s.variant.value,
        }

    @app.get("/health")
    def health():
        return {"status": "ok", "sessions": len(sessions)}

    @app.post("/sessions", status_code=201)
    def create_session(body: CreateSessionBody):
        sweep()
        try:
            variant = GameVariant(body.variant)
        except ValueError:
            raise HTTPException(status_code=400, detail="unknown variant %r" % body.variant)
        try:
            g = parse_graph(body.graph)
        except GraphFormatError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        if body.mode not in ("auto", "strategy", "oracle"):
            raise HTTPException(status_code=400, detail="unknown mode %r" % body.mode)
        try:
            cls = classify(g)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        use_strategy = cls.kind is GraphKind.CHRISTMAS_CACTUS and body.mode in ("auto", "strategy")
        if body.mode == "strategy" and not use_strategy:
            raise HTTPException(
                status_code=422,
                detail="strategy mode needs a Christmas cactus; this graph is %s" % cls.kind.value,
            )
        if use_strategy:
            _, trace = meden_christmas_cactus(g)
            defender = synthesize(g, trace)
        else:
            try:
                order = exact_number(g, variant)
                witness = solve_safety(g, order, variant)
            except OracleBudgetError as exc:
                raise HTTPException(status_code=422, detail="oracle-witness mode unavailable: %s" % exc)
            defender = _WitnessDefender(g, witness)
        sid = uuid.uuid4().hex[:12]
        s = Session(
            id=sid,
            graph=g,
            variant=variant,
            defender=defender,
            initial=tuple(defender.current),
            cyc_edges=cycle_edges(g),
            layout={str(v): [round(x, 4), round(y, 4)] for v, (x, y) in radial_layout(g).items()},
        )
        sessions[sid] = s
        return describe(s)

    @app.post("/sessions/{sid}/attack")
    def post_attack(sid: str, body: AttackBody):
        s = get_session(sid)
        if body.type == "vertex":
            atk = Attack.vertex(body.v)
        elif body.type == "evict-vertex":
            atk = Attack.evict_vertex(body.v)
        elif body.type == "evict-edge":
            if body.u is None:
                raise HTTPException(status_code=400, detail="evict-edge needs both endpoints")
            atk = Attack.evict_edge(body.u, body.v)
        else:
            raise HTTPException(status_code=400, detail="unknown attack type %r" % body.type)
        if atk.kind != "attack" and s.variant is not GameVariant.EDE:
            raise HTTPException(status_code=409, detail="evictions are only playable in EDE sessions")
        for v in atk.endpoints():
            if not (0 <= v < s.graph.n):
                raise HTTPException(status_code=409, detail="vertex %d out of range" % v)
        if atk.kind == "evict-edge":
            e = (min(atk.u, atk.v), max(atk.u, atk.v))
            if e not in s.cyc_edges:
                raise HTTPException(status_code=409, detail="edge %r is not on a cycle" % (e,))
        if atk.kind == "evict-vertex" and s.graph.n == 1:
            raise HTTPException(status_code=409, detail="cannot evict the only vertex")
        before = tuple(s.defender.current)
        try:
            after = s.defender.respond(atk)
        except StrategyError as exc:
            raise HTTPException(status_code=409, detail=str(exc))
        nmask = closed_neighborhood_masks(s.graph)
        problems = check_response(
            s.graph, nmask, (1 << s.graph.n) - 1, before, after, atk, s.defender.guard_count
        )
        if problems:
            raise HTTPException(status_code=500, detail="defender produced an invalid response: %s" % problems)
        moves = lexicographic_moves(s.graph, before, after)
        s.history.append({"attack": {"type": body.type, "v": body.v, "u": body.u}, "configuration": list(after)})
        return {"configuration": list(after), "moves": moves}

    @app.get("/sessions/{sid}")
    def get_state(sid: str):
        s = get_session(sid)
        out = describe(s)
        out["history_length"] = len(s.history)
        out["history"] = s.history
        out["initial"] = list(s.initial)
        return out

    @app.post("/sessions/{sid}/reset")
    def reset(sid: str):
        s = get_session(sid)
        s.defender.reset()
        s.history.clear()
        return describe(s)

    return app


def serve(port: int = 8000, static_dir: Optional[str] = None, idle_timeout: float = 1800.0):
    import uvicorn

    app = create_app(idle_timeout=idle_timeout)
    if static_dir:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="console")
    uvicorn.run(app, host="127.0.0.1", port=port, log_level="warning")
