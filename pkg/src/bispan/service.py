"""HTTP JSON API for the edge recoloring game.

Sessions live in process memory only. Session ids are 128-bit random hex
strings; the default RNG seed comes from the BISPAN_SEED environment
variable when set.
"""

from __future__ import annotations

import os
import secrets
import threading
from typing import Optional

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from .bispanning import BLUE, pair_from_coloring
from .catalog import catalog_names, named_graph
from .core import parse_edge_list
from .errors import (
    BispanError,
    EmptyHistory,
    IllegalFix,
    NotBispanning,
    UnknownEdge,
    UnknownName,
    WrongPhase,
)
from .game import (
    GameState,
    alice_flip,
    bob_auto,
    bob_fix,
    hint,
    new_game,
    undo,
)


class NewGameRequest(BaseModel):
    graph: Optional[str] = None      # edge-list text with b/r colors
    named: Optional[str] = None      # catalog name
    policy: str = "adversarial"
    seed: Optional[int] = None


class EdgeRequest(BaseModel):
    edge: int


def state_json(s: GameState) -> dict:
    edges = [
        {"id": e, "u": u, "v": v,
         "color": "blue" if e in s.current.S else "red"}
        for e, u, v in sorted(s.g.edges)
    ]
    out = {
        "n": s.g.n,
        "edges": edges,
        "phase": s.phase,
        "history": [[e, f] for e, f in s.history],
        "won": s.won,
        "target_distance": s.target_distance,
    }
    if s.pending is not None:
        out["pending"] = {
            "edge": s.pending.edge,
            "cycle": sorted(s.pending.cycle),
            "cut": sorted(s.pending.cut),
            "candidates": sorted(s.pending.candidates),
            "forced": s.pending.forced,
        }
    return out


def create_app() -> FastAPI:
    app = FastAPI(title="bispan game service")
    # the web client may be served from another origin
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])
    store: dict[str, GameState] = {}
    locks: dict[str, threading.Lock] = {}
    store_lock = threading.Lock()

    def get_state(sid: str) -> GameState:
        s = store.get(sid)
        if s is None:
            raise HTTPException(404, "unknown session")
        return s

    def mutate(sid: str, fn):
        with store_lock:
            lock = locks.setdefault(sid, threading.Lock())
        with lock:
            s = get_state(sid)
            try:
                s2 = fn(s)
            except WrongPhase as ex:
                raise HTTPException(409, str(ex))
            except (UnknownEdge, IllegalFix, EmptyHistory) as ex:
                raise HTTPException(422, str(ex))
            store[sid] = s2
            return s2

    @app.post("/game")
    def post_game(req: NewGameRequest):
        try:
            if req.named is not None:
                g, tp = named_graph(req.named)
            elif req.graph is not None:
                g, colors = parse_edge_list(req.graph)
                tp = pair_from_coloring(g, colors)
            else:
                raise HTTPException(422, "need 'graph' or 'named'")
        except UnknownName as ex:
            raise HTTPException(422, str(ex))
        except (ValueError, NotBispanning, BispanError) as ex:
            raise HTTPException(422, str(ex))
        seed = req.seed
        if seed is None:
            seed = int(os.environ.get("BISPAN_SEED", "0"))
        try:
            s = new_game(g, tp, req.policy, seed)
        except BispanError as ex:
            raise HTTPException(422, str(ex))
        sid = secrets.token_hex(16)
        with store_lock:
            store[sid] = s
        return {"id": sid, "state": state_json(s)}

    @app.get("/game/{sid}")
    def get_game(sid: str):
        return state_json(get_state(sid))

    @app.post("/game/{sid}/flip")
    def post_flip(sid: str, req: EdgeRequest):
        return state_json(mutate(sid, lambda s: alice_flip(s, req.edge)))

    @app.post("/game/{sid}/fix")
    def post_fix(sid: str, req: EdgeRequest):
        return state_json(mutate(sid, lambda s: bob_fix(s, req.edge)))

    @app.post("/game/{sid}/auto")
    def post_auto(sid: str):
        picked = {}

        def step(s):
            f, s2 = bob_auto(s)
            picked["edge"] = f
            return s2

        out = state_json(mutate(sid, step))
        out["fixed"] = picked["edge"]
        return out

    @app.post("/game/{sid}/undo")
    def post_undo(sid: str):
        return state_json(mutate(sid, undo))

    @app.get("/game/{sid}/hint")
    def get_hint(sid: str):
        return {"edge": hint(get_state(sid))}

    @app.get("/graphs/named")
    def get_named():
        out = []
        for name in catalog_names():
            g, tp = named_graph(name)
            out.append({
                "name": name,
                "n": g.n,
                "m": g.m,
                "edges": [
                    {"id": e, "u": u, "v": v,
                     "color": BLUE if e in tp.S else "red"}
                    for e, u, v in sorted(g.edges)
                ],
            })
        return out

    return app


app = create_app()
