"""Stateless HTTP/JSON service exposing the engine to the web UI.

Puzzle identity lives in the descriptor; play progress lives in the
client. Malformed payloads get 400 with field-level messages, semantic
problems (arity mismatch, labeling shape, out-of-range arity) get 422.
"""

from __future__ import annotations

import hashlib
import random
from itertools import product as iter_product

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import game as game_mod
from .magma import INF, LABELS, evaluate, label_from_json
from .tamari import decompose, is_prime_interval
from .trees import ArityError, Tree, TreeSyntaxError, enumerate_trees, parse
from .version import __version__

SERVICE_MAX_ARITY = 10
PUZZLE_SAMPLE_ATTEMPTS = 4096


class ApiError(Exception):
    def __init__(self, status: int, message: str, field: str | None = None):
        self.status = status
        self.message = message
        self.field = field


class GameIn(BaseModel):
    s: str
    t: str


class VerifyIn(BaseModel):
    game: GameIn
    labels: dict[str, int | str | None]


class HintIn(BaseModel):
    game: GameIn
    leaves: list[int | None]


class SolveIn(BaseModel):
    game: GameIn
    target: int | None = None


def _parse_game(payload: GameIn) -> game_mod.YYGraph:
    try:
        s = parse(payload.s)
    except TreeSyntaxError as exc:
        raise ApiError(400, str(exc), field="game.s")
    except ArityError as exc:
        raise ApiError(422, str(exc), field="game.s")
    try:
        t = parse(payload.t)
    except TreeSyntaxError as exc:
        raise ApiError(400, str(exc), field="game.t")
    except ArityError as exc:
        raise ApiError(422, str(exc), field="game.t")
    if s.arity != t.arity:
        raise ApiError(422, f"arity mismatch: {s.arity} vs {t.arity}")
    if s.arity > SERVICE_MAX_ARITY:
        raise ApiError(
            422, f"service handles arity up to {SERVICE_MAX_ARITY}, got {s.arity}"
        )
    return game_mod.make_graph(s, t)


def puzzle_id(s: Tree, t: Tree) -> str:
    digest = hashlib.sha256(f"{s.canonical}|{t.canonical}".encode())
    return digest.hexdigest()[:16]


def descriptor(s: Tree, t: Tree) -> dict:
    return {
        "game": {"s": s.canonical, "t": t.canonical},
        "arity": s.arity,
        "prime": is_prime_interval(s, t),
        "id": puzzle_id(s, t),
    }


def _complete(g: game_mod.YYGraph, leaves: list[int | None]):
    """First full extension of a partial leaf assignment that solves the
    game, scanning free positions in lexicographic order."""
    free = [i for i, v in enumerate(leaves) if v is None]
    for choice in iter_product(LABELS, repeat=len(free)):
        xs = list(leaves)
        for pos, v in zip(free, choice):
            xs[pos] = v
        a = evaluate(g.s, xs)
        if a != INF and evaluate(g.t, xs) == a:
            return tuple(xs), a
    return None


def hint_for(g: game_mod.YYGraph, leaves: list[int | None]) -> dict:
    """Smallest label on the minimal-index unassigned leaf that keeps the
    board completable; deterministic and test-friendly."""
    if len(leaves) != g.arity:
        raise ApiError(
            422, f"leaves length {len(leaves)} does not match arity {g.arity}"
        )
    unassigned = [i for i, v in enumerate(leaves) if v is None]
    if not unassigned:
        raise ApiError(422, "no unassigned leaves to hint")
    i = unassigned[0]
    for v in LABELS:
        attempt = list(leaves)
        attempt[i] = v
        if _complete(g, attempt) is not None:
            return {"completable": True, "leaf": i + 1, "label": v}
    return {"completable": False, "leaf": None, "label": None}


def create_app() -> FastAPI:
    app = FastAPI(title="yygame", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(ApiError)
    async def on_api_error(request: Request, exc: ApiError):
        body = {"error": exc.message}
        if exc.field:
            body["field"] = exc.field
        return JSONResponse(status_code=exc.status, content=body)

    @app.exception_handler(RequestValidationError)
    async def on_validation_error(request: Request, exc: RequestValidationError):
        details = [
            {
                "field": ".".join(str(p) for p in err["loc"]),
                "message": err["msg"],
            }
            for err in exc.errors()
        ]
        return JSONResponse(
            status_code=400,
            content={"error": "malformed payload", "details": details},
        )

    @app.get("/api/health")
    async def health():
        return {"service": "yygame", "version": __version__}

    @app.get("/api/puzzle")
    async def puzzle(
        arity: int = Query(...),
        prime: bool | None = Query(default=None),
        seed: int = Query(default=0),
    ):
        if not 1 <= arity <= SERVICE_MAX_ARITY:
            raise ApiError(
                422, f"arity must be in 1..{SERVICE_MAX_ARITY}, got {arity}"
            )
        trees = enumerate_trees(arity)
        rng = random.Random(seed)
        k = len(trees)
        for _ in range(min(PUZZLE_SAMPLE_ATTEMPTS, 4 * k * k)):
            s = trees[rng.randrange(k)]
            t = trees[rng.randrange(k)]
            if prime is None or is_prime_interval(s, t) == prime:
                return descriptor(s, t)
        raise ApiError(422, "no puzzle matches the requested filter")

    @app.post("/api/verify")
    async def verify_endpoint(payload: VerifyIn):
        g = _parse_game(payload.game)
        labels = {}
        for edge, raw in payload.labels.items():
            if raw is None:
                labels[edge] = None
                continue
            try:
                labels[edge] = label_from_json(raw)
            except ValueError as exc:
                raise ApiError(400, str(exc), field=f"labels.{edge}")
        try:
            verdict = game_mod.verify(g, labels)
        except ValueError as exc:
            raise ApiError(422, str(exc), field="labels")
        return verdict.to_json()

    @app.post("/api/hint")
    async def hint_endpoint(payload: HintIn):
        g = _parse_game(payload.game)
        for idx, v in enumerate(payload.leaves):
            if v is not None and v not in LABELS:
                raise ApiError(400, f"not a label: {v!r}", field=f"leaves.{idx}")
        return hint_for(g, payload.leaves)

    @app.post("/api/solve")
    async def solve_endpoint(payload: SolveIn):
        g = _parse_game(payload.game)
        if payload.target is not None and payload.target not in LABELS:
            raise ApiError(400, f"not a label: {payload.target!r}", field="target")
        sol = game_mod.solve(g, payload.target)
        return {"solution": None if sol is None else sol.to_json()}

    @app.get("/api/decompose")
    async def decompose_endpoint(s: str = Query(...), t: str = Query(...)):
        g = _parse_game(GameIn(s=s, t=t))
        return decompose(g.s, g.t).to_json()

    return app
