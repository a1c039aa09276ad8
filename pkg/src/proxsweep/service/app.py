"""FastAPI service wrapping the core package.

Indexes are built (or imported in PROXIDX form) once, held immutably in
memory under an id, and searched by any number of concurrent clients. The
``prox`` CLI offers the same operations against files for one-shot use.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import asdict

from fastapi import FastAPI, HTTPException, Request
from fastapi.responses import PlainTextResponse

from ..index import PositionalIndex, build_index, compute_wsim, from_text, to_text, tokenize
from ..metrics import ALGORITHMS, BenchConfig, run_bench
from ..sweep import Interval, Query, SweepResult
from . import schemas


def _summary(index_id: str, index: PositionalIndex) -> schemas.IndexSummary:
    return schemas.IndexSummary(
        index_id=index_id,
        token_count=index.token_count,
        total_occurrences=index.total_occurrences,
        alpha=index.alpha,
        wsim=compute_wsim(index),
    )


def _interval_out(iv: Interval) -> schemas.IntervalOut:
    return schemas.IntervalOut(start=iv.start, end=iv.end, size=iv.size)


def _search_response(result: SweepResult, top: int | None) -> schemas.SearchResponse:
    intervals = result.criticals
    if top is not None:
        intervals = sorted(intervals, key=lambda iv: (iv.size, iv.start))[:top]
    s = result.stats
    return schemas.SearchResponse(
        intervals=[_interval_out(iv) for iv in intervals],
        minimal=_interval_out(result.minimal) if result.minimal else None,
        stats=schemas.StatsOut(
            comparisons=s.comparisons,
            beta=s.beta,
            gamma=s.gamma,
            cn=s.cn,
            ranges_examined=s.ranges_examined,
            ranges_emitted=s.ranges_emitted,
        ),
    )


def create_app() -> FastAPI:
    app = FastAPI(title="proxsweep", version="0.1.0")
    indexes: dict[str, PositionalIndex] = {}
    ids = itertools.count(1)
    lock = threading.Lock()

    def register(index: PositionalIndex) -> str:
        with lock:
            index_id = f"idx-{next(ids)}"
            indexes[index_id] = index
        return index_id

    def get_index(index_id: str) -> PositionalIndex:
        try:
            return indexes[index_id]
        except KeyError:
            raise HTTPException(status_code=404, detail=f"no such index: {index_id}") from None

    @app.post("/indexes", response_model=schemas.IndexSummary, status_code=201)
    def create_index(req: schemas.CreateIndexRequest) -> schemas.IndexSummary:
        text = req.text.lower() if req.lowercase else req.text
        index = build_index(tokenize(text, req.mode))
        if index.token_count == 0:
            raise HTTPException(status_code=400, detail="empty index")
        return _summary(register(index), index)

    @app.post("/indexes/import", response_model=schemas.IndexSummary, status_code=201)
    async def import_index(request: Request) -> schemas.IndexSummary:
        data = (await request.body()).decode("utf-8")
        try:
            index = from_text(data)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None
        if index.token_count == 0:
            raise HTTPException(status_code=400, detail="empty index")
        return _summary(register(index), index)

    @app.get("/indexes/{index_id}", response_model=schemas.IndexSummary)
    def index_summary(index_id: str) -> schemas.IndexSummary:
        return _summary(index_id, get_index(index_id))

    @app.get("/indexes/{index_id}/file", response_class=PlainTextResponse)
    def export_index(index_id: str) -> str:
        return to_text(get_index(index_id))

    @app.post("/indexes/{index_id}/search", response_model=schemas.SearchResponse)
    def search(index_id: str, req: schemas.SearchRequest) -> schemas.SearchResponse:
        index = get_index(index_id)
        try:
            query = Query(req.keywords, freqs=req.freqs, threshold=req.threshold)
            result = ALGORITHMS[req.algo](index, query)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None
        return _search_response(result, req.top)

    @app.post("/corpus", response_model=schemas.GenerateResponse)
    def corpus(req: schemas.GenerateRequest) -> schemas.GenerateResponse:
        from ..testkit import generate_corpus

        try:
            tokens = generate_corpus(req.seed, req.size, req.alphabet_size, req.wsim_target)
        except (ValueError, RuntimeError) as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None
        alpha = sum(1 for a, b in zip(tokens, tokens[1:]) if a == b)
        return schemas.GenerateResponse(text="".join(tokens), wsim_actual=alpha / req.size)

    @app.post("/bench", response_model=schemas.BenchResponse)
    def bench(req: schemas.BenchRequest) -> schemas.BenchResponse:
        config = BenchConfig(
            sizes=tuple(req.sizes),
            wsim_levels=tuple(req.wsim),
            algos=tuple(req.algos),
            seeds=req.seeds,
            k=req.k,
            alphabet_size=req.alphabet_size,
        )
        try:
            records = run_bench(config)
        except (ValueError, RuntimeError) as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None
        return schemas.BenchResponse(
            records=[schemas.BenchRecordOut(**asdict(r)) for r in records]
        )

    return app


app = create_app()
