"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field


class CreateIndexRequest(BaseModel):
    text: str
    mode: Literal["chars", "words"] = "chars"
    lowercase: bool = False


class IndexSummary(BaseModel):
    index_id: str
    token_count: int
    total_occurrences: int
    alpha: int
    wsim: float


class SearchRequest(BaseModel):
    keywords: list[str] = Field(min_length=1)
    freqs: list[int] | None = None
    threshold: int | None = None
    algo: Literal["ps", "wpsr", "mwpsr"] = "ps"
    top: int | None = Field(default=None, ge=1)


class IntervalOut(BaseModel):
    start: int
    end: int
    size: int


class StatsOut(BaseModel):
    comparisons: int
    beta: int
    gamma: int
    cn: int
    ranges_examined: int
    ranges_emitted: int


class SearchResponse(BaseModel):
    intervals: list[IntervalOut]
    minimal: IntervalOut | None
    stats: StatsOut


class GenerateRequest(BaseModel):
    seed: int = 0
    size: int = Field(ge=1)
    alphabet_size: int = Field(default=3, ge=2, le=26)
    wsim_target: float = Field(default=0.0, ge=0.0, le=1.0)


class GenerateResponse(BaseModel):
    text: str
    wsim_actual: float


class BenchRequest(BaseModel):
    sizes: list[int] = Field(min_length=1)
    wsim: list[float] = Field(min_length=1)
    algos: list[Literal["ps", "wpsr", "mwpsr"]] = ["ps", "wpsr", "mwpsr"]
    seeds: int = Field(default=1, ge=1)
    k: int = Field(default=3, ge=1)
    alphabet_size: int = Field(default=3, ge=2, le=26)


class BenchRecordOut(BaseModel):
    algo: str
    n: int
    k: int
    wsim_target: float
    wsim_actual: float
    seed: int
    comparisons: int
    beta: int
    gamma: int
    cn: int
    ranges_emitted: int
    elapsed_ns: int


class BenchResponse(BaseModel):
    records: list[BenchRecordOut]
