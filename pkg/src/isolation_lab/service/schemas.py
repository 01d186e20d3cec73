"""Request and response bodies for the HTTP service."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field


class FamilySpec(BaseModel):
    """Either a nonempty pattern list (names or graph6) or the all-cycles flag."""

    patterns: list[str] = Field(default_factory=list)
    all_cycles: bool = False


class SolveRequest(BaseModel):
    graph6: str
    family: FamilySpec


class SolveStats(BaseModel):
    nodes_expanded: int
    copies_found: int


class SolveResponse(BaseModel):
    iota: int
    witness: list[int]
    stats: SolveStats


class PatternRequest(BaseModel):
    text: str


class PatternInfo(BaseModel):
    graph6: str
    k: int
    ell: int
    gamma: int
    dominating: list[int]


class GenerateSpecialRequest(BaseModel):
    pattern: str
    m: int
    pure: bool = False
    include_layout: bool = False


class GenerateSpecialResponse(BaseModel):
    graphs: list[str]
    layouts: list[dict] | None = None


class GenerateFPlusERequest(BaseModel):
    pattern: str


class GraphListResponse(BaseModel):
    graphs: list[str]


class RecognizeRequest(BaseModel):
    pattern: str
    graphs: list[str]


class RecognizeResponse(BaseModel):
    classes: list[str]


class EnumerateRequest(BaseModel):
    n_max: int
    m_min: int = 0
    m_max: int | None = None
    connected_only: bool = False


class VerifyRequest(BaseModel):
    suite: Literal["bound", "extremal", "two-copies", "lemmas"]
    pattern: str | None = None
    n_max: int | None = None
    m_min: int | None = None
    m_max: int | None = None
    workers: int = 1
    seed: int = 0
    trials: int = 1000


class ReportModel(BaseModel):
    pattern: str
    universe: str
    checked: int
    bound_violations: int
    equality_cases: int
    equality_misclassified: int
    offenders: list[str]
    details: dict[str, int]
    ok: bool


class VerifyResponse(BaseModel):
    report: ReportModel
    records: list[dict]


class HealthResponse(BaseModel):
    status: str
    version: str
