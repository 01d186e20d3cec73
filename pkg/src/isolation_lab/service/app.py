"""HTTP facade over the library; the CLI runs it in-process by default.

All domain failures surface as 400 responses with the underlying message.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..constructions import enumerate_f_plus_e, iter_special_builds, recognize_extremal
from ..enumeration import EnumSpec, enumerate_graphs
from ..graphs import emit_graph6, parse_graph6, vertex_list
from ..patterns import Pattern, resolve_pattern
from ..solver import Family, solve
from ..verifier import (
    VerifyRun,
    verify_bound,
    verify_extremal,
    verify_lemma_suites,
    verify_two_copies,
)
from . import schemas as s


def _family(spec: s.FamilySpec) -> Family:
    if spec.all_cycles:
        if spec.patterns:
            raise ValueError("all_cycles excludes explicit patterns")
        return Family.cycles()
    return Family.of(*(resolve_pattern(t) for t in spec.patterns))


def _default_universe(p: Pattern, req: s.VerifyRequest) -> tuple[list, str]:
    n_max = req.n_max if req.n_max is not None else (8 if p.k <= 3 else 7)
    kwargs: dict = {"n_max": n_max, "connected_only": True}
    if req.m_min is not None:
        kwargs["m_min"] = req.m_min
    if req.m_max is not None:
        kwargs["m_max"] = req.m_max
    spec = EnumSpec(**kwargs)
    label = f"connected n<={n_max}"
    if req.m_min is not None or req.m_max is not None:
        label += f", m in [{spec.m_min}, {spec.m_max if spec.m_max is not None else 'max'}]"
    return list(enumerate_graphs(spec)), label


def create_app() -> FastAPI:
    app = FastAPI(title="isolation-lab", version=__version__)

    @app.exception_handler(ValueError)
    async def domain_error(_: Request, exc: ValueError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.get("/health", response_model=s.HealthResponse)
    def health() -> s.HealthResponse:
        return s.HealthResponse(status="ok", version=__version__)

    @app.post("/patterns/resolve", response_model=s.PatternInfo)
    def pattern_info(req: s.PatternRequest) -> s.PatternInfo:
        p = resolve_pattern(req.text)
        return s.PatternInfo(
            graph6=emit_graph6(p.f),
            k=p.k,
            ell=p.ell,
            gamma=p.gamma,
            dominating=vertex_list(p.dominating),
        )

    @app.post("/solve", response_model=s.SolveResponse)
    def solve_endpoint(req: s.SolveRequest) -> s.SolveResponse:
        g = parse_graph6(req.graph6)
        r = solve(g, _family(req.family))
        return s.SolveResponse(
            iota=r.iota,
            witness=vertex_list(r.witness),
            stats=s.SolveStats(**r.stats),
        )

    @app.post("/gen/special", response_model=s.GenerateSpecialResponse)
    def gen_special(req: s.GenerateSpecialRequest) -> s.GenerateSpecialResponse:
        p = resolve_pattern(req.pattern)
        if req.pure and (req.m + 1) % (p.k + 2) != 0:
            raise ValueError(
                f"pure specials need m+1 divisible by k+2 = {p.k + 2}, got m = {req.m}"
            )
        builds = list(iter_special_builds(p, req.m))
        return s.GenerateSpecialResponse(
            graphs=[emit_graph6(b.graph) for b in builds],
            layouts=[b.layout.as_dict() for b in builds] if req.include_layout else None,
        )

    @app.post("/gen/fplus", response_model=s.GraphListResponse)
    def gen_fplus(req: s.GenerateFPlusERequest) -> s.GraphListResponse:
        p = resolve_pattern(req.pattern)
        return s.GraphListResponse(graphs=[emit_graph6(g) for g in enumerate_f_plus_e(p)])

    @app.post("/recognize", response_model=s.RecognizeResponse)
    def recognize(req: s.RecognizeRequest) -> s.RecognizeResponse:
        p = resolve_pattern(req.pattern)
        out = [recognize_extremal(parse_graph6(line), p).value for line in req.graphs]
        return s.RecognizeResponse(classes=out)

    @app.post("/enumerate", response_model=s.GraphListResponse)
    def enumerate_endpoint(req: s.EnumerateRequest) -> s.GraphListResponse:
        spec = EnumSpec(
            n_max=req.n_max,
            m_min=req.m_min,
            m_max=req.m_max,
            connected_only=req.connected_only,
        )
        return s.GraphListResponse(graphs=[emit_graph6(g) for g in enumerate_graphs(spec)])

    @app.post("/verify", response_model=s.VerifyResponse)
    def verify(req: s.VerifyRequest) -> s.VerifyResponse:
        if req.suite == "lemmas":
            run = verify_lemma_suites(seed=req.seed, trials=req.trials)
        else:
            if req.pattern is None:
                raise ValueError(f"the {req.suite} suite needs a pattern")
            p = resolve_pattern(req.pattern)
            if req.suite == "two-copies" and req.m_min is None and req.m_max is None:
                target = 2 * p.k + 3
                req = req.model_copy(update={"m_min": target, "m_max": target})
            universe, label = _default_universe(p, req)
            fn = {
                "bound": verify_bound,
                "extremal": verify_extremal,
                "two-copies": verify_two_copies,
            }[req.suite]
            run = fn(
                p,
                universe,
                workers=req.workers,
                pattern_label=req.pattern,
                universe_label=label,
            )
        assert isinstance(run, VerifyRun)
        return s.VerifyResponse(
            report=s.ReportModel(**run.report.as_dict()),
            records=list(run.records),
        )

    return app
