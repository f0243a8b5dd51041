"""
Torus Spatial Graph API

HTTP surface over the classifier. Requests carry graph-file text; responses
are the same report records the CLI prints with --format machine.

Endpoints:
- GET  /          - Service banner
- GET  /status    - Settings and fixture inventory
- POST /validate  - Embedding check
- POST /classify  - Triviality verdict
- POST /render    - SVG diagram
"""

from contextlib import asynccontextmanager
from datetime import datetime
from typing import List, Optional
import logging

from fastapi import FastAPI, HTTPException
from fastapi.responses import Response
from pydantic import BaseModel, Field

from app.classify.verdict import classify as classify_graph
from app.cli.graph_file import parse_graph_file
from app.cli.render import render_diagram
from app.cli.report import Report, build_report
from app.config.settings import get_settings
from app.fixtures import list_fixtures
from app.schemas.torus import TorusGraph
from app.schemas.validation import ValidationReport
from app.torus.embedding import validate_embedding
from app.utils.errors import EmbeddingError, GraphFileError, TorusGraphError

# Configure logging
logging.basicConfig(
    level=get_settings().LOG_LEVEL, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
)
logger = logging.getLogger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI):
    settings = get_settings()
    logger.info(f"🧭 Starting {settings.APP_NAME} {settings.APP_VERSION}")
    logger.info(f"✅ {len(list_fixtures())} fixture graphs available")
    yield
    logger.info("🛑 Shutting down")


settings = get_settings()
app = FastAPI(
    title=settings.APP_NAME,
    description="Decides whether a graph drawn on a torus in S³ is a trivial spatial graph.",
    version=settings.APP_VERSION,
    debug=settings.DEBUG,
    docs_url="/docs",
    redoc_url="/redoc",
    lifespan=lifespan,
)


# ═══════════════════════════════════════════════════════════
# REQUEST/RESPONSE MODELS
# ═══════════════════════════════════════════════════════════


class GraphRequest(BaseModel):
    """Graph file text plus optional scan cap"""

    text: str
    source: str = "request"
    cap: Optional[int] = Field(default=None, ge=1)


class StatusResponse(BaseModel):
    status: str
    version: str
    cycle_cap: int
    tree_cap: int
    fixtures: List[str]
    timestamp: str


def _parse(request: GraphRequest) -> TorusGraph:
    try:
        return parse_graph_file(request.text)
    except GraphFileError as exc:
        raise HTTPException(
            status_code=422,
            detail=[{"line": line, "reason": reason} for line, reason in exc.errors],
        ) from exc


# ═══════════════════════════════════════════════════════════
# ENDPOINTS
# ═══════════════════════════════════════════════════════════


@app.get("/")
async def root():
    return {"service": settings.APP_NAME, "version": settings.APP_VERSION, "docs": "/docs"}


@app.get("/status", response_model=StatusResponse)
async def status():
    current = get_settings()
    return StatusResponse(
        status="ok",
        version=current.APP_VERSION,
        cycle_cap=current.CYCLE_CAP,
        tree_cap=current.TREE_CAP,
        fixtures=list_fixtures(),
        timestamp=datetime.utcnow().isoformat(),
    )


@app.post("/validate", response_model=ValidationReport)
async def validate(request: GraphRequest):
    g = _parse(request)
    try:
        return validate_embedding(g)
    except TorusGraphError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


@app.post("/classify", response_model=Report)
async def classify(request: GraphRequest):
    g = _parse(request)
    try:
        verdict = classify_graph(g, request.cap)
    except EmbeddingError as exc:
        logger.info(f"❌ Rejected non-embedding from {request.source}")
        raise HTTPException(
            status_code=422, detail=[v.model_dump() for v in exc.report.violations]
        ) from exc
    except TorusGraphError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    logger.info(f"📐 {request.source}: {verdict.result.value}")
    return build_report(g, verdict, request.source)


@app.post("/render")
async def render(request: GraphRequest):
    g = _parse(request)
    try:
        report = validate_embedding(g)
    except TorusGraphError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    if not report.ok:
        raise HTTPException(status_code=422, detail=[v.model_dump() for v in report.violations])
    return Response(content=render_diagram(g), media_type="image/svg+xml")
