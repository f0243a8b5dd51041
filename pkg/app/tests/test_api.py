"""Tests for the HTTP surface."""

import pytest
from httpx import ASGITransport, AsyncClient

from app.fixtures import fixture_path, list_fixtures
from app.main import app


def fixture_text(name: str) -> str:
    return fixture_path(name).read_text()


@pytest.fixture
def client():
    return AsyncClient(transport=ASGITransport(app=app), base_url="http://test")


@pytest.mark.asyncio
async def test_root(client):
    """Test the banner names the service."""
    async with client:
        response = await client.get("/")
    assert response.status_code == 200
    assert response.json()["docs"] == "/docs"


@pytest.mark.asyncio
async def test_status_lists_fixtures(client, monkeypatch):
    """Test status reports the caps in effect and the fixture names."""
    monkeypatch.setenv("TORUS_CYCLE_CAP", "77")
    async with client:
        response = await client.get("/status")
    body = response.json()
    assert body["status"] == "ok"
    assert body["cycle_cap"] == 77
    assert body["fixtures"] == list_fixtures()


@pytest.mark.asyncio
async def test_classify_trefoil(client):
    """Test the classify report matches the CLI machine report."""
    async with client:
        response = await client.post("/classify", json={"text": fixture_text("trefoil-c3"), "source": "trefoil"})
    assert response.status_code == 200
    report = response.json()
    assert report["source"] == "trefoil"
    assert report["verdict"] == "Nontrivial"
    assert report["reasons"] == ["KnottedCycle"]


@pytest.mark.asyncio
async def test_classify_k5_carries_certificate(client):
    async with client:
        response = await client.post("/classify", json={"text": fixture_text("k5-grid")})
    report = response.json()
    assert report["reasons"] == ["NonplanarAbstractGraph"]
    assert report["nonplanarity"]["kind"] == "K5"


@pytest.mark.asyncio
async def test_parse_errors_are_422_with_lines(client):
    """Test file errors come back as line-numbered details."""
    async with client:
        response = await client.post("/classify", json={"text": "torus standard\nvertex a 1 0\n"})
    assert response.status_code == 422
    assert response.json()["detail"] == [{"line": 2, "reason": "vertex a coordinate outside [0,1)"}]


@pytest.mark.asyncio
async def test_non_embedding_rejected(client):
    text = (
        "torus standard\nvertex a 0 1/2\nvertex b 1/2 0\n"
        "edge e1 a a : 0 1/2 ; 1 1/2\nedge e2 b b : 1/2 0 ; 1/2 1\n"
    )
    async with client:
        validate = await client.post("/validate", json={"text": text})
        classify = await client.post("/classify", json={"text": text})
        render = await client.post("/render", json={"text": text})
    assert validate.status_code == 200
    assert validate.json()["ok"] is False
    assert validate.json()["violations"][0]["kind"] == "crossing"
    assert classify.status_code == 422
    assert render.status_code == 422


@pytest.mark.asyncio
async def test_render_returns_svg(client):
    async with client:
        response = await client.post("/render", json={"text": fixture_text("hopf-pair")})
    assert response.status_code == 200
    assert response.headers["content-type"].startswith("image/svg+xml")
    assert response.text.startswith("<svg")


@pytest.mark.asyncio
async def test_cap_must_be_positive(client):
    async with client:
        response = await client.post("/classify", json={"text": fixture_text("theta-disc"), "cap": 0})
    assert response.status_code == 422
