"""Shared fixtures for the torus graph tests."""

import pytest

from app.config.settings import get_settings
from app.fixtures import get_fixture


@pytest.fixture(autouse=True)
def fresh_settings():
    """Each test sees settings built from its own environment."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def load():
    return get_fixture
