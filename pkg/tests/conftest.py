"""Pytest configuration and fixtures for the kout_mincut tests."""

import os

import pytest

from kout_mincut.application.graph import generate
from kout_mincut.config import settings
from kout_mincut.domain.models import AmplificationConfig, SimpleGraph


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Isolate every test from KOUT_* variables of the calling shell."""
    for name in list(os.environ):
        if name.startswith("KOUT_"):
            monkeypatch.delenv(name, raising=False)
    settings.reload()
    yield
    settings.reload()


@pytest.fixture
def triangle():
    """K3 with edge ids 0, 1, 2."""
    return SimpleGraph.from_pairs(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def single_edge():
    return SimpleGraph.from_pairs(2, [(0, 1)])


@pytest.fixture
def two_cliques_8_3():
    """Two K8 joined by 3 bridges; lambda = 3, delta = 7."""
    return generate("two_cliques", 8, 3)


@pytest.fixture
def cycle_5():
    return generate("cycle", 5)


@pytest.fixture
def quick_config():
    """Small repetition counts so unit tests stay fast."""

    def build(n: int, q: int = 20, r: int = 1, dense_q: int = 20, dense_r: int = 1, **kwargs) -> AmplificationConfig:
        return AmplificationConfig.for_graph(n, q=q, r=r, dense_q=dense_q, dense_r=dense_r, **kwargs)

    return build


def pytest_configure(config):
    """Configure pytest with custom markers."""
    config.addinivalue_line("markers", "integration: mark test as an integration test")
    config.addinivalue_line("markers", "slow: mark test as slow running")


def pytest_collection_modifyitems(config, items):
    """Modify test collection to add markers based on test names."""
    for item in items:
        # Mark integration tests
        if "integration" in item.name.lower() or "TestIntegration" in str(item.cls):
            item.add_marker(pytest.mark.integration)

        # Mark slow tests
        if "slow" in item.name.lower() or any(keyword in item.name.lower() for keyword in ["corpus", "large", "seeds"]):
            item.add_marker(pytest.mark.slow)
