"""Shared fixtures for the workbench tests."""

import os

import pytest
from hypothesis import HealthCheck, settings

import config
from scalars.context import context_new

# module-level contexts in the test files are built at import time, after .env is loaded
os.environ.pop("GCA_BACKEND", None)

# exact cyclotomic arithmetic is slow on the first call per N
settings.register_profile(
    "workbench",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture],
)
settings.load_profile("workbench")


@pytest.fixture(autouse=True)
def _fresh_config(monkeypatch):
    """No GCA_BACKEND override, and configuration reloaded from the environment per test."""
    monkeypatch.delenv("GCA_BACKEND", raising=False)
    monkeypatch.setattr(config, "_config", None)


@pytest.fixture(params=[2, 3], ids=lambda N: f"N{N}")
def ctx(request):
    return context_new(request.param)


@pytest.fixture
def ctx2():
    return context_new(2)


@pytest.fixture
def ctx3():
    return context_new(3)
