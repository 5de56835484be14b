"""Pytest configuration and shared fixtures"""
import pytest
import sys
from pathlib import Path

import numpy as np

# Add project root to Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.config import Config  # noqa: E402
from src.formula import X, parse  # noqa: E402
from src.semantics import TruthTable  # noqa: E402


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive sweeps taking more than a few seconds")


@pytest.fixture
def x1():
    return X(1)


@pytest.fixture
def x2():
    return X(2)


@pytest.fixture
def rng():
    """Seeded generator so sampled tests are reproducible"""
    return np.random.default_rng(20)


@pytest.fixture
def formula():
    """Factory fixture parsing formula text"""
    def _parse(text: str):
        return parse(text)
    return _parse


@pytest.fixture
def unary_tables():
    """All 27 truth tables of arity 1"""
    return [
        TruthTable.from_codes(1, [a, b, c])
        for a in range(3)
        for b in range(3)
        for c in range(3)
    ]


@pytest.fixture
def small_sweeps(monkeypatch):
    """Shrink the randomized sweep sizes for test runs"""
    monkeypatch.setattr(Config, "RANDOM_PAIRS", 50)
    monkeypatch.setattr(Config, "RANDOM_POST_FORMULAS", 50)
    monkeypatch.setattr(Config, "COMPACTNESS_TRIALS", 20)
    return Config
