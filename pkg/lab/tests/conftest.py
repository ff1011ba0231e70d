"""
Shared pytest configuration for all tests.

Puts lab/ on sys.path, clears the OMLAB_* environment overrides between
tests and provides the witness matrices used across modules.
"""

import sys
from pathlib import Path

import numpy as np
import pytest

# Ensure the 'lab' directory is on sys.path so "import app" works
ROOT = Path(__file__).resolve().parents[1]  # lab/
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from app.blocks.block import Block2x2  # noqa: E402


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    """Each test starts from the built-in tolerance, eigensolver and worker defaults."""
    for var in ("OMLAB_TOL", "OMLAB_EIGEN", "OMLAB_WORKERS"):
        monkeypatch.delenv(var, raising=False)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def square_zero_witness():
    """T = [[0, 1], [0, 0]] with scalar blocks."""
    return Block2x2.scalar(0, 1, 0, 0)


@pytest.fixture
def ad_witness():
    """T = [[1+i, 1-i], [1-i, 1+i]], accretive-dissipative and normal."""
    return Block2x2.scalar(1 + 1j, 1 - 1j, 1 - 1j, 1 + 1j)
