from __future__ import annotations

from pathlib import Path

import pytest

from ransomlab.scoring import TraitProfile

REPO_ROOT = Path(__file__).resolve().parent.parent
SAMPLE_DIR = REPO_ROOT / "sample_data"


@pytest.fixture
def sample_dir() -> Path:
    return SAMPLE_DIR


@pytest.fixture
def company_a() -> TraitProfile:
    return TraitProfile(a=20, b=25, c=25, d=100, e=80, f=90, g=25, h=60, i=15)


@pytest.fixture
def company_b() -> TraitProfile:
    return TraitProfile(a=90, b=60, c=90, d=100, e=10, f=15, g=25, h=60, i=75)
