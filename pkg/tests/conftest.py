from __future__ import annotations

from pathlib import Path

import pytest

from logdiff import generate_demo_log

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def demo_log():
    """The seed-7 demo log every DERIVED check runs against."""
    return generate_demo_log(7, 500)


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return FIXTURES / "xes_corpus"
