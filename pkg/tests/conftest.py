from pathlib import Path

import pytest

from satvis import build, parse_log

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def excerpt_text() -> str:
    return (FIXTURES / "excerpt.log").read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def excerpt_report(excerpt_text):
    return parse_log(excerpt_text)


@pytest.fixture(scope="session")
def excerpt_derivation(excerpt_report):
    return build(excerpt_report.events)


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES
