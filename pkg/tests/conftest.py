from __future__ import annotations

import pytest
from hypothesis import settings

from cosetforge import codes
from helpers import ACCEPTANCE, Artifacts, make_corpus

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

@pytest.fixture(scope="session")
def example1():
    return Artifacts(codes.example1())


@pytest.fixture(scope="session")
def rep3():
    return Artifacts(codes.rep3())


@pytest.fixture(scope="session")
def hamming7():
    return Artifacts(codes.hamming7())


@pytest.fixture(scope="session")
def golay23():
    return Artifacts(codes.golay23())


@pytest.fixture(scope="session")
def bch21():
    return Artifacts(codes.bch21())


@pytest.fixture(scope="session")
def corpus():
    return [Artifacts(c) for c in make_corpus()]


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, (status, detail) in ACCEPTANCE.items():
        terminalreporter.write_line(f"{status:<4} {name}: {detail}")
