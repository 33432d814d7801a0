from __future__ import annotations

from pathlib import Path

import pytest

from framescore import AnnotatedDocument, parse_document

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def load_corpus_doc(name: str) -> AnnotatedDocument:
    return parse_document((CORPUS / name).read_bytes())


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return CORPUS


@pytest.fixture(scope="session")
def si20_doc() -> AnnotatedDocument:
    return load_corpus_doc("sentence20_si.json")


@pytest.fixture(scope="session")
def ji01_doc() -> AnnotatedDocument:
    return load_corpus_doc("sentence20_ji01.json")


@pytest.fixture(scope="session")
def ji02_doc() -> AnnotatedDocument:
    return load_corpus_doc("sentence20_ji02.json")


@pytest.fixture(scope="session")
def ji03_doc() -> AnnotatedDocument:
    return load_corpus_doc("sentence20_ji03.json")


@pytest.fixture(scope="session")
def s12_doc() -> AnnotatedDocument:
    return load_corpus_doc("sentence12_si.json")


@pytest.fixture(scope="session")
def s42_doc() -> AnnotatedDocument:
    return load_corpus_doc("sentence42_si.json")


# One PASS/FAIL line per acceptance criterion at the end of the run.
_acceptance_outcomes: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    _acceptance_outcomes.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_outcomes:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name, outcome in _acceptance_outcomes:
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] {name}")
