"""Shared fixtures: a session-wide flip-graph cache and the acceptance
criterion recorder that prints one PASS/FAIL line per criterion."""

from __future__ import annotations

import contextlib
from functools import lru_cache

import pytest

from matchflip import build_flip_graph


@lru_cache(maxsize=None)
def cached_graph(n: int, mode: str):
    # big builds share workers; smaller ones are cheaper single-threaded
    return build_flip_graph(n, mode, threads=4 if n >= 10 else 1)


@pytest.fixture(scope="session")
def graph():
    return cached_graph


_criteria: dict[int, tuple[str, bool]] = {}


@contextlib.contextmanager
def criterion(num: int, desc: str):
    ok = False
    try:
        yield
        ok = True
    finally:
        _criteria[num] = (desc, ok)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        desc, ok = _criteria[num]
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[criterion {num:2d}] {status}  {desc}")
