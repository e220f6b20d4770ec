from functools import lru_cache

import pytest

from flagmetrics.cli import type1_decomposition, type2_decomposition
from flagmetrics.einstein import SolverConfig, solve_all
from flagmetrics.structconst import triples_einstein_route


@lru_cache(maxsize=None)
def space(kind: str, l: int = 0, p: int = 0):
    if kind in ("F4", "E7", "E8(i)", "E8(ii)"):
        return type1_decomposition(kind)
    if kind == "E7-IIa":
        return type2_decomposition("E7")
    return type2_decomposition(kind, l, p)


@lru_cache(maxsize=None)
def triples(kind: str, l: int = 0, p: int = 0):
    return triples_einstein_route(space(kind, l, p))


@lru_cache(maxsize=None)
def solutions(kind: str, l: int = 0, p: int = 0, starts: int = 2000, seed: int = 0):
    return tuple(solve_all(space(kind, l, p), triples(kind, l, p), config=SolverConfig(starts=starts, seed=seed)))


@pytest.fixture(scope="session")
def cached():
    return {"space": space, "triples": triples, "solutions": solutions}


# one PASS/FAIL line per acceptance criterion

_criteria: dict[int, tuple[str, bool]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    name = report.nodeid.rsplit("::", 1)[-1]
    if "test_acceptance.py" not in report.nodeid or not name.startswith("test_criterion_"):
        return
    number = int(name.split("_")[2])
    label = name.split("_", 3)[3].replace("_", " ")
    _criteria[number] = (label, report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        label, ok = _criteria[number]
        terminalreporter.write_line(f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {label}")
