import time

import pytest

from sweedler.corpus import algebra_corpus, coalgebra_corpus, hopf_corpus
from sweedler.exact_linalg import GF, QQ

_acceptance: dict[str, tuple[str, float]] = {}


@pytest.fixture(params=[QQ, GF(5)], ids=["Q", "F5"])
def field(request):
    return request.param


@pytest.fixture
def algebras(field):
    return algebra_corpus(field)


@pytest.fixture
def coalgebras(field):
    return coalgebra_corpus(field)


@pytest.fixture
def hopf_algebras():
    return hopf_corpus(QQ)


@pytest.fixture
def timed():
    """Context manager asserting a block finishes under a wall-clock budget."""

    class _Timer:
        def __init__(self, budget: float = 5.0):
            self.budget = budget

        def __enter__(self):
            self.start = time.perf_counter()
            return self

        def __exit__(self, *exc):
            self.elapsed = time.perf_counter() - self.start
            if exc[0] is None:
                assert self.elapsed < self.budget, f"took {self.elapsed:.2f}s, budget {self.budget}s"

    return _Timer


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    label = marker.args[0]
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _acceptance[label] = (rep.outcome, rep.duration)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion reported in the summary")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_acceptance, key=lambda s: int(s.split(".")[0])):
        outcome, duration = _acceptance[label]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {label}  ({duration:.2f}s)")
