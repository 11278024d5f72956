import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as hst

from duallie.catalog import CATALOG, catalog
from duallie.linalg import Matrix

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

small_rationals = hst.builds(
    Fraction, hst.integers(min_value=-5, max_value=5), hst.integers(min_value=1, max_value=3)
)


@hst.composite
def matrices(draw, nrows=None, ncols=None, max_dim=5):
    r = draw(hst.integers(1, max_dim)) if nrows is None else nrows
    c = draw(hst.integers(1, max_dim)) if ncols is None else ncols
    rows = draw(hst.lists(hst.lists(small_rationals, min_size=c, max_size=c), min_size=r, max_size=r))
    return Matrix.from_rows(rows, c)


@hst.composite
def square_matrices(draw, max_dim=5):
    n = draw(hst.integers(1, max_dim))
    return draw(matrices(n, n))


@hst.composite
def vectors(draw, n):
    return tuple(draw(hst.lists(small_rationals, min_size=n, max_size=n)))


CATALOG_NAMES = list(CATALOG)


@pytest.fixture(scope="session")
def algebras():
    return {name: catalog(name) for name in CATALOG_NAMES}


@pytest.fixture
def rng():
    return random.Random(0)


# acceptance summary: one line per criterion marker

_CRITERIA: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    label = str(mark.args[0])
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        if hasattr(rep, "wasxfail"):
            status = "XFAIL" if rep.skipped else "XPASS"
        else:
            status = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[rep.outcome]
        _CRITERIA[label] = (status, mark.kwargs.get("title", ""))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")

    def key(label):
        head, _, tail = label.partition("-")
        return (int(head), tail)

    for label in sorted(_CRITERIA, key=key):
        status, title = _CRITERIA[label]
        terminalreporter.write_line(f"criterion {label}: {status}  {title}")
