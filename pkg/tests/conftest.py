import numpy as np
import pytest
from hypothesis import strategies as st

from convmds import make_field

# fields small enough to exhaust, plus one of each kind worth a spot check
FIELD_PARAMS = [(2, 1), (3, 1), (5, 1), (11, 1), (2, 3), (3, 2), (2, 4), (5, 2)]


@st.composite
def field_and_elements(draw, count=3, fields=FIELD_PARAMS):
    p, m = draw(st.sampled_from(fields))
    F = make_field(p, m)
    xs = [F.from_index(draw(st.integers(0, F.q - 1))) for _ in range(count)]
    return F, xs


@st.composite
def polys(draw, field, max_degree=6):
    return draw(st.lists(st.integers(0, field.q - 1), max_size=max_degree + 1))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


# -- acceptance summary ----------------------------------------------------

_acceptance: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or report.outcome != "passed":
        name = report.nodeid.split("::")[-1].removeprefix("test_")
        _acceptance.setdefault(name, "PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance, key=lambda s: int(s.split("_")[1])):
        terminalreporter.write_line(f"{_acceptance[name]}  {name}")
