import random

import pytest
from hypothesis import strategies as st

from doobcodes import SpaceShape, additive_closure
from doobcodes.cli import random_code
from doobcodes.rings import E4_ELEMENTS, F4_ELEMENTS
from doobcodes.space import MixedVector, parse_vector

E1 = SpaceShape(1, 0, 0)

e4_elems = st.sampled_from(E4_ELEMENTS)
f4_elems = st.sampled_from(F4_ELEMENTS)
z4_elems = st.integers(0, 3)


def vectors(shape):
    return st.builds(
        MixedVector,
        st.lists(e4_elems, min_size=shape.m, max_size=shape.m),
        st.lists(f4_elems, min_size=shape.nprime, max_size=shape.nprime),
        st.lists(z4_elems, min_size=shape.nsec, max_size=shape.nsec),
    )


def v(text, shape=E1):
    return parse_vector(text, shape)


@pytest.fixture
def code_C():
    return additive_closure(E1, [v("2:0"), v("0:2")])


@pytest.fixture
def code_D():
    return additive_closure(E1, [v("3:1")])


@pytest.fixture
def rng():
    return random.Random(20240611)


def random_codes(shape, count, seed, linear=False):
    r = random.Random(seed)
    return [random_code(shape, r, linear) for _ in range(count)]


_ACCEPTANCE: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::" in report.nodeid and (report.when == "call" or report.failed):
        name = report.nodeid.split("::", 1)[1]
        if report.when == "call" or name not in _ACCEPTANCE:
            _ACCEPTANCE[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for name, verdict in _ACCEPTANCE.items():
            terminalreporter.write_line(f"{verdict}  {name}")
