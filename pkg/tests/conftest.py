import pytest

from stackwise import catalog

EXT = tuple("vwxyz")


@pytest.fixture
def fig():
    return catalog.dcomplete5()


@pytest.fixture
def rect22():
    return catalog.rectangle(2, 2)


def ideals(P, *names):
    return tuple(P.parse_ideal(n) for n in names)


def named(P, vector):
    """{'I1;I2': coefficient} view of an m-vector, for readable comparisons."""
    return {";".join(P.ideal_name(i) for i in key): c for key, c in vector.terms.items()}


CATALOG = {
    "dcomplete5": catalog.dcomplete5,
    "chain1": lambda: catalog.chain(1),
    "chain2": lambda: catalog.chain(2),
    "chain3": lambda: catalog.chain(3),
    "chain4": lambda: catalog.chain(4),
    "rect22": lambda: catalog.rectangle(2, 2),
    "rect23": lambda: catalog.rectangle(2, 3),
}


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(f"[{'PASS' if RESULTS[n] else 'FAIL'}] criterion {n}")
