import pytest

from pcgk import complete_graph, cycle_graph, parse_graph, path_graph

# filled by test_acceptance; printed once at the end of the run
ACCEPTANCE = {}


@pytest.fixture(scope="session")
def p3():
    return parse_graph("vertices: a b c\nedges: a-b b-c\n")


@pytest.fixture(scope="session")
def c4():
    return parse_graph("vertices: a b c d\nedges: a-b b-c c-d d-a\n")


@pytest.fixture(scope="session")
def k3():
    return complete_graph(3)


@pytest.fixture(scope="session")
def p4():
    return path_graph(4)


@pytest.fixture(scope="session")
def c5():
    return cycle_graph(5)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")
