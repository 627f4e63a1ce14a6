import pytest

from graceful.atlas import base_complete_bipartite, base_cycle, base_grid, base_path


def small_bases():
    return [
        base_path(2), base_path(3), base_path(4), base_path(7),
        base_cycle(4), base_cycle(8),
        base_complete_bipartite(1, 1), base_complete_bipartite(1, 3),
        base_complete_bipartite(2, 2), base_complete_bipartite(3, 2),
        base_grid(2, 2), base_grid(2, 3), base_grid(3, 3),
    ]


@pytest.fixture(params=small_bases(), ids=lambda b: b.name)
def base(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
