import pytest

from cooc import kernels

_KERNEL_NAMES = ("band_edges", "hopcroft_karp", "matching_sizes", "lcs_length")


@pytest.fixture(params=[m.BACKEND for m in kernels.available_backends()])
def backend(request, monkeypatch):
    """Run the test once per importable kernel backend."""
    mod = {m.BACKEND: m for m in kernels.available_backends()}[request.param]
    for name in _KERNEL_NAMES:
        monkeypatch.setattr(kernels, name, getattr(mod, name))
    return request.param


def pytest_terminal_summary(terminalreporter):
    reports = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if "test_acceptance.py" in getattr(rep, "nodeid", "") and rep.when == "call":
                reports.append((rep.nodeid, outcome))
    if not reports:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, outcome in sorted(reports):
        name = nodeid.split("::")[-1]
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
