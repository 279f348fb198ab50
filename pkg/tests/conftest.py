import pytest
import sympy

from invcyclo import cyclo
from invcyclo.polyring import IntPoly

_X = sympy.Symbol("X")


def sympy_phi(n: int) -> IntPoly:
    """Phi_n from sympy: an oracle independent of every algorithm in the package."""
    return IntPoly(reversed(sympy.Poly(sympy.cyclotomic_poly(n, _X), _X).all_coeffs()))


@pytest.fixture
def fresh_cache(monkeypatch):
    cache = cyclo.CycloCache()
    monkeypatch.setattr(cyclo, "_default_cache", cache)
    return cache


@pytest.fixture(autouse=True)
def _isolated_cache_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("INVCYCLO_CACHE_DIR", str(tmp_path / "cache"))


_acceptance = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(name): exit criterion, reported in the terminal summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _acceptance.append((marker.args[0], report.passed, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, duration in _acceptance:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  ({duration:.1f}s)")
