import contextlib

import pytest

from nedlib import metrics


def pytest_configure(config):
    config.acceptance_results = []


def pytest_terminal_summary(terminalreporter, config):
    results = getattr(config, "acceptance_results", [])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    groups: dict = {}
    for label, passed, detail in results:
        key, _, title = label.partition(" ")
        groups.setdefault(key, []).append((title, passed, detail))
    for key, parts in sorted(groups.items()):
        ok = all(passed for _, passed, _ in parts)
        name = f"criterion {key}" if key.isdigit() else key
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")
        for title, passed, detail in parts:
            line = f"        {'pass' if passed else 'FAIL'}  {title}"
            terminalreporter.write_line(line + (f"  -- {detail}" if detail else ""))


@pytest.fixture
def criterion(request):
    """Record the outcome of one acceptance criterion for the summary."""
    results = request.config.acceptance_results

    @contextlib.contextmanager
    def record(label):
        try:
            yield
        except BaseException as exc:
            detail = str(exc).strip().splitlines()[0] if str(exc).strip() else type(exc).__name__
            results.append((label, False, detail))
            raise
        results.append((label, True, ""))

    return record


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # first calls trigger (or load cached) JIT compilation; keep it out of timings
    metrics.ned("ab", "ba")
    metrics.ned_value("ab", "ba")
    metrics.ed("ab", "ba")
    metrics.ed_value("ab", "ba")
    metrics.ced_value("ab", "ba")
