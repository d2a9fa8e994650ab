import pytest

from jprosody.fixtures import load_fixture


@pytest.fixture(params=["tree1", "tree2", "boost4N"])
def fixture_item(request):
    tree, exp = load_fixture(request.param)
    return request.param, tree, exp


SUITE_BUDGET_S = 30.0
_started = {}


def pytest_sessionstart(session):
    import time
    _started["t"] = time.perf_counter()


def pytest_sessionfinish(session, exitstatus):
    import time
    items = getattr(session, "items", [])
    if "t" not in _started or not any(i.module.__name__ == "test_acceptance" for i in items):
        return
    elapsed = time.perf_counter() - _started["t"]
    ok = elapsed < SUITE_BUDGET_S
    print(f"\ncriterion 8: {'PASS' if ok else 'FAIL'}  suite wall-clock {elapsed:.1f} s (budget {SUITE_BUDGET_S:.0f} s)")
    if not ok and session.exitstatus == 0:
        session.exitstatus = 1
