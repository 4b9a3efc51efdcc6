import pytest

# criterion name -> "PASS" / "FAIL", filled by tests in test_acceptance.py
ACCEPTANCE: dict[str, str] = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance line; call with the criterion name, then assert."""

    def record(name):
        ACCEPTANCE[name] = "FAIL"
        request.node.user_properties.append(("criterion", name))
        return name

    return record


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        for key, name in item.user_properties:
            if key == "criterion":
                ACCEPTANCE[name] = "PASS" if rep.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, status in ACCEPTANCE.items():
        terminalreporter.write_line(f"{status} {name}")
