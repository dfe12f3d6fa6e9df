import pytest

ACCEPTANCE = []


@pytest.fixture
def criterion():
    """Record one acceptance line; the test still asserts on its own."""
    def note(n, text, ok):
        line = "%s criterion %d: %s" % ("PASS" if ok else "FAIL", n, text)
        ACCEPTANCE.append((n, line))
        print(line)
        return ok
    return note


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(ACCEPTANCE):
        terminalreporter.write_line(line)
