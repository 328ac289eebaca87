import pytest
from hypothesis import settings

settings.register_profile("ci", max_examples=60, deadline=None)
settings.load_profile("ci")

_ACCEPTANCE = []


@pytest.fixture
def record_criterion():
    """Acceptance tests call this with (number, title, passed, seconds)."""

    def _record(number, title, passed, seconds):
        _ACCEPTANCE.append((number, title, passed, seconds))

    return _record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, seconds in sorted(_ACCEPTANCE):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}  {title}  ({seconds:.2f} s)")
