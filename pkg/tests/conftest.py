import pytest


@pytest.fixture
def emit_line(request):
    """Write one line into the live test report, past output capture.

    The acceptance tests use this so their PASS/FAIL verdict lines stay
    visible in a plain ``pytest -v`` run.
    """
    reporter = request.config.pluginmanager.getplugin("terminalreporter")

    def emit(text: str) -> None:
        if reporter is not None:
            reporter.write_line(text)
        else:
            print(text)

    return emit
