import sys

from hypothesis import settings

settings.register_profile("default", deadline=None)
settings.load_profile("default")


def pytest_terminal_summary(terminalreporter):
    # repeat the acceptance lines after the run so they survive output capture
    mod = sys.modules.get("test_acceptance")
    rows = getattr(mod, "RESULTS", [])
    if rows:
        terminalreporter.section("acceptance criteria")
        for line in rows:
            terminalreporter.write_line(line)
