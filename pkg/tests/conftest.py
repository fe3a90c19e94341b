import sys

from hypothesis import settings

# exact enumeration at the top of each strategy's range is slow on a cold cache
settings.register_profile("sytlab", deadline=None)
settings.load_profile("sytlab")


def pytest_terminal_summary(terminalreporter):
    results = getattr(sys.modules.get("test_acceptance"), "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(results):
        terminalreporter.write_line(results[num])
