from hypothesis import settings

import acceptance_log

settings.register_profile("default", max_examples=120, deadline=None)
settings.load_profile("default")


def pytest_terminal_summary(terminalreporter):
    rows = acceptance_log.lines()
    if rows:
        terminalreporter.section("acceptance criteria")
        for row in rows:
            terminalreporter.write_line(row)
