import _acreport


def pytest_terminal_summary(terminalreporter):
    if _acreport.LINES:
        terminalreporter.section("acceptance criteria")
        for line in _acreport.LINES:
            terminalreporter.line(line)
