"""Echo the acceptance-suite result lines after the terminal summary.

The acceptance checks print one pass/fail line each, but pytest's
default capture grabs the file descriptor, so passing tests would stay
silent.  The lines are recorded in the test module and replayed here.
"""

import sys


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULT_LINES", None) if mod else None
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.line(line)
