"""Shared pytest hooks for the suite.

The acceptance tests emit one ``criterion NN: PASS/FAIL`` line each; pytest
captures the stdout of passing tests, so this hook echoes the collected
lines in the terminal summary where a plain ``pytest`` run shows them.
"""

acceptance_lines: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not acceptance_lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(set(acceptance_lines)):
        terminalreporter.line(line)
