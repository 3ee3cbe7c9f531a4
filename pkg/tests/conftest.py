"""Shared reporting for the acceptance gate.

Acceptance tests record one PASS/FAIL line per criterion; the terminal
summary hook replays them at the end of the run so they are visible even
when every test passes.
"""

ACCEPTANCE_LINES: list = []


def record(number: int, ok: bool, detail: str) -> None:
    status = "PASS" if ok else "FAIL"
    line = f"{status} criterion {number:2d}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
