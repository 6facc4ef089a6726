"""Shared pytest wiring: the acceptance summary block."""

ACCEPTANCE: dict[int, tuple[str, str]] = {}


def record(num: int, desc: str, status: str) -> None:
    ACCEPTANCE[num] = (desc, status)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num in sorted(ACCEPTANCE):
        desc, status = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num:2d} [{status}] {desc}")
