"""Prints one PASS/FAIL line per acceptance criterion at the end of the run."""

ACCEPTANCE: dict[int, tuple[str, str, float]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        status, title, seconds = ACCEPTANCE[k]
        terminalreporter.write_line(f"CRITERION {k}: {status}  {title} ({seconds:.1f}s)")
