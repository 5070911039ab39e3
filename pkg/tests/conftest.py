"""Pytest wiring: prints one PASS/FAIL line per acceptance criterion in
the terminal summary, even under default output capturing."""

ACCEPTANCE_TOTAL = 11
ACCEPTANCE_RESULTS: dict[int, bool] = {}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in range(1, ACCEPTANCE_TOTAL + 1):
        outcome = ACCEPTANCE_RESULTS.get(n)
        line = f"ACCEPTANCE {n}: {'PASS' if outcome else 'FAIL'}"
        if outcome is None:
            line += " (not recorded)"
        terminalreporter.write_line(line)
