ACCEPTANCE: dict[str, tuple[bool, float, float]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE, key=lambda k: int(k[2:])):
        ok, secs, limit = ACCEPTANCE[name]
        terminalreporter.write_line(
            f"{name}: {'PASS' if ok else 'FAIL'} ({secs:.2f}s, limit {limit:g}s)")
