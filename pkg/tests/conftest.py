import sys


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for tag in sorted(results, key=lambda t: int(t[1:])):
        ok, detail = results[tag]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} {tag} {detail}")
