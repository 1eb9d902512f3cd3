import re


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One PASS/FAIL line per acceptance criterion in the summary."""
    results = {}
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(report, "nodeid", "")
            match = re.search(
                r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", nodeid)
            if match:
                number = int(match.group(1))
                title = match.group(2).replace("_", " ")
                results[number] = (outcome == "passed", title)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        passed, title = results[number]
        terminalreporter.write_line("{} criterion {:>2}: {}".format(
            "PASS" if passed else "FAIL", number, title))
