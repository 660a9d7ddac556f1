from __future__ import annotations

import re


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print one pass/fail line per acceptance criterion at the end of
    the run."""
    results = []
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(report, "nodeid", "")
            match = re.search(r"test_acceptance\.py::test_c(\d+)", nodeid)
            if match:
                verdict = "PASS" if outcome == "passed" else "FAIL"
                results.append((int(match.group(1)), nodeid.split("::")[-1], verdict))
    if results:
        terminalreporter.write_sep("-", "acceptance criteria")
        for number, name, verdict in sorted(results):
            terminalreporter.write_line(f"criterion {number:02d} {verdict}  {name}")
