from __future__ import annotations

from hypothesis import HealthCheck, settings

settings.register_profile(
    "repo",
    deadline=None,
    derandomize=True,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")


def pytest_terminal_summary(terminalreporter):
    """One line per acceptance criterion, in criterion order."""
    lines = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            name = getattr(rep, "nodeid", "").rpartition("::")[2]
            if not name.startswith("test_criterion_") or rep.when not in ("call", "setup"):
                continue
            num, _, title = name[len("test_criterion_"):].partition("_")
            status = "PASS" if outcome == "passed" else "FAIL"
            if lines.get(num, ("", "PASS"))[1] == "PASS":
                lines[num] = (title.replace("_", " "), status)
    if lines:
        terminalreporter.section("acceptance criteria")
        for num in sorted(lines):
            title, status = lines[num]
            terminalreporter.write_line(f"criterion {num} {status}  {title}")
