import pytest


def iterate(s, upto, a0=0, a1=1):
    """[a_0, ..., a_upto] for a(n+2) = s*a(n+1) + a(n); the test-side oracle."""
    out = [a0, a1]
    for _ in range(upto - 1):
        out.append(s * out[-1] + out[-2])
    return out[: upto + 1]


@pytest.fixture(scope="session")
def pell():
    return iterate(2, 3000)


@pytest.fixture(scope="session")
def pell_lucas():
    return iterate(2, 3000, 2, 2)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when != "call":
                continue
            for key, value in getattr(rep, "user_properties", []):
                if key == "acceptance":
                    lines.append((value, "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for label, verdict in sorted(lines):
            terminalreporter.write_line(f"{verdict}  {label}")
