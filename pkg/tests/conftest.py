import os
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

EXAMPLES = Path(__file__).resolve().parent.parent / "src" / "cauchyden" / "examples"


@pytest.fixture
def examples() -> Path:
    return EXAMPLES


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion, when that module ran."""
    mod = sys.modules.get("test_acceptance")
    if mod is None:
        return
    ran = {int(k) for k in mod.COLLECTED}
    if not ran:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ran):
        line = mod.RESULTS.get(n)
        terminalreporter.write_line(line or f"criterion {n:>2}: FAIL  (did not complete)")
