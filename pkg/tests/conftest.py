import os

import hypothesis.strategies as st
from hypothesis import HealthCheck, settings

from sqzero.slp import enumerate_slp

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("ci", max_examples=200, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

_ALL = {n: enumerate_slp(n) for n in range(1, 6)}


@st.composite
def patterns(draw, min_n=1, max_n=4):
    n = draw(st.integers(min_n, max_n))
    return draw(st.sampled_from(_ALL[n]))


@st.composite
def pattern_pairs(draw, min_n=1, max_n=4):
    n = draw(st.integers(min_n, max_n))
    return draw(st.sampled_from(_ALL[n])), draw(st.sampled_from(_ALL[n]))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "REPORT_LINES", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda l: int(l.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
