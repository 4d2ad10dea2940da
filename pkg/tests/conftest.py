import pytest
from hypothesis import settings, strategies as st

from qschur.laurent import LaurentPoly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES = []


def laurent_polys(max_terms=5, max_exp=6, max_coeff=20):
    return st.dictionaries(
        st.integers(-max_exp, max_exp), st.integers(-max_coeff, max_coeff), max_size=max_terms
    ).map(LaurentPoly)


@pytest.fixture
def record_acceptance():
    def record(number, title, ok, detail=""):
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title}" + (f" ({detail})" if detail else ""))

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
