import numpy as np
import pytest
from hypothesis import strategies as st

from bcspectra import BiComplex


@pytest.fixture
def rng():
    return np.random.default_rng(20261015)


finite = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False, allow_infinity=False)
complexes = st.builds(complex, finite, finite)
bicomplexes = st.builds(BiComplex, complexes, complexes)


ACCEPTANCE_LINES = []


@pytest.fixture
def report_criterion():
    def record(number: int, title: str, ok: bool, detail: str = ""):
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}" + (f"  [{detail}]" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
