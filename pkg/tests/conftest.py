from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from qid.exactcore import SeededSampler, sample_scalar

settings.register_profile("qid", deadline=None, max_examples=60)
settings.load_profile("qid")


def nonzero_fractions(max_num=20, max_den=9):
    return st.builds(
        Fraction,
        st.integers(-max_num, max_num).filter(lambda v: v != 0),
        st.integers(1, max_den),
    )


def draw(s, k=None):
    """One nonzero scalar, or a list of ``k``."""
    if k is None:
        return sample_scalar(s, (-15, 15), (1, 9), nonzero=True)
    return [draw(s) for _ in range(k)]


def draw_q(s):
    while True:
        q = draw(s)
        if q not in (1, -1):
            return q


@pytest.fixture
def sampler(request):
    return SeededSampler(20241016).spawn(request.node.name)


# acceptance lines, filled by tests/test_acceptance.py
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k.split()[0])):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {key}: {detail}")
