from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def rationals(limit: int = 20, nonzero: bool = False):
    """Rationals p/q with |p| <= limit and 1 <= q <= limit."""
    num = st.integers(-limit, limit)
    if nonzero:
        num = num.filter(bool)
    return st.builds(Fraction, num, st.integers(1, limit))


def naive_terms(k, s0, s1, n_max):
    """Independent recurrence used as an oracle."""
    out = [Fraction(s0), Fraction(s1)]
    while len(out) <= n_max:
        out.append(Fraction(k) * out[-1] + out[-2])
    return out[: n_max + 1]


def naive_kfl(k, a, b, n_max):
    k, a, b = Fraction(k), Fraction(a), Fraction(b)
    return naive_terms(k, 2 * b, b * k + a, n_max)


@pytest.fixture
def classic():
    from kfl.sequences import KflParams

    return KflParams(1, 1, 1)


ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance():
    """Record one summary line per acceptance criterion."""

    def record(label: str, ok: bool, detail: str = ""):
        line = f"[{'PASS' if ok else 'FAIL'}] {label}" + (f": {detail}" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
