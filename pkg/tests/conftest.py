import sys
from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

from lexpolar import Gamble, RMatrix

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

WORKED_A = RMatrix([[0, 1, 1], [0, -1, 1], [1, 0, 0]])
P_MINUS_ONE = RMatrix([[0, "1/2", "1/2"], [0, 0, 1], [1, 0, 0]])


def P_tau(tau):
    """Row-normalised factor of the worked matrix A for integer tau <= -1."""
    t = Fraction(tau)
    return RMatrix([[0, "1/2", "1/2"], [0, (t + 1) / (2 * t), (t - 1) / (2 * t)], [1, 0, 0]])


rationals = st.fractions(min_value=-3, max_value=3, max_denominator=4)
small_ints = st.integers(min_value=-3, max_value=3)


def gambles(n, elements=rationals):
    return st.lists(elements, min_size=n, max_size=n).map(Gamble)


@st.composite
def gamble_any(draw, min_dim=1, max_dim=4):
    n = draw(st.integers(min_dim, max_dim))
    return draw(gambles(n))


@st.composite
def square_matrices(draw, n, elements=small_ints):
    return RMatrix(draw(st.lists(st.lists(elements, min_size=n, max_size=n), min_size=n, max_size=n)))


def pytest_terminal_summary(terminalreporter):
    acc = sys.modules.get("test_acceptance")
    if acc is None or not acc.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(acc.RESULTS):
        terminalreporter.write_line(acc.RESULTS[n])
