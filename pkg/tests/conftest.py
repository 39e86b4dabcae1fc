from fractions import Fraction

from hypothesis import settings, strategies as st

from hankel_lab.exactmat import ExactMatrix

settings.register_profile("default", deadline=None)
settings.load_profile("default")

small_ints = st.integers(min_value=-9, max_value=9)


@st.composite
def int_matrices(draw, min_dim=0, max_dim=6, elements=small_ints):
    n = draw(st.integers(min_value=min_dim, max_value=max_dim))
    rows = draw(st.lists(st.lists(elements, min_size=n, max_size=n), min_size=n, max_size=n))
    return ExactMatrix(rows) if n else ExactMatrix.zeros(0)


@st.composite
def low_rank_matrices(draw, min_dim=1, max_dim=6):
    """Integer matrices of deficient rank: products of n x r and r x n factors, r < n."""
    n = draw(st.integers(min_value=min_dim, max_value=max_dim))
    r = draw(st.integers(min_value=0, max_value=n - 1))
    if r == 0:
        return ExactMatrix.zeros(n)
    ints = st.integers(min_value=-3, max_value=3)
    left = draw(st.lists(st.lists(ints, min_size=r, max_size=r), min_size=n, max_size=n))
    right = draw(st.lists(st.lists(ints, min_size=n, max_size=n), min_size=r, max_size=r))
    return ExactMatrix(left) @ ExactMatrix(right)


fractions = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def frac_matrix(n, draw_rows):
    return ExactMatrix([[Fraction(x) for x in row] for row in draw_rows])


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
