from hypothesis import strategies as st

from toroidal.scalars import ZERO, Scalar


@st.composite
def laurent_scalars(draw, max_terms=3, span=3):
    """Random Laurent polynomials in q and u with small integer coefficients."""
    terms = draw(st.lists(
        st.tuples(st.integers(-span, span), st.integers(-span, span), st.integers(-4, 4)),
        max_size=max_terms,
    ))
    total = ZERO
    for a, b, c in terms:
        total = total + Scalar.monomial(a, b, c)
    return total


@st.composite
def scalars(draw):
    num = draw(laurent_scalars())
    den = draw(laurent_scalars().filter(lambda s: not s.is_zero()))
    return num / den


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import SUMMARY

    if SUMMARY:
        terminalreporter.section("acceptance criteria")
        for number in sorted(SUMMARY):
            terminalreporter.write_line(SUMMARY[number])
