from fractions import Fraction

from hypothesis import given, strategies as st

from ncshuffle import polyfit

coeffs = st.fractions(-5, 5, max_denominator=7)


@given(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 2)), coeffs, max_size=6))
def test_fit_recovers_polynomial(p):
    p = {e: c for e, c in p.items() if c}
    assert polyfit.fit_polynomial(lambda x, y: polyfit.evaluate(p, (x, y)), [3, 2]) == p


def test_identify_and_format():
    p = {(1, 0): Fraction(-1, 2), (0, 1): Fraction(1, 2)}
    assert polyfit.identify(p, 0, 1) == {}
    assert polyfit.format_poly(p, ("t", "s")) == "-1/2*t + 1/2*s"
    assert polyfit.format_poly({}, ("t",)) == "0"


def test_solve():
    x = polyfit.solve([[2, 1], [1, 3]], [[1, 0], [0, 1]])
    assert x == [[Fraction(3, 5), Fraction(-1, 5)], [Fraction(-1, 5), Fraction(2, 5)]]
