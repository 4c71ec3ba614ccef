"""Shared hypothesis strategies and sampling helpers."""

from fractions import Fraction

from hypothesis import strategies as st

from fockshuffle.exact import LaurentPoly, RatFun2

small_int = st.integers(min_value=-3, max_value=3)
exponent = st.tuples(st.integers(min_value=-2, max_value=2), st.integers(min_value=-2, max_value=2))


@st.composite
def laurent_polys(draw, max_terms=4):
    terms = draw(st.dictionaries(exponent, small_int.filter(bool), max_size=max_terms))
    return LaurentPoly(terms, 2)


@st.composite
def ratfuns(draw):
    num = draw(laurent_polys())
    den = draw(laurent_polys().filter(lambda p: not p.is_zero()))
    return RatFun2(num, den)


# points where a random small denominator is unlikely to vanish
SAMPLE_POINTS = [(Fraction(7, 3), Fraction(-5, 11)), (Fraction(13, 2), Fraction(3, 17)), (Fraction(-19, 5), Fraction(23, 7))]


def values(x: RatFun2):
    out = []
    for a, b in SAMPLE_POINTS:
        try:
            out.append(x.evaluate(a, b))
        except ZeroDivisionError:
            out.append(None)
    return out
