"""Exact arithmetic kernel."""

from .field import ExactField, SampledField, make_field
from .laurent import LaurentPoly, NotDivisibleError, parse_laurent, poly_divide_exact
from .ratfun import RatFun2, parse_ratfun, ratfun_eq
from .series import Direction, SeriesPoleError, TruncSeries, ZRational, expand_series

__all__ = [
    "Direction",
    "ExactField",
    "LaurentPoly",
    "NotDivisibleError",
    "RatFun2",
    "SampledField",
    "SeriesPoleError",
    "TruncSeries",
    "ZRational",
    "expand_series",
    "make_field",
    "parse_laurent",
    "parse_ratfun",
    "poly_divide_exact",
    "ratfun_eq",
]
