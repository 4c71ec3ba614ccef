"""Ground fields: exact Q(t1, t2), or the same identities evaluated at a random rational point.

Algebra code builds all scalars through a field object, so every
verification runs unchanged in either mode.  Exact mode is the reference;
sampled mode is a fast smoke check (a pass there is evidence, not proof).
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache

from .laurent import LaurentPoly
from .ratfun import RatFun2


class ExactField:
    mode = "exact"

    def __init__(self, names=("t1", "t2")):
        self.names = tuple(names)

    def __eq__(self, other):
        return isinstance(other, ExactField) and other.names == self.names

    def __hash__(self):
        return hash(("exact", self.names))

    def __reduce__(self):
        return (ExactField, (self.names,))

    def const(self, c) -> RatFun2:
        return RatFun2.const(c, self.names)

    @property
    def zero(self) -> RatFun2:
        return _exact_const(0, self.names)

    @property
    def one(self) -> RatFun2:
        return _exact_const(1, self.names)

    def mono(self, a: int, b: int) -> RatFun2:
        return _exact_mono(a, b, self.names)

    def binom(self, a: int, b: int) -> RatFun2:
        """1 - t1^a t2^b."""
        return _exact_binom(a, b, self.names)

    def from_laurent(self, p: LaurentPoly) -> RatFun2:
        return RatFun2.from_laurent(p, self.names)

    def qt_field(self) -> "ExactField":
        return ExactField(("q", "t"))

    def specialize_qt(self, x: RatFun2) -> RatFun2:
        """q -> t1, t -> t2^-1."""
        return RatFun2(
            x.num.map_exponents(lambda e: (e[0], -e[1])),
            x.den.map_exponents(lambda e: (e[0], -e[1])),
            ("t1", "t2"),
        )

    def to_string(self, x) -> str:
        return x.to_string() if isinstance(x, RatFun2) else str(x)


@lru_cache(maxsize=None)
def _exact_const(c, names):
    return RatFun2.const(c, names)


@lru_cache(maxsize=None)
def _exact_mono(a, b, names):
    return RatFun2.mono(a, b, 1, names)


@lru_cache(maxsize=None)
def _exact_binom(a, b, names):
    if a == 0 and b == 0:
        return RatFun2.const(0, names)
    p = LaurentPoly({(0, 0): 1, (a, b): -1}, 2)
    return RatFun2(p, None, names)


class SampledField:
    """Q(t1, t2) replaced by Q with t1, t2 fixed to the given rationals."""

    mode = "sampled"

    def __init__(self, t1, t2, names=("t1", "t2")):
        self.t1 = Fraction(t1)
        self.t2 = Fraction(t2)
        self.names = tuple(names)

    @classmethod
    def from_seed(cls, seed: int) -> "SampledField":
        rng = random.Random(seed)

        def pick():
            while True:
                x = Fraction(rng.randint(2, 10**6), rng.randint(2, 10**6))
                if x != 1:
                    return x

        return cls(pick(), pick())

    def __eq__(self, other):
        return isinstance(other, SampledField) and (other.t1, other.t2, other.names) == (self.t1, self.t2, self.names)

    def __hash__(self):
        return hash(("sampled", self.t1, self.t2, self.names))

    def const(self, c) -> Fraction:
        return Fraction(c)

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def mono(self, a: int, b: int) -> Fraction:
        return self.t1**a * self.t2**b

    def binom(self, a: int, b: int) -> Fraction:
        return 1 - self.t1**a * self.t2**b

    def from_laurent(self, p: LaurentPoly) -> Fraction:
        return p.evaluate((self.t1, self.t2), one=Fraction(1))

    def qt_field(self) -> "SampledField":
        return SampledField(self.t1, 1 / self.t2, ("q", "t"))

    def specialize_qt(self, x: Fraction) -> Fraction:
        # the q,t field already sits at q = t1, t = 1/t2
        return x

    def to_string(self, x) -> str:
        return str(x)


def make_field(mode: str = "exact", seed: int = 0):
    if mode == "exact":
        return ExactField()
    if mode == "sampled":
        return SampledField.from_seed(seed)
    raise ValueError(f"unknown mode {mode!r}")


def binomial_ratio(fld, num_pairs, den_pairs, scalar=None):
    """scalar * prod(1 - t^a) / prod(1 - t^b) over exponent pairs, cancelling equal factors first."""
    from collections import Counter

    cn, cd = Counter(num_pairs), Counter(den_pairs)
    common = cn & cd
    cn, cd = cn - common, cd - common
    if (0, 0) in cd:
        raise ZeroDivisionError("factor 1 - t1^0 t2^0 in a denominator")
    if (0, 0) in cn:
        return fld.zero
    if isinstance(fld, ExactField):
        num = LaurentPoly.constant(1, 2)
        for (a, b), m in sorted(cn.items()):
            for _ in range(m):
                num = num * LaurentPoly({(0, 0): 1, (a, b): -1}, 2)
        den = LaurentPoly.constant(1, 2)
        for (a, b), m in sorted(cd.items()):
            for _ in range(m):
                den = den * LaurentPoly({(0, 0): 1, (a, b): -1}, 2)
        val = RatFun2(num, den, fld.names)
    else:
        val = fld.one
        for (a, b), m in cn.items():
            val = val * fld.binom(a, b) ** m
        for (a, b), m in cd.items():
            val = val / fld.binom(a, b) ** m
    return val if scalar is None else val * scalar
