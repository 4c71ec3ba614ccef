"""Rational functions in two variables with exact canonical form.

Numerator and denominator are integral :class:`LaurentPoly` values.  The
canonical form keeps the denominator free of monomial factors, with a
positive leading coefficient (grlex, first variable largest), and coprime
to the numerator.  Equality never relies on the canonical form: it is
decided by cross-multiplication.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational

import flint

from .laurent import LaurentPoly, grlex_key, norm_coeff

_RING = flint.fmpz_mpoly_ctx.get(("u", "v"), "lex")
_ONE = LaurentPoly.constant(1, 2)
_ZERO = LaurentPoly.constant(0, 2)


def _to_flint(p: LaurentPoly):
    return _RING.from_dict(p.terms)


def _from_flint(p) -> LaurentPoly:
    return LaurentPoly._raw({tuple(int(a) for a in e): int(c) for e, c in p.to_dict().items()}, 2)


def _poly_part(p: LaurentPoly) -> tuple[LaurentPoly, tuple[int, int]]:
    """Split ``p`` as ``x^m * q`` with ``q`` a polynomial without monomial factor."""
    m = p.min_exponents()
    if m == (0, 0):
        return p, m
    return p.shift((-m[0], -m[1])), m


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """gcd of two integral polynomials (nonnegative exponents), up to sign."""
    if b.is_constant() or a.is_constant():
        return _ONE
    return _from_flint(_to_flint(a).gcd(_to_flint(b)))


def _integralize(p: LaurentPoly) -> tuple[LaurentPoly, int]:
    d = p.coefficient_lcm_denominator()
    if d == 1:
        return p, 1
    return p.scale(d), d


def _div(p: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    if g.is_constant():
        c = g.constant_value()
        return p if c == 1 else p.scale(Fraction(1, c))
    return p.divide_exact(g)


class RatFun2:
    """Element of Q(t1, t2); ``names`` only affects display."""

    __slots__ = ("num", "den", "names")

    def __init__(self, num, den=None, names=("t1", "t2"), _canonical=False):
        if not isinstance(num, LaurentPoly):
            num = LaurentPoly.constant(num, 2)
        if den is None:
            den = _ONE
        elif not isinstance(den, LaurentPoly):
            den = LaurentPoly.constant(den, 2)
        self.names = names
        if _canonical:
            self.num, self.den = num, den
            return
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self.num, self.den = _canonicalize(num, den)

    # -- constructors ------------------------------------------------------
    @classmethod
    def const(cls, c, names=("t1", "t2")) -> "RatFun2":
        c = norm_coeff(c)
        if type(c) is int:
            return cls(LaurentPoly.constant(c, 2), _ONE, names, _canonical=True)
        return cls(LaurentPoly.constant(c.numerator, 2), LaurentPoly.constant(c.denominator, 2), names, _canonical=True)

    @classmethod
    def mono(cls, a: int, b: int, coeff=1, names=("t1", "t2")) -> "RatFun2":
        c = norm_coeff(coeff)
        if type(c) is int:
            return cls(LaurentPoly.monomial((a, b), c), _ONE, names, _canonical=True)
        return cls(LaurentPoly.monomial((a, b), c.numerator), LaurentPoly.constant(c.denominator, 2), names, _canonical=True)

    @classmethod
    def from_laurent(cls, p: LaurentPoly, names=("t1", "t2")) -> "RatFun2":
        if p.is_integral():
            return cls(p, _ONE, names, _canonical=True)
        return cls(p, _ONE, names)

    def with_names(self, names) -> "RatFun2":
        return RatFun2(self.num, self.den, names, _canonical=True)

    # -- predicates ----------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den.is_constant()

    def to_laurent(self) -> LaurentPoly:
        """The value as a Laurent polynomial; raises if it is not one."""
        if not self.den.is_constant():
            raise ValueError("rational function is not a Laurent polynomial")
        c = self.den.constant_value()
        return self.num if c == 1 else self.num.scale(Fraction(1, c))

    # -- arithmetic ----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, RatFun2):
            return other
        if isinstance(other, LaurentPoly):
            return RatFun2.from_laurent(other, self.names)
        if isinstance(other, Rational):
            return RatFun2.const(other, self.names)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other if other.names == self.names else other.with_names(self.names)
        a, b, c, d = self.num, self.den, other.num, other.den
        if b == d:
            return self._make(a + c, b)
        if b.is_constant() or d.is_constant():
            return self._make(a * d + c * b, b * d)
        g = poly_gcd(b, d)
        if g.is_constant():
            return self._make(a * d + c * b, b * d)
        d_g = d.divide_exact(g)
        b_g = b.divide_exact(g)
        num = a * d_g + c * b_g
        if num.is_zero():
            return RatFun2.const(0, self.names)
        # any common factor of num and b*d_g divides g
        npoly, nshift = _poly_part(num)
        h = poly_gcd(npoly, g)
        den = b * d_g
        if not h.is_constant():
            npoly = npoly.divide_exact(h)
            den = den.divide_exact(h)
        return self._make(npoly.shift(nshift), den, reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return RatFun2(-self.num, self.den, self.names, _canonical=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, Rational):
            c = norm_coeff(other)
            if c == 1:
                return self
            if c == 0:
                return RatFun2.const(0, self.names)
            if type(c) is int:
                return self._make(self.num.scale(c), self.den, reduced=True)
            return self._make(self.num.scale(c.numerator), self.den.scale(c.denominator), reduced=True)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero() or c.is_zero():
            return RatFun2.const(0, self.names)
        # cross-cancel: gcd(a, d) and gcd(c, b)
        if not d.is_constant() and not a.is_monomial():
            ap, ash = _poly_part(a)
            g = poly_gcd(ap, d)
            if not g.is_constant():
                a = ap.divide_exact(g).shift(ash)
                d = d.divide_exact(g)
        if not b.is_constant() and not c.is_monomial():
            cp, csh = _poly_part(c)
            g = poly_gcd(cp, b)
            if not g.is_constant():
                c = cp.divide_exact(g).shift(csh)
                b = b.divide_exact(g)
        return self._make(a * c, b * d, reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "RatFun2":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        npoly, sh = _poly_part(self.num)
        den = npoly
        num = self.den.shift((-sh[0], -sh[1]))
        return self._make(num, den, reduced=True)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return RatFun2.const(1, self.names)
        if self.den == _ONE and self.num.is_monomial():
            return RatFun2(self.num ** n, _ONE, self.names, _canonical=True)
        # powers of coprime pairs stay coprime
        return self._make(self.num ** n, self.den ** n, reduced=True)

    def _make(self, num: LaurentPoly, den: LaurentPoly, reduced=False) -> "RatFun2":
        if reduced:
            n, d = _normalize_units(num, den)
            return RatFun2(n, d, self.names, _canonical=True)
        return RatFun2(num, den, self.names)

    # -- comparison ------------------------------------------------------------
    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num == other.num and self.den == other.den:
            return True
        if self.num.is_zero() or other.num.is_zero():
            return self.num.is_zero() and other.num.is_zero()
        return self.num * other.den == other.num * self.den

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash((self.num, self.den))

    # -- evaluation and substitution -------------------------------------------
    def evaluate(self, t1, t2):
        """Value at rational points; raises ZeroDivisionError at a pole."""
        d = self.den.evaluate((t1, t2), one=Fraction(1))
        if d == 0:
            raise ZeroDivisionError("evaluation at a pole")
        return self.num.evaluate((t1, t2), one=Fraction(1)) / d

    def map_exponents(self, fn) -> "RatFun2":
        """Apply a monomial substitution ``t^e -> t^fn(e)`` to numerator and denominator."""
        return RatFun2(self.num.map_exponents(fn), self.den.map_exponents(fn), self.names)

    # -- display ---------------------------------------------------------------
    def to_string(self) -> str:
        ns = self.num.to_string(self.names)
        if self.den == _ONE:
            return ns
        return f"({ns}) / ({self.den.to_string(self.names)})"

    __str__ = to_string

    def __repr__(self):
        return f"RatFun2({self.to_string()!r})"


def _normalize_units(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Fix integer content and sign once num and den are polynomially coprime."""
    if num.is_zero():
        return num, _ONE
    cn = num.content()
    cd = den.content()
    g = gcd(cn, cd)
    _, lc = den.leading_term(grlex_key)
    if lc < 0:
        g = -g
    if g != 1:
        num = LaurentPoly._raw({e: c // g for e, c in num.terms.items()}, 2)
        den = LaurentPoly._raw({e: c // g for e, c in den.terms.items()}, 2)
    return num, den


def _canonicalize(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    if num.is_zero():
        return num, _ONE
    num, dn = _integralize(num)
    den, dd = _integralize(den)
    if dn != 1:
        den = den.scale(dn)
    if dd != 1:
        num = num.scale(dd)
    dpoly, dsh = _poly_part(den)
    if dsh != (0, 0):
        num = num.shift((-dsh[0], -dsh[1]))
    den = dpoly
    if not den.is_constant():
        npoly, nsh = _poly_part(num)
        g = poly_gcd(npoly, den)
        if not g.is_constant():
            num = npoly.divide_exact(g).shift(nsh)
            den = den.divide_exact(g)
    return _normalize_units(num, den)


def ratfun_eq(a: RatFun2, b: RatFun2) -> bool:
    return a == b


def parse_ratfun(text: str, names=("t1", "t2")) -> RatFun2:
    """Inverse of :meth:`RatFun2.to_string`."""
    from .laurent import parse_laurent

    s = text.strip()
    if s.startswith("(") and ") / (" in s and s.endswith(")"):
        num_s, den_s = s[1:-1].split(") / (", 1)
        return RatFun2(parse_laurent(num_s, names), parse_laurent(den_s, names), names)
    return RatFun2(parse_laurent(s, names), None, names)
