"""Sparse multivariate Laurent polynomials over the rationals.

A polynomial is an immutable map from exponent tuples (negative entries
allowed) to nonzero coefficients.  Coefficients are Python ``int`` when
integral and :class:`fractions.Fraction` otherwise, so integer-only
arithmetic never pays for Fraction normalization.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Iterable, Mapping, Sequence

Exponent = tuple[int, ...]

# exponents beyond this are treated as overflow (the arithmetic is exact,
# but anything this large means a caller bug at the sizes we work with)
MAX_EXPONENT = 2**31 - 1


class NotDivisibleError(ArithmeticError):
    """Raised by :meth:`LaurentPoly.divide_exact` when the division leaves a remainder."""


class ExponentOverflowError(OverflowError):
    pass


def norm_coeff(c):
    """Return ``c`` as an int when it is integral."""
    if type(c) is int:
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        c = Fraction(c.numerator, c.denominator)
        return c.numerator if c.denominator == 1 else c
    raise TypeError(f"not a rational coefficient: {c!r}")


def grlex_key(e: Exponent):
    return (sum(e), e)


class LaurentPoly:
    """Immutable sparse Laurent polynomial in ``nvars`` variables."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, object] | None = None, nvars: int = 2):
        self.nvars = nvars
        clean = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} does not have {nvars} entries")
                c = norm_coeff(c)
                if c:
                    clean[tuple(e)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, nvars: int) -> "LaurentPoly":
        # trusted constructor: keys are tuples, coefficients normalized and nonzero
        p = object.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c, nvars: int = 2) -> "LaurentPoly":
        c = norm_coeff(c)
        return cls._raw({(0,) * nvars: c} if c else {}, nvars)

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1) -> "LaurentPoly":
        exps = tuple(exps)
        _check_exponent(exps)
        c = norm_coeff(coeff)
        return cls._raw({exps: c} if c else {}, len(exps))

    @classmethod
    def variable(cls, index: int, nvars: int) -> "LaurentPoly":
        e = [0] * nvars
        e[index] = 1
        return cls._raw({tuple(e): 1}, nvars)

    # -- predicates -----------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        t = self.terms
        return not t or (len(t) == 1 and (0,) * self.nvars in t)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get((0,) * self.nvars, 0)

    def is_integral(self) -> bool:
        return all(type(c) is int for c in self.terms.values())

    # -- arithmetic ------------------------------------------------------
    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        if isinstance(other, (int, Fraction)) or isinstance(other, Rational):
            return LaurentPoly.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        a, b = (self.terms, other.terms) if len(self.terms) >= len(other.terms) else (other.terms, self.terms)
        out = dict(a)
        for e, c in b.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = norm_coeff(s) if type(s) is not int else s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self.terms.items()}, self.nvars)

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

    def scale(self, c) -> "LaurentPoly":
        c = norm_coeff(c)
        if not c:
            return LaurentPoly._raw({}, self.nvars)
        if c == 1:
            return self
        if type(c) is int:
            return LaurentPoly._raw({e: v * c for e, v in self.terms.items()}, self.nvars)
        return LaurentPoly._raw({e: norm_coeff(v * c) for e, v in self.terms.items()}, self.nvars)

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            if isinstance(other, Rational):
                return self.scale(other)
            return NotImplemented
        if other.nvars != self.nvars:
            raise ValueError("variable count mismatch")
        a, b = self.terms, other.terms
        if not a or not b:
            return LaurentPoly._raw({}, self.nvars)
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        if self.nvars == 2:
            for (b1, b2), cb in b.items():
                for (a1, a2), ca in a.items():
                    k = (a1 + b1, a2 + b2)
                    out[k] = get(k, 0) + ca * cb
        else:
            for eb, cb in b.items():
                for ea, ca in a.items():
                    k = tuple([x + y for x, y in zip(ea, eb)])
                    out[k] = get(k, 0) + ca * cb
        integral = all(type(c) is int for c in a.values()) and all(type(c) is int for c in b.values())
        if integral:
            out = {k: v for k, v in out.items() if v}
        else:
            out = {k: norm_coeff(v) for k, v in out.items() if v}
        res = LaurentPoly._raw(out, self.nvars)
        res._check_overflow()
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-monomial Laurent polynomial")
            (e, c), = self.terms.items()
            return LaurentPoly._raw({tuple(n * x for x in e): norm_coeff(Fraction(1) / Fraction(c) ** (-n))}, self.nvars)
        result = LaurentPoly.constant(1, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, Rational):
            return self.terms == LaurentPoly.constant(other, self.nvars).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    # -- structure -------------------------------------------------------
    def min_exponents(self) -> Exponent:
        if not self.terms:
            return (0,) * self.nvars
        return tuple(min(col) for col in zip(*self.terms))

    def max_exponents(self) -> Exponent:
        if not self.terms:
            return (0,) * self.nvars
        return tuple(max(col) for col in zip(*self.terms))

    def shift(self, exps: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial with exponent vector ``exps``."""
        if not any(exps):
            return self
        out = {tuple([x + y for x, y in zip(e, exps)]): c for e, c in self.terms.items()}
        res = LaurentPoly._raw(out, self.nvars)
        res._check_overflow()
        return res

    def leading_term(self, key=grlex_key) -> tuple[Exponent, object]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=key)
        return e, self.terms[e]

    def sorted_terms(self, key=grlex_key) -> list[tuple[Exponent, object]]:
        return sorted(self.terms.items(), key=lambda kv: key(kv[0]), reverse=True)

    def content(self) -> int:
        """gcd of the coefficients (integral polynomials only)."""
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
            if g == 1:
                break
        return g

    def coefficient_lcm_denominator(self) -> int:
        m = 1
        for c in self.terms.values():
            if type(c) is not int:
                d = c.denominator
                m = m * d // gcd(m, d)
        return m

    def map_exponents(self, fn, nvars: int | None = None) -> "LaurentPoly":
        """Apply an exponent-vector map; colliding terms are summed."""
        nv = self.nvars if nvars is None else nvars
        out: dict = {}
        for e, c in self.terms.items():
            k = tuple(fn(e))
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out, nv)

    def permute(self, perm: Sequence[int]) -> "LaurentPoly":
        """Rename variable ``i`` to variable ``perm[i]``."""
        n = self.nvars
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        out = {tuple([e[inv[j]] for j in range(n)]): c for e, c in self.terms.items()}
        return LaurentPoly._raw(out, n)

    def evaluate(self, values: Sequence, one=1):
        """Substitute ``values[i]`` for variable ``i``.

        ``values`` may be anything closed under ``*``, ``+`` and integer
        powers (field elements, Fractions, other polynomials).
        """
        powers = [dict() for _ in range(self.nvars)]

        def pw(i, k):
            cache = powers[i]
            v = cache.get(k)
            if v is None:
                v = values[i] ** k
                cache[k] = v
            return v

        total = None
        for e, c in self.terms.items():
            term = None
            for i, k in enumerate(e):
                if k:
                    f = pw(i, k)
                    term = f if term is None else term * f
            if term is None:
                term = one * c
            else:
                term = term * c
            total = term if total is None else total + term
        return one * 0 if total is None else total

    def _check_overflow(self):
        for e in self.terms:
            for x in e:
                if x > MAX_EXPONENT or x < -MAX_EXPONENT:
                    raise ExponentOverflowError(f"exponent {x} out of range")

    # -- exact division --------------------------------------------------
    def divide_exact(self, q: "LaurentPoly") -> "LaurentPoly":
        """Return ``r`` with ``self == q * r``; raise :class:`NotDivisibleError` otherwise."""
        if not isinstance(q, LaurentPoly) or q.nvars != self.nvars:
            raise ValueError("divisor must be a LaurentPoly with the same variables")
        if not q.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.terms:
            return self
        n = self.nvars
        if q.is_monomial():
            (qe, qc), = q.terms.items()
            neg = tuple(-x for x in qe)
            return self.shift(neg).scale(Fraction(1) / qc)
        # Laurent -> polynomial: strip monomial content of q, shift self to
        # nonnegative exponents; q then has no monomial factor, so
        # divisibility in the Laurent ring equals polynomial divisibility.
        qmin = q.min_exponents()
        qp = q.shift(tuple(-x for x in qmin))
        smin = self.min_exponents()
        p = dict(self.shift(tuple(-x for x in smin)).terms)
        if _is_var_binomial(qp):
            quot = _divide_linear_binomial(p, qp, n)
        else:
            quot = _divide_general(p, qp, n)
        back = tuple(s - m for s, m in zip(smin, qmin))
        return LaurentPoly._raw(quot, n).shift(back)

    # -- display ---------------------------------------------------------
    def to_string(self, names: Sequence[str]) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                (nm if k == 1 else f"{nm}^{k}") for nm, k in zip(names, e) if k
            )
            if not mono:
                s = str(c)
            elif c == 1:
                s = mono
            elif c == -1:
                s = "-" + mono
            else:
                s = f"{c}*{mono}"
            if not parts:
                parts.append(s)
            elif s.startswith("-"):
                parts.append(" - " + s[1:])
            else:
                parts.append(" + " + s)
        return "".join(parts)

    def __repr__(self):
        names = default_names(self.nvars)
        return f"LaurentPoly({self.to_string(names)!r})"

    def __str__(self):
        return self.to_string(default_names(self.nvars))


def default_names(nvars: int) -> tuple[str, ...]:
    if nvars == 2:
        return ("t1", "t2")
    return tuple(f"x{i + 1}" for i in range(nvars))


def _check_exponent(e):
    for x in e:
        if x > MAX_EXPONENT or x < -MAX_EXPONENT:
            raise ExponentOverflowError(f"exponent {x} out of range")


def _is_var_binomial(q: LaurentPoly) -> bool:
    """True for q = x_a - c*x_b (a != b, both linear, unit leading coefficient)."""
    if len(q.terms) != 2:
        return False
    items = q.sorted_terms(key=lambda e: e)
    (e1, c1), (e2, _) = items
    return sum(e1) == 1 and max(e1) == 1 and sum(e2) == 1 and max(e2) == 1 and c1 == 1


def _divide_linear_binomial(p: dict, q: LaurentPoly, n: int) -> dict:
    # q = x_a - c x_b with a the lex-larger variable.  Synthetic division in
    # x_a: walk the terms in decreasing x_a degree, each quotient term
    # x^e / x_a feeds c * x^e * x_b / x_a back into the dividend.
    (ea, _), (eb, cb) = q.sorted_terms(key=lambda e: e)
    a = ea.index(1)
    b = eb.index(1)
    c = -cb
    by_deg: dict[int, dict] = {}
    for e, v in p.items():
        by_deg.setdefault(e[a], {})[e] = v
    quot: dict = {}
    if not by_deg:
        return quot
    top = max(by_deg)
    carry: dict = {}
    for d in range(top, -1, -1):
        layer = by_deg.get(d, {})
        if carry:
            for e, v in carry.items():
                s = layer.get(e, 0) + v
                if s:
                    layer[e] = s
                else:
                    layer.pop(e, None)
        carry = {}
        if d == 0:
            if layer:
                raise NotDivisibleError("nonzero remainder in exact division")
            break
        for e, v in layer.items():
            lst = list(e)
            lst[a] -= 1
            qe = tuple(lst)
            quot[qe] = v
            lst[b] += 1
            ce = tuple(lst)
            w = v * c
            if type(w) is not int:
                w = norm_coeff(w)
            carry[ce] = carry.get(ce, 0) + w
        carry = {e: v for e, v in carry.items() if v}
    return {e: norm_coeff(v) for e, v in quot.items() if v}


def _divide_general(p: dict, q: LaurentPoly, n: int) -> dict:
    # lex-order long division with a max-heap over the live dividend terms
    lt_e, lt_c = q.leading_term(key=lambda e: e)
    rest = [(e, c) for e, c in q.terms.items() if e != lt_e]
    heap = [tuple(-x for x in e) for e in p]
    heapq.heapify(heap)
    quot: dict = {}
    while heap:
        ne = heapq.heappop(heap)
        e = tuple(-x for x in ne)
        c = p.get(e)
        if not c:
            continue
        d = tuple([x - y for x, y in zip(e, lt_e)])
        if min(d) < 0:
            raise NotDivisibleError("nonzero remainder in exact division")
        k = norm_coeff(Fraction(c) / lt_c) if type(c) is not int or c % lt_c else c // lt_c
        quot[d] = k
        del p[e]
        for re_, rc in rest:
            te = tuple([x + y for x, y in zip(d, re_)])
            v = p.get(te, 0) - k * rc
            if type(v) is not int:
                v = norm_coeff(v)
            if v:
                if te not in p:
                    heapq.heappush(heap, tuple(-x for x in te))
                p[te] = v
            else:
                p.pop(te, None)
    return quot


def poly_divide_exact(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Exact quotient ``p / q``; raises :class:`NotDivisibleError` if there is a remainder."""
    return p.divide_exact(q)


def from_terms(pairs: Iterable[tuple[Exponent, object]], nvars: int) -> LaurentPoly:
    out: dict = {}
    for e, c in pairs:
        out[e] = out.get(e, 0) + c
    return LaurentPoly(out, nvars)


def parse_laurent(text: str, names: Sequence[str]) -> LaurentPoly:
    """Parse the canonical text form, e.g. ``1 - t1^-1*t2 + 3/2*t2^2``."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    index = {nm: i for i, nm in enumerate(names)}
    # split at + / - that are not exponent signs
    terms, start = [], 0
    for pos in range(1, len(s)):
        if s[pos] in "+-" and s[pos - 1] != "^":
            terms.append(s[start:pos])
            start = pos
    terms.append(s[start:])
    out: dict = {}
    for term in terms:
        sign = 1
        if term[0] in "+-":
            sign = -1 if term[0] == "-" else 1
            term = term[1:]
        coeff = Fraction(sign)
        exps = [0] * len(names)
        for factor in term.split("*"):
            if not factor:
                raise ValueError(f"malformed term in {text!r}")
            if factor[0].isdigit():
                coeff *= Fraction(factor)
                continue
            name, _, power = factor.partition("^")
            if name not in index:
                raise ValueError(f"unknown variable {name!r}")
            exps[index[name]] += int(power) if power else 1
        key = tuple(exps)
        out[key] = out.get(key, 0) + coeff
    return LaurentPoly(out, len(names))
