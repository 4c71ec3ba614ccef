"""Bridge between LaurentPoly and flint's sparse multivariate polynomials.

Laurent polynomials are moved to an honest polynomial ring by multiplying
with a monomial; the caller keeps track of that shift.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import flint

from .laurent import LaurentPoly


@lru_cache(maxsize=None)
def context(nvars: int):
    names = tuple(f"v{i}" for i in range(nvars))
    return flint.fmpq_mpoly_ctx.get(names, "lex")


def to_flint(p: LaurentPoly, shift=None):
    """p * v^shift as a flint polynomial; shift defaults to -min_exponents."""
    ctx = context(p.nvars)
    if shift is None:
        shift = tuple(-m for m in p.min_exponents()) if not p.is_zero() else (0,) * p.nvars
    terms = {}
    for e, c in p.terms.items():
        k = tuple(a + s for a, s in zip(e, shift))
        if min(k, default=0) < 0:
            raise ValueError("shift does not clear the denominators")
        terms[k] = c
    return ctx.from_dict(terms), tuple(shift)


def from_flint(q, nvars: int, shift=None) -> LaurentPoly:
    """q * v^-shift as a LaurentPoly."""
    if shift is None:
        shift = (0,) * nvars
    out = {}
    for e, c in q.to_dict().items():
        out[tuple(int(a) - s for a, s in zip(e, shift))] = int(c.p) if c.q == 1 else Fraction(int(c.p), int(c.q))
    return LaurentPoly(out, nvars)
