"""The shuffle algebra and its action on the Fock space.

An element of arity n is f(x_1..x_n) / prod_{i<j} (x_i - x_j)^2 with f a
symmetric Laurent polynomial.  Only f is stored, as a LaurentPoly in the
n + 2 variables (x_1, ..., x_n, t1, t2); the parameters enter through the
kernel, so coefficients are Laurent polynomials in t1, t2.

The product symmetrizes by summing over shuffles (coset representatives of
S_{m+n} / S_m x S_n) without any factorial normalization.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from fractions import Fraction
from math import comb, factorial

import flint
from flint.utils.flint_exceptions import DomainError

from .exact.field import ExactField
from .exact.laurent import LaurentPoly
from .exact.mpoly import context, from_flint, to_flint
from .fockrep import EXACT, GradedOperator, e_base
from .partitions import Partition, addable_rows, chi_exponent, partitions_of
from .report import Check, Tally

DEFAULT_ARITY_CAP = 5


class ShuffleError(AssertionError):
    """Internal consistency failure (non-exact division, asymmetric result, unresolved pole)."""


class ShuffleElement:
    __slots__ = ("arity", "num")

    def __init__(self, arity: int, num: LaurentPoly, check: bool = True):
        if num.nvars != arity + 2:
            raise ValueError(f"numerator must have {arity + 2} variables")
        self.arity = arity
        self.num = num
        if check and not is_symmetric(num, arity):
            raise ShuffleError("numerator is not symmetric in x_1..x_n")

    def __eq__(self, other):
        if not isinstance(other, ShuffleElement):
            return NotImplemented
        return self.arity == other.arity and self.num == other.num

    def __hash__(self):
        return hash((self.arity, self.num))

    def __add__(self, other: "ShuffleElement") -> "ShuffleElement":
        if other.arity != self.arity:
            raise ValueError("arity mismatch")
        return ShuffleElement(self.arity, self.num + other.num, check=False)

    def scale(self, c) -> "ShuffleElement":
        return ShuffleElement(self.arity, self.num.scale(c), check=False)

    def __mul__(self, other: "ShuffleElement") -> "ShuffleElement":
        return star_product(self, other)

    def names(self) -> tuple[str, ...]:
        return tuple(f"x{i + 1}" for i in range(self.arity)) + ("t1", "t2")

    def to_text(self) -> str:
        return f"{self.arity}: {self.num.to_string(self.names())}"

    def __repr__(self):
        return f"ShuffleElement({self.to_text()!r})"


def is_symmetric(num: LaurentPoly, n: int) -> bool:
    if n < 2:
        return True
    extra = [n, n + 1]
    swap = [1, 0] + list(range(2, n)) + extra
    cycle = [(i + 1) % n for i in range(n)] + extra
    return num.permute(swap) == num and (n == 2 or num.permute(cycle) == num)


def unit() -> ShuffleElement:
    """The unit of the algebra (arity 0)."""
    return ShuffleElement(0, LaurentPoly.constant(1, 2))


def generator(r: int) -> ShuffleElement:
    """x^r in arity 1."""
    return ShuffleElement(1, LaurentPoly.monomial((r, 0, 0)))


def _var(i: int, nv: int, coeff=1) -> LaurentPoly:
    e = [0] * nv
    e[i] = 1
    return LaurentPoly.monomial(e, coeff)


def _tmono(a: int, b: int, nv: int) -> LaurentPoly:
    e = [0] * nv
    e[nv - 2], e[nv - 1] = a, b
    return LaurentPoly.monomial(e)


def vandermonde(idx, nv: int) -> LaurentPoly:
    """prod_{a<b} (x_a - x_b) over the given variable indices."""
    out = LaurentPoly.constant(1, nv)
    for a, b in itertools.combinations(idx, 2):
        out = out * (_var(a, nv) - _var(b, nv))
    return out


def kernel_numerator(i: int, j: int, nv: int) -> LaurentPoly:
    """(x_i - q1 x_j)(x_i - q2 x_j)(x_i - q3 x_j) with q = (t1, t2, 1/(t1 t2))."""
    xi, xj = _var(i, nv), _var(j, nv)
    out = LaurentPoly.constant(1, nv)
    for a, b in ((1, 0), (0, 1), (-1, -1)):
        out = out * (xi - xj * _tmono(a, b, nv))
    return out


def _embed(num: LaurentPoly, arity: int, slots, nv: int) -> LaurentPoly:
    """Rename x_k -> x_{slots[k]} and move t1, t2 into an nv-variable ring."""

    def fn(e):
        out = [0] * nv
        for k in range(arity):
            out[slots[k]] = e[k]
        out[nv - 2], out[nv - 1] = e[arity], e[arity + 1]
        return out

    return num.map_exponents(fn, nv)


def star_product(F: ShuffleElement, G: ShuffleElement, arity_cap: int = DEFAULT_ARITY_CAP) -> ShuffleElement:
    """F * G, symmetrized as a sum over (m, n)-shuffles."""
    m, n = F.arity, G.arity
    N = m + n
    if N > arity_cap:
        raise ValueError(f"arity {N} exceeds the cap {arity_cap}")
    if m == 0 or n == 0:
        c = (F if m == 0 else G).num.constant_value() if (F if m == 0 else G).num.is_constant() else None
        if c is None:
            raise ValueError("arity-0 elements must be constants")
        other = G if m == 0 else F
        return other.scale(c)
    return _star_cached(F.num, m, G.num, n)


@lru_cache(maxsize=256)
def _star_cached(fnum: LaurentPoly, m: int, gnum: LaurentPoly, n: int) -> ShuffleElement:
    N = m + n
    nv = N + 2
    S0, T0 = list(range(m)), list(range(m, N))
    fe, ge = _embed(fnum, m, S0, nv), _embed(gnum, n, T0, nv)
    # a uniform shift of the x variables survives the shuffle sum unchanged
    c = max([0] + [-a for p in (fe, ge) for a in p.min_exponents()[:N]])
    fp, fs = to_flint(fe, _shift_for(fe, N, c))
    gp, gs = to_flint(ge, _shift_for(ge, N, c))
    gens = context(nv).gens()
    xs, t1, t2 = gens[:N], gens[N], gens[N + 1]
    template = fp * gp
    for i in S0:
        for j in T0:
            # t1 t2 times the kernel numerator, which is a polynomial
            template *= (xs[i] - t1 * xs[j]) * (xs[i] - t2 * xs[j]) * (t1 * t2 * xs[i] - xs[j])
    for idx in (S0, T0):
        for a, b in itertools.combinations(idx, 2):
            template *= xs[a] - xs[b]
    total = context(nv).from_dict({})
    for S in itertools.combinations(range(N), m):
        T = [k for k in range(N) if k not in S]
        perm = list(S) + T  # slot -> variable
        term = _permute_flint(template, perm, nv)
        total = total + term if _sign(perm) > 0 else total - term
    try:
        for a, b in itertools.combinations(range(N), 2):
            total = total / (xs[a] - xs[b])
    except DomainError as exc:
        raise ShuffleError("shuffle sum is not divisible by the Vandermonde product") from exc
    shift = tuple(x + y for x, y in zip(fs, gs))
    shift = shift[:N] + (shift[N] + m * n, shift[N + 1] + m * n)
    out = from_flint(total, nv, shift)
    if not is_symmetric(out, N):
        raise ShuffleError("shuffle product is not symmetric")
    return ShuffleElement(N, out, check=False)


def _permute_flint(p, perm, nv: int):
    # variable k -> variable perm[k], routed through a context with fresh names
    ctx, tmp = context(nv), _renamed_context(nv)
    there = p.project_to_context(tmp, mapping={f"v{k}": f"w{perm[k]}" for k in range(len(perm))} | {f"v{k}": f"w{k}" for k in range(len(perm), nv)})
    return there.project_to_context(ctx, mapping={f"w{k}": f"v{k}" for k in range(nv)})


@lru_cache(maxsize=None)
def _renamed_context(nv: int):
    return flint.fmpq_mpoly_ctx.get(tuple(f"w{i}" for i in range(nv)), "lex")


def _shift_for(p: LaurentPoly, N: int, c: int) -> tuple:
    mins = p.min_exponents() if not p.is_zero() else (0,) * p.nvars
    return (c,) * N + tuple(max(0, -a) for a in mins[N:])


def _sign(perm) -> int:
    s = 1
    p = list(perm)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            s = -s
    return s


@lru_cache(maxsize=None)
def k_element(n: int) -> ShuffleElement:
    """K_n: numerator prod_{i<j} (x_i - t1 x_j)(x_j - t1 x_i)."""
    if n < 1:
        raise ValueError("n must be positive")
    nv = n + 2
    num = LaurentPoly.constant(1, nv)
    t1 = _tmono(1, 0, nv)
    for i, j in itertools.combinations(range(n), 2):
        xi, xj = _var(i, nv), _var(j, nv)
        num = num * (xi - t1 * xj) * (xj - t1 * xi)
    return ShuffleElement(n, num)


def constant_one(n: int) -> ShuffleElement:
    """The constant function 1 of arity n (numerator prod (x_i - x_j)^2)."""
    nv = n + 2
    v = vandermonde(range(n), nv)
    return ShuffleElement(n, v * v)


def wheel_specializations(F: ShuffleElement) -> list[LaurentPoly]:
    """Numerator at (x1, x2, x3) = (q1 q_j s, q_j s, s), j = 2, 3, as polynomials in (s, x4.., t1, t2)."""
    n = F.arity
    if n < 3:
        raise ValueError("wheel condition needs arity >= 3")
    out = []
    # (t1, t2) exponents of q1 q_j and q_j
    for (a1, b1), (a2, b2) in (((1, 1), (0, 1)), ((0, -1), (-1, -1))):

        def fn(e, a1=a1, b1=b1, a2=a2, b2=b2):
            s = e[0] + e[1] + e[2]
            rest = list(e[3:n])
            t1 = e[n] + a1 * e[0] + a2 * e[1]
            t2 = e[n + 1] + b1 * e[0] + b2 * e[1]
            return [s] + rest + [t1, t2]

        out.append(F.num.map_exponents(fn, n))
    return out


def wheel_check(F: ShuffleElement) -> bool:
    return all(p.is_zero() for p in wheel_specializations(F))


# ---------------------------------------------------------------------------
# action on the Fock space


def skew_boxes(lam: Partition, big: Partition) -> list[tuple[int, int]] | None:
    """Boxes of big / lam in row order, or None if lam is not inside big."""
    if len(big) < len(lam) or any(big.row(i) < lam.row(i) for i in range(1, len(lam) + 1)):
        return None
    return [(i, j) for i in range(1, len(big) + 1) for j in range(lam.row(i) + 1, big.row(i) + 1)]


def adding_orders(lam: Partition, big: Partition):
    """All orders in which the boxes of big / lam can be added one at a time."""
    boxes = skew_boxes(lam, big)
    if boxes is None:
        return

    def rec(cur: Partition, left: list):
        if not left:
            yield []
            return
        for idx, (i, j) in enumerate(left):
            if cur.row(i) == j - 1 and i in addable_rows(cur):
                nxt = cur.add_box(i)
                for rest in rec(nxt, left[:idx] + left[idx + 1:]):
                    yield [(i, j)] + rest

    yield from rec(lam, boxes)


_Q = ((1, 0), (0, 1), (-1, -1))


def _eps_binomials(e: int, w: int, order: int) -> list[int]:
    # coefficients of (1 + w eps)^e up to eps^order, e any integer
    out, c = [], 1
    for k in range(order + 1):
        out.append(c * w**k)
        c = c * (e - k) // (k + 1) if (e - k) % (k + 1) == 0 else None
        if c is None:
            # general binomial(e, k+1) for negative e
            c = _gbinom(e, k + 1)
    return out


def _gbinom(e: int, k: int) -> int:
    if e >= 0:
        return comb(e, k)
    # binom(-n, k) = (-1)^k binom(n + k - 1, k)
    return (-1) ** k * comb(-e + k - 1, k)


def _series_mul(a: list, b: list, order: int) -> list:
    out = [None] * (order + 1)
    for i, x in enumerate(a):
        if x is None or x.is_zero():
            continue
        for j in range(order + 1 - i):
            y = b[j]
            if y is None or y.is_zero():
                continue
            out[i + j] = x * y if out[i + j] is None else out[i + j] + x * y
    zero = LaurentPoly.constant(0, 2)
    return [zero if v is None else v for v in out]


@lru_cache(maxsize=64)
def _flint_numerator(num: LaurentPoly):
    return to_flint(num)


def _multi_indices(n: int, j: int):
    if n == 0:
        if j == 0:
            yield ()
        return
    for a in range(j + 1):
        for rest in _multi_indices(n - 1, j - a):
            yield (a,) + rest


def _eval_at_chars(num: LaurentPoly, n: int, chars, weights, order: int) -> list[LaurentPoly]:
    """Truncated eps-expansion of num at x_k = chi_k (1 + eps w_k), coefficients in t1, t2.

    The coefficient of eps^j is a sum of partial derivatives of order j,
    each evaluated at the characters.
    """
    P, shift = _flint_numerator(num)
    ctx2 = context(2)
    T1, T2 = ctx2.gens()
    subs = [T1**a * T2**b for a, b in chars]
    raw = []
    for j in range(order + 1):
        acc = ctx2.from_dict({})
        for alpha in _multi_indices(n, j):
            d = P
            scale = Fraction(1)
            for k, a in enumerate(alpha):
                for _ in range(a):
                    d = d.derivative(k)
                scale *= Fraction(weights[k] ** a, factorial(a))
            if d.is_zero():
                continue
            mono = ctx2.from_dict({(sum(a * chars[k][0] for k, a in enumerate(alpha)), sum(a * chars[k][1] for k, a in enumerate(alpha))): 1})
            acc += d.compose(*subs, T1, T2) * mono * flint.fmpq(scale.numerator, scale.denominator)
        raw.append(acc)
    # undo the shift: multiply by prod_k (chi_k (1 + eps w_k))^(-s_k) * t^(-s_t)
    ta = -shift[n] - sum(shift[k] * chars[k][0] for k in range(n))
    tb = -shift[n + 1] - sum(shift[k] * chars[k][1] for k in range(n))
    corr = [1] + [0] * order
    for k in range(n):
        if shift[k]:
            b = [_gbinom(-shift[k], i) * weights[k] ** i for i in range(order + 1)]
            corr = [sum(corr[i] * b[j - i] for i in range(j + 1)) for j in range(order + 1)]
    out = []
    for j in range(order + 1):
        acc = LaurentPoly.constant(0, 2)
        for i in range(j + 1):
            if corr[j - i]:
                acc = acc + from_flint(raw[i], 2, (-ta, -tb)).scale(corr[j - i])
        out.append(acc)
    return out


def _linear_factor(ca, cb, q, wa, wb) -> list[LaurentPoly]:
    """x_a - q x_b at x = chi (1 + eps w), as [eps^0, eps^1] coefficients."""
    qa = (cb[0] + q[0], cb[1] + q[1])
    c0 = LaurentPoly({ca: 1}, 2) - LaurentPoly({qa: 1}, 2)
    c1 = LaurentPoly({ca: wa}, 2) - LaurentPoly({qa: wb}, 2)
    return [c0, c1]


def shuffle_value(F: ShuffleElement, chars, weights=None) -> tuple[LaurentPoly, LaurentPoly]:
    """F(x) / prod_{a<b} lambda(x_a, x_b) at x_k = chars[k], as a (num, den) pair of Laurent polynomials.

    When some kernel factor x_a - q x_b vanishes at the characters the value
    is the limit along x_k = chi_k (1 + eps w_k); the numerator must vanish
    to the same order, otherwise ShuffleError is raised.
    """
    n = F.arity
    if weights is None:
        weights = list(range(1, n + 1))
    pairs = list(itertools.combinations(range(n), 2))
    vanishing = 0
    for a, b in pairs:
        for q in _Q:
            if chars[a] == (chars[b][0] + q[0], chars[b][1] + q[1]):
                vanishing += 1
    order = vanishing
    num = _eval_at_chars(F.num, n, chars, weights, order)
    den = [LaurentPoly.constant(1, 2)] + [LaurentPoly.constant(0, 2)] * order
    for a, b in pairs:
        # prod (x_a - x_b) goes to the numerator, kernel numerators to the denominator
        lf = _linear_factor(chars[a], chars[b], (0, 0), weights[a], weights[b])
        num = _series_mul(num, lf + [LaurentPoly.constant(0, 2)] * max(0, order - 1), order)
        for q in _Q:
            lf = _linear_factor(chars[a], chars[b], q, weights[a], weights[b])
            den = _series_mul(den, lf + [LaurentPoly.constant(0, 2)] * max(0, order - 1), order)
    for j in range(order):
        if not den[j].is_zero():
            raise ShuffleError("denominator vanishes to lower order than counted")
        if not num[j].is_zero():
            raise ShuffleError("pole in the matrix element: numerator does not vanish at the characters")
    if den[order].is_zero():
        raise ShuffleError("weights are degenerate for the eps-limit")
    return num[order], den[order]


def shuffle_matrix_element(F: ShuffleElement, lam: Partition, big: Partition, fld=EXACT, order=None, weights=None):
    """Matrix element of F from [lam] to [big].

    ``order`` is the sequence of added boxes (default: row by row, left to
    right); any valid adding order gives the same value.
    """
    lam, big = Partition(lam), Partition(big)
    if big.size - lam.size != F.arity:
        return fld.zero
    boxes = skew_boxes(lam, big)
    if boxes is None:
        return fld.zero
    if F.arity == 0:
        return fld.from_laurent(F.num)
    if order is not None:
        if sorted(order) != sorted(boxes):
            raise ValueError("order must list exactly the added boxes")
        boxes = list(order)
    chain = fld.one
    cur = lam
    for (i, j) in boxes:
        if cur.row(i) != j - 1 or i not in addable_rows(cur):
            raise ValueError(f"box {(i, j)} cannot be added to {cur.to_text()}")
        chain = chain * e_base(cur, i, fld)
        cur = cur.add_box(i)
    chars = [chi_exponent(b) for b in boxes]
    num, den = shuffle_value(F, chars, weights)
    if isinstance(fld, ExactField):
        from .exact.ratfun import RatFun2

        return RatFun2(num, den, fld.names) * chain
    return fld.from_laurent(num) / fld.from_laurent(den) * chain


def partitions_containing(lam: Partition, n: int) -> list[Partition]:
    """Partitions of |lam| + n that contain lam."""
    return [p for p in partitions_of(lam.size + n) if skew_boxes(lam, p) is not None]


def act_shuffle(F: ShuffleElement, v, fld=EXACT):
    from .fockrep import FockVector

    out: dict = {}
    for lam, c in v.coeffs.items():
        for big in partitions_containing(lam, F.arity):
            x = shuffle_matrix_element(F, lam, big, fld)
            if x != 0:
                out[big] = out[big] + c * x if big in out else c * x
    return FockVector(out)


def shuffle_operator(F: ShuffleElement, nmax: int, fld=EXACT) -> GradedOperator:
    """F as an operator on source degrees whose targets stay within size nmax."""
    return _shuffle_operator_cached(F, nmax, fld)


@lru_cache(maxsize=128)
def _shuffle_operator_cached(F, nmax, fld):
    degrees = range(0, nmax - F.arity + 1)
    return GradedOperator.from_function(
        F.arity,
        degrees,
        lambda lam: {big: shuffle_matrix_element(F, lam, big, fld) for big in partitions_containing(lam, F.arity)},
    )


# ---------------------------------------------------------------------------
# verification


def verify_homomorphism(F: ShuffleElement, G: ShuffleElement, nmax: int = 4, fld=EXACT, label: str | None = None) -> Check:
    """Acting by F after G equals acting by G * F, on all sizes <= nmax."""
    label = label or f"arity-{F.arity} o arity-{G.arity}"
    tally = Tally(f"homomorphism[{label}]", "F acting after G equals the action of G * F")
    lhs = shuffle_operator(F, nmax, fld).compose(shuffle_operator(G, nmax - F.arity, fld))
    rhs = shuffle_operator(star_product(G, F), nmax, fld)
    tally.count += lhs.count_entries(rhs)
    d = lhs.first_difference(rhs)
    if d:
        tally.fail(source=d[0], target=d[1], composed=d[2], product=d[3])
    return tally.result()


def verify_order_independence(F: ShuffleElement, nmax: int = 4, fld=EXACT, label: str | None = None, max_orders: int = 24) -> Check:
    """The matrix element does not depend on the order in which the boxes are added."""
    label = label or f"arity-{F.arity}"
    tally = Tally(f"order-independence[{label}]", "matrix element of F is independent of the order of adding boxes")
    for n in range(0, nmax - F.arity + 1):
        for lam in partitions_of(n):
            for big in partitions_containing(lam, F.arity):
                ref = shuffle_matrix_element(F, lam, big, fld)
                for k, order in enumerate(adding_orders(lam, big)):
                    if k >= max_orders:
                        break
                    tally.compare(shuffle_matrix_element(F, lam, big, fld, order=order), ref, source=lam, target=big, order=order)
    return tally.result()


def verify_k_commute(m: int, n: int, nmax: int = 5, fld=EXACT) -> Check:
    """K_m * K_n = K_n * K_m as elements and as operators."""
    tally = Tally(f"K-commute[{m},{n}]", "K_m * K_n = K_n * K_m, as shuffle elements and as operators")
    a = star_product(k_element(m), k_element(n))
    b = star_product(k_element(n), k_element(m))
    tally.require(a == b, m=m, n=n, problem="elements differ")
    if m + n <= nmax:
        oa, ob = shuffle_operator(a, nmax, fld), shuffle_operator(b, nmax, fld)
        tally.count += oa.count_entries(ob)
        d = oa.first_difference(ob)
        if d:
            tally.fail(m=m, n=n, source=d[0], target=d[1], lhs=d[2], rhs=d[3], problem="product operators differ")
    # the operators of K_m and K_n commute
    km, kn = shuffle_operator(k_element(m), nmax, fld), shuffle_operator(k_element(n), nmax, fld)
    lhs = km.compose(kn.restrict(range(0, nmax - m - n + 1)))
    rhs = kn.compose(km.restrict(range(0, nmax - m - n + 1)))
    tally.count += lhs.count_entries(rhs)
    d = lhs.first_difference(rhs)
    if d:
        tally.fail(m=m, n=n, source=d[0], target=d[1], lhs=d[2], rhs=d[3], problem="operators do not commute")
    return tally.result()


def verify_generator_action(r_range=range(-2, 3), nmax: int = 5, fld=EXACT) -> Check:
    """x^r in arity 1 acts as e_r."""
    from .fockrep import e_operator

    tally = Tally("generators-act-as-e", "the arity-1 element x^r acts as e_r")
    for r in r_range:
        a = shuffle_operator(generator(r), nmax, fld)
        b = e_operator(r, nmax - 1, fld)
        tally.count += a.count_entries(b)
        d = a.first_difference(b)
        if d:
            tally.fail(r=r, source=d[0], target=d[1], lhs=d[2], rhs=d[3])
    return tally.result()


def adjacent_pair_vanishes(i: int, j: int) -> bool:
    """For boxes (i, j) and (i, j + 1), the factor (chi_right - q1 chi_left) is zero."""
    a = chi_exponent((i, j + 1))
    b = chi_exponent((i, j))
    return a == (b[0] + 1, b[1])


def verify_associativity(gens=(-1, 0, 1)) -> Check:
    tally = Tally("shuffle:associativity", "the shuffle product is associative")
    for a, b, c in itertools.product(gens, repeat=3):
        A, B, C = generator(a), generator(b), generator(c)
        tally.compare(star_product(star_product(A, B), C), star_product(A, star_product(B, C)), triple=[a, b, c])
    return tally.result()


def verify_wheel(gens=(-1, 0, 1)) -> Check:
    """Every 3-fold product of arity-1 monomials satisfies the wheel condition; the constant 1 does not."""
    tally = Tally("shuffle:wheel", "numerators of products of arity-1 generators vanish on the wheels")
    for word in itertools.product(gens, repeat=3):
        F = star_product(star_product(generator(word[0]), generator(word[1])), generator(word[2]))
        tally.require(wheel_check(F), word=list(word))
    tally.require(wheel_check(k_element(3)), element="K3")
    tally.require(not wheel_check(constant_one(3)), element="constant 1 of arity 3", problem="expected to violate the wheel condition")
    return tally.result()


def verify_limit_weights(F: ShuffleElement, nmax: int = 5, fld=EXACT, label: str | None = None) -> Check:
    """Matrix elements at vanishing kernel factors do not depend on the direction of approach."""
    label = label or f"arity-{F.arity}"
    tally = Tally(f"pole-limit[{label}]", "matrix elements at a vanishing kernel factor are independent of the limiting direction")
    alt = [k * k + 3 for k in range(1, F.arity + 1)]
    for n in range(0, nmax - F.arity + 1):
        for lam in partitions_of(n):
            for big in partitions_containing(lam, F.arity):
                chars = [chi_exponent(b) for b in skew_boxes(lam, big)]
                if not any(chars[a] == (chars[b][0] - 1, chars[b][1] - 1) for a, b in itertools.combinations(range(len(chars)), 2)):
                    continue
                tally.compare(shuffle_matrix_element(F, lam, big, fld, weights=alt), shuffle_matrix_element(F, lam, big, fld), source=lam, target=big)
    return tally.result()


def verify_vanishing_mechanism(nmax: int = 5) -> Check:
    """Adding a right neighbour before its left neighbour puts a zero kernel factor in the numerator."""
    tally = Tally("shuffle:vanishing-mechanism", "an invalid adding order is killed by a vanishing kernel factor")
    for i in range(1, nmax + 1):
        for j in range(1, nmax + 1 - i):
            tally.require(adjacent_pair_vanishes(i, j), box=[i, j])
    return tally.result()
