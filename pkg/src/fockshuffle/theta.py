"""Normalized fixed-point basis and its match with Macdonald polynomials.

The normalized vectors are <lam> = c_lam [lam].  In that basis the
renormalized operators K~_n = K_n / (d_1 ... d_n) act like multiplication
by e_n on Macdonald polynomials once q = t1 and t = 1/t2.  The positive
Heisenberg generators are read off from log(1 + sum K~_n z^n).
"""

from __future__ import annotations

from functools import lru_cache

from .fockrep import EXACT, GradedOperator
from .partitions import Partition, arm, is_vertical_strip, leg, partitions_of
from .report import Check, Tally
from .shufflealg import k_element, shuffle_operator
from .symfun import SymFun, macdonald_table, pieri_coeff, pieri_single


def specialize_qt(x, fld=EXACT):
    """q -> t1, t -> 1/t2 (identity in sampled mode, where the q,t field already sits there)."""
    return fld.specialize_qt(x)


@lru_cache(maxsize=None)
def c_norm(lam, fld=EXACT):
    """c_lam = (-t2/(1-t2))^{-|lam|} t1^{sum lam_i(lam_i-1)/2} / prod (1 - t1^{leg} t2^{-arm-1})."""
    lam = Partition(lam)
    # -t2/(1-t2) inverted is -(1-t2)/t2
    base = fld.binom(0, 1) * fld.mono(0, -1) * fld.const(-1)
    out = base ** lam.size if lam.size else fld.one
    out = out * fld.mono(sum(p * (p - 1) // 2 for p in lam), 0)
    for box in lam.boxes():
        out = out / fld.binom(leg(lam, box), -arm(lam, box) - 1)
    return out


def c_ratio_closed(lam, j: int, fld=EXACT):
    """c_{lam+j} / c_lam as a finite product.

    The product over rows below j runs over every row; past the last
    nonzero row its factors telescope, and the limit of the tail is
    1 / (1 - t1^{-lam_j} t2^{s-j}) with s the first row where the
    telescoping starts.
    """
    lam = Partition(lam)
    lj = lam.row(j)
    s = max(len(lam), j) + 1
    out = fld.binom(0, 1)
    for i in range(j + 1, s):
        d = lam.row(i) - lj
        out = out * fld.binom(d, i - j + 1) / fld.binom(d, i - j)
    out = out / fld.binom(-lj, s - j)
    for i in range(1, j):
        d = lam.row(i) - lj - 1
        out = out * fld.binom(d, i - j) / fld.binom(d, i - j - 1)
    return out


def c_ratio_check(lam, j: int, fld=EXACT) -> Check:
    lam = Partition(lam)
    tally = Tally(f"c-ratio[{lam.to_text()},{j}]", "c_{lam+j}/c_lam equals the telescoped row product")
    big = lam.add_box(j)
    tally.compare(c_norm(big, fld) / c_norm(lam, fld), c_ratio_closed(lam, j, fld), lam=lam, row=j)
    return tally.result()


def verify_c_ratio(nmax: int = 6, fld=EXACT) -> Check:
    tally = Tally("c-ratio", "c_{lam+j}/c_lam equals the telescoped row product")
    for n in range(nmax):
        for lam in partitions_of(n):
            for j in range(1, len(lam) + 2):
                if j > 1 and lam.row(j - 1) == lam.row(j):
                    continue
                big = lam.add_box(j)
                tally.compare(c_norm(big, fld) / c_norm(lam, fld), c_ratio_closed(lam, j, fld), lam=lam, row=j)
    return tally.result()


def d_factor(n: int, fld=EXACT):
    """(-t1)^{n-1} / ((1-t1)(1-t2))."""
    if n < 1:
        raise ValueError("n must be positive")
    return fld.const((-1) ** (n - 1)) * fld.mono(n - 1, 0) / (fld.binom(1, 0) * fld.binom(0, 1))


def normalize(op: GradedOperator, fld=EXACT) -> GradedOperator:
    """Matrix of op in the <lam> basis: O<mu,lam> = O[mu,lam] c_mu / c_lam."""
    blocks = {}
    for src, row in op.blocks.items():
        cs = c_norm(src, fld)
        blocks[src] = {tgt: v * cs / c_norm(tgt, fld) for tgt, v in row.items()}
    return GradedOperator(op.shift, blocks, op.degrees)


def k_tilde_matrix(n: int, nmax: int, fld=EXACT) -> GradedOperator:
    """K_n / (d_1 ... d_n) in the normalized basis, on targets of size <= nmax."""
    return _k_tilde(n, nmax, fld)


@lru_cache(maxsize=None)
def _k_tilde(n, nmax, fld):
    d = fld.one
    for k in range(1, n + 1):
        d = d * d_factor(k, fld)
    return normalize(shuffle_operator(k_element(n), nmax, fld), fld).scale(fld.one / d)


def verify_theta(n: int, nmax: int = 6, fld=EXACT) -> Check:
    """K~_n<mu,lam> equals the specialized Pieri coefficient, and vanishes off vertical strips."""
    qt = fld.qt_field()
    tally = Tally(f"theta:K{n}", "normalized K~_n acts as multiplication by e_n on Macdonald polynomials")
    op = k_tilde_matrix(n, nmax, fld)
    for size in range(0, nmax - n + 1):
        for mu in partitions_of(size):
            col = op.column(mu)
            for lam in partitions_of(size + n):
                lhs = col.get(lam, fld.zero)
                if is_vertical_strip(lam, mu):
                    rhs = specialize_qt(pieri_coeff(lam, mu, qt), fld)
                else:
                    rhs = fld.zero
                tally.compare(lhs, rhs, mu=mu, lam=lam)
    return tally.result()


def verify_single_box_edges(nmax: int = 6, fld=EXACT) -> Check:
    """(1-t1)(1-t2) K_1<lam,lam+j> equals the specialized single-box Pieri coefficient."""
    qt = fld.qt_field()
    tally = Tally("theta:K1-edges", "(1-t1)(1-t2) K_1 in the normalized basis matches the single-box Pieri coefficient")
    op = normalize(shuffle_operator(k_element(1), nmax, fld), fld)
    scale = fld.binom(1, 0) * fld.binom(0, 1)
    for size in range(nmax):
        for lam in partitions_of(size):
            for j in range(1, len(lam) + 2):
                if j > 1 and lam.row(j - 1) == lam.row(j):
                    continue
                big = lam.add_box(j)
                tally.compare(scale * op.entry(lam, big), specialize_qt(pieri_single(lam, j, qt), fld), lam=lam, row=j)
    return tally.result()


# ---------------------------------------------------------------------------
# Heisenberg half


def heisenberg_plus(i: int, nmax: int, fld=EXACT) -> GradedOperator:
    """h_i from the K~ series via p_n = (-1)^{n-1} n e_n + sum_{k<n} (-1)^{n-1+k} e_{n-k} p_k."""
    return _heis(i, nmax, fld)


@lru_cache(maxsize=None)
def _heis(n, nmax, fld):
    if n < 1:
        raise ValueError("i must be positive")
    out = k_tilde_matrix(n, nmax, fld).scale(fld.const((-1) ** (n - 1) * n))
    for k in range(1, n):
        term = k_tilde_matrix(n - k, nmax, fld).compose(heisenberg_plus(k, nmax - (n - k), fld))
        term = term.scale(fld.const((-1) ** (n - 1 + k)))
        out = out.restrict(term.degrees) + term
    return out


def _commutator(a: GradedOperator, b: GradedOperator, degrees) -> GradedOperator:
    return (a.compose(b.restrict(degrees)) - b.compose(a.restrict(degrees))).restrict(degrees)


def verify_heisenberg_commute(imax: int = 3, nmax: int = 5, fld=EXACT) -> Check:
    tally = Tally("heisenberg:commute", "the positive Heisenberg generators commute")
    for i in range(1, imax + 1):
        for j in range(i + 1, imax + 1):
            hi, hj = heisenberg_plus(i, nmax, fld), heisenberg_plus(j, nmax, fld)
            degrees = range(0, nmax - i - j + 1)
            lhs = hi.compose(hj.restrict(degrees))
            rhs = hj.compose(hi.restrict(degrees))
            tally.count += lhs.count_entries(rhs)
            d = lhs.first_difference(rhs)
            if d:
                tally.fail(i=i, j=j, source=d[0], target=d[1], lhs=d[2], rhs=d[3])
    return tally.result()


def p_multiplication(i: int, nmax: int, fld=EXACT) -> dict:
    """Coefficients of P_lam in p_i P_mu, specialized to t1, t2: {mu: {lam: value}}."""
    qt = fld.qt_field()
    table = macdonald_table(nmax, qt)
    pi = SymFun.basis_element("p", (i,), qt)
    out = {}
    for size in range(0, nmax - i + 1):
        for mu in partitions_of(size):
            prod = (table.symfun(mu) * pi).to("P", table)
            out[mu] = {lam: specialize_qt(v, fld) for lam, v in prod.coeffs.items()}
    return out


def verify_intertwining(imax: int = 3, nmax: int = 5, fld=EXACT) -> Check:
    """h_i in the normalized basis matches p_i multiplication in the Macdonald basis.

    An overall scalar per i is measured from the first nonzero entry and
    reported; the check requires every entry to agree with that scalar.
    """
    tally = Tally("heisenberg:intertwining", "h_i in the normalized basis equals multiplication by p_i on Macdonald polynomials")
    scalars = {}
    for i in range(1, imax + 1):
        h = heisenberg_plus(i, nmax, fld)
        pm = p_multiplication(i, nmax, fld)
        scalar = None
        for size in range(0, nmax - i + 1):
            for mu in partitions_of(size):
                a, b = h.column(mu), pm[mu]
                for lam in partitions_of(size + i):
                    x, y = a.get(lam, fld.zero), b.get(lam, fld.zero)
                    if scalar is None and y != 0:
                        scalar = x / y
                    tally.compare(x, (scalar if scalar is not None else fld.one) * y, i=i, mu=mu, lam=lam)
        scalars[str(i)] = fld.to_string(scalar) if scalar is not None else None
    tally.info["scalar"] = scalars
    return tally.result()
