"""Symmetric functions over Q(q, t): m, p, e and Macdonald P bases.

Scalars live in a q,t field obtained from ``fld.qt_field()``; in exact mode
that is RatFun2 with variables named q and t.  Integer transition matrices
between the classical bases are built combinatorially per degree and
inverted once.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

import flint

from .fockrep import EXACT
from .partitions import Partition, dominance_order, dominates, is_vertical_strip, partitions_of
from .report import Check, Tally

BASES = ("m", "p", "e", "P")


# ---------------------------------------------------------------------------
# integer transition matrices


@lru_cache(maxsize=None)
def p_in_m(n: int) -> dict:
    """p_lam = sum_mu M[lam][mu] m_mu."""
    out = {}
    for lam in partitions_of(n):
        out[lam] = {}
        for mu in partitions_of(n):
            c = _count_distributions(tuple(lam), tuple(mu))
            if c:
                out[lam][mu] = c
    return out


def _count_distributions(parts: tuple, caps: tuple) -> int:
    # ways to send each part to a row so that row sums are exactly caps
    @lru_cache(maxsize=None)
    def rec(k, rem):
        if k == len(parts):
            return 1 if not any(rem) else 0
        total = 0
        for i, r in enumerate(rem):
            if r >= parts[k]:
                total += rec(k + 1, rem[:i] + (r - parts[k],) + rem[i + 1:])
        return total

    return rec(0, caps)


@lru_cache(maxsize=None)
def e_in_m(n: int) -> dict:
    """e_lam = sum_mu M[lam][mu] m_mu (0/1 matrices with row sums lam, column sums mu)."""
    out = {}
    for lam in partitions_of(n):
        out[lam] = {}
        for mu in partitions_of(n):
            c = _count_01(tuple(lam), tuple(mu))
            if c:
                out[lam][mu] = c
    return out


def _count_01(rows: tuple, cols: tuple) -> int:
    from itertools import combinations

    @lru_cache(maxsize=None)
    def rec(k, rem):
        if k == len(rows):
            return 1 if not any(rem) else 0
        live = [i for i, r in enumerate(rem) if r > 0]
        total = 0
        for S in combinations(live, rows[k]):
            nxt = list(rem)
            for i in S:
                nxt[i] -= 1
            total += rec(k + 1, tuple(nxt))
        return total

    return rec(0, cols)


def _invert(table: dict, n: int) -> dict:
    """Inverse of a transition table {lam: {mu: c}}; rational entries."""
    parts = partitions_of(n)
    idx = {p: i for i, p in enumerate(parts)}
    M = flint.fmpq_mat(len(parts), len(parts))
    for lam, row in table.items():
        for mu, c in row.items():
            M[idx[lam], idx[mu]] = c
    inv = M.inv()
    out = {}
    for a, mu in enumerate(parts):
        row = {}
        for b, lam in enumerate(parts):
            v = inv[a, b]
            if v != 0:
                row[lam] = Fraction(int(v.p), int(v.q))
        out[mu] = row
    return out


@lru_cache(maxsize=None)
def m_in_p(n: int) -> dict:
    return _invert(p_in_m(n), n)


@lru_cache(maxsize=None)
def m_in_e(n: int) -> dict:
    return _invert(e_in_m(n), n)


def z_factor(lam: Partition) -> int:
    """prod_r r^{m_r} m_r!"""
    out = 1
    for r, m in Partition(lam).multiplicities().items():
        out *= r**m * factorial(m)
    return out


# ---------------------------------------------------------------------------
# symmetric functions


class SymFun:
    """Finite linear combination of basis elements indexed by partitions."""

    __slots__ = ("basis", "coeffs", "fld")

    def __init__(self, basis: str, coeffs: dict, fld):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.coeffs = {Partition(k): v for k, v in coeffs.items() if v != 0}
        self.fld = fld

    @classmethod
    def basis_element(cls, basis: str, lam, fld) -> "SymFun":
        return cls(basis, {Partition(lam): fld.one}, fld)

    def __add__(self, other: "SymFun") -> "SymFun":
        other = other.to(self.basis) if other.basis != self.basis else other
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out[k] + v if k in out else v
        return SymFun(self.basis, out, self.fld)

    def __sub__(self, other: "SymFun") -> "SymFun":
        return self + other.scale(-1)

    def scale(self, c) -> "SymFun":
        return SymFun(self.basis, {k: v * c for k, v in self.coeffs.items()}, self.fld)

    def __eq__(self, other):
        if not isinstance(other, SymFun):
            return NotImplemented
        if other.basis != self.basis:
            other = other.to(self.basis)
        return self.coeffs == other.coeffs

    def degrees(self) -> set[int]:
        return {k.size for k in self.coeffs}

    def __mul__(self, other: "SymFun") -> "SymFun":
        a, b = self.to("p"), other.to("p")
        out: dict = {}
        for k1, v1 in a.coeffs.items():
            for k2, v2 in b.coeffs.items():
                k = Partition(sorted(k1 + k2, reverse=True))
                out[k] = out[k] + v1 * v2 if k in out else v1 * v2
        return SymFun("p", out, self.fld)

    def to(self, basis: str, table: "MacdonaldTable | None" = None) -> "SymFun":
        if basis == self.basis:
            return self
        if "P" in (basis, self.basis) and table is None:
            table = macdonald_table(max(self.degrees(), default=0), self.fld)
        m = self._to_m(table)
        return _from_m(m, basis, table, self.fld)

    def _to_m(self, table) -> dict:
        if self.basis == "m":
            return dict(self.coeffs)
        out: dict = {}
        for lam, c in self.coeffs.items():
            if self.basis == "p":
                row = {mu: self.fld.const(x) for mu, x in p_in_m(lam.size)[lam].items()}
            elif self.basis == "e":
                row = {mu: self.fld.const(x) for mu, x in e_in_m(lam.size)[lam].items()}
            else:
                row = table.P(lam)
            for mu, x in row.items():
                out[mu] = out[mu] + c * x if mu in out else c * x
        return out

    def to_text(self) -> str:
        items = sorted(self.coeffs.items(), key=lambda kv: (kv[0].size, tuple(-x for x in kv[0])))
        return " + ".join(f"({self.fld.to_string(v)})*{self.basis}{k.to_text()}" for k, v in items) or "0"


def _from_m(m: dict, basis: str, table, fld) -> SymFun:
    out: dict = {}
    if basis in ("p", "e"):
        for mu, c in m.items():
            row = (m_in_p if basis == "p" else m_in_e)(mu.size)[mu]
            for lam, x in row.items():
                v = c * fld.const(x)
                out[lam] = out[lam] + v if lam in out else v
        return SymFun(basis, out, fld)
    if basis == "m":
        return SymFun("m", m, fld)
    # P basis: peel off leading terms, largest in the total order first
    rest = {k: v for k, v in m.items() if v != 0}
    for n in sorted({k.size for k in rest}):
        for lam in reversed(table.order(n)):
            c = rest.get(lam)
            if c is None or c == 0:
                continue
            out[lam] = c
            for mu, x in table.P(lam).items():
                v = rest.get(mu, fld.zero) - c * x
                if v == 0:
                    rest.pop(mu, None)
                else:
                    rest[mu] = v
    if any(v != 0 for v in rest.values()):
        raise ArithmeticError("element is not in the span of the Macdonald table")
    return SymFun("P", out, fld)


def power_weight(lam: Partition, fld):
    """z_lam * prod (1 - q^{lam_i}) / (1 - t^{lam_i})."""
    w = fld.const(z_factor(lam))
    for r in lam:
        w = w * fld.binom(r, 0) / fld.binom(0, r)
    return w


def inner_product(f: SymFun, g: SymFun):
    """Macdonald inner product; p_lam are orthogonal with weight power_weight."""
    fld = f.fld
    a, b = f.to("p"), g.to("p")
    out = fld.zero
    for lam, x in a.coeffs.items():
        y = b.coeffs.get(lam)
        if y is not None:
            out = out + x * y * power_weight(lam, fld)
    return out


# ---------------------------------------------------------------------------
# Macdonald polynomials


class MacdonaldTable:
    """P_lam in the m basis for all |lam| <= degree, by Gram-Schmidt.

    The m basis of each degree is orthogonalized along a total order that
    refines dominance, smallest first.
    """

    def __init__(self, degree: int, fld, tiebreak: str = "revlex"):
        self.degree = degree
        self.fld = fld
        self.tiebreak = tiebreak
        self._orders = {n: dominance_order(n, tiebreak) for n in range(degree + 1)}
        self._P: dict = {}
        self._norms: dict = {}
        for n in range(degree + 1):
            self._build(n)

    def order(self, n: int) -> list[Partition]:
        return self._orders[n]

    def P(self, lam) -> dict:
        lam = Partition(lam)
        if lam.size > self.degree:
            raise ValueError(f"{lam.to_text()} is beyond the table degree {self.degree}")
        return self._P[lam]

    def norm(self, lam):
        return self._norms[Partition(lam)]

    def symfun(self, lam) -> SymFun:
        return SymFun("m", self.P(lam), self.fld)

    def _build(self, n: int):
        fld = self.fld
        parts = self._orders[n]
        gram = _m_gram(n, fld)
        for lam in parts:
            vec = {lam: fld.one}
            for mu in parts:
                if mu == lam:
                    break
                pm = self._P[mu]
                ip = fld.zero
                for nu, x in pm.items():
                    ip = ip + x * gram[lam][nu]
                if ip == 0:
                    continue
                c = ip / self._norms[mu]
                for nu, x in pm.items():
                    v = vec.get(nu, fld.zero) - c * x
                    if v == 0:
                        vec.pop(nu, None)
                    else:
                        vec[nu] = v
            self._P[lam] = vec
            nrm = fld.zero
            for a, x in vec.items():
                for b, y in vec.items():
                    g = gram[a][b]
                    if g != 0:
                        nrm = nrm + x * y * g
            self._norms[lam] = nrm


def _m_gram(n: int, fld) -> dict:
    """(m_a, m_b) for all partitions of n."""
    parts = partitions_of(n)
    mp = m_in_p(n)
    w = {lam: power_weight(lam, fld) for lam in parts}
    out = {a: {} for a in parts}
    for i, a in enumerate(parts):
        for b in parts[i:]:
            v = fld.zero
            for lam, x in mp[a].items():
                y = mp[b].get(lam)
                if y is not None:
                    v = v + w[lam] * fld.const(x * y)
            out[a][b] = v
            out[b][a] = v
    return out


_TABLES: dict = {}


def macdonald_table(degree: int, fld, tiebreak: str = "revlex") -> MacdonaldTable:
    """Cached table; a larger cached table serves smaller requests."""
    for (d, f, tb), t in _TABLES.items():
        if f == fld and tb == tiebreak and d >= degree:
            return t
    t = MacdonaldTable(degree, fld, tiebreak)
    _TABLES[(degree, fld, tiebreak)] = t
    return t


def macdonald_P(lam, table: MacdonaldTable) -> SymFun:
    return table.symfun(lam)


# ---------------------------------------------------------------------------
# Pieri coefficients


def _factor(fld, a: int, b: int):
    # 1 - q^a t^b
    return fld.binom(a, b)


def pieri_coeff(lam, mu, fld):
    """psi_{lam/mu}: coefficient of P_lam in P_mu e_r; zero unless lam/mu is a vertical strip."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size < mu.size or not is_vertical_strip(lam, mu):
        return fld.zero
    out = fld.one
    L = len(lam)
    for i in range(1, L + 1):
        if lam.row(i) != mu.row(i):
            continue
        for j in range(i + 1, L + 1):
            if lam.row(j) != mu.row(j) + 1:
                continue
            a = mu.row(i) - mu.row(j)
            b = lam.row(i) - lam.row(j)
            out = out * _factor(fld, a, j - i - 1) * _factor(fld, b, j - i + 1)
            out = out / (_factor(fld, a, j - i) * _factor(fld, b, j - i))
    return out


def pieri_single(mu, j: int, fld):
    """psi_{mu+j/mu} from the single-box product over rows above j."""
    mu = Partition(mu)
    out = fld.one
    for i in range(1, j):
        a = mu.row(i) - mu.row(j)
        out = out * _factor(fld, a, j - i - 1) * _factor(fld, a - 1, j - i + 1)
        out = out / (_factor(fld, a, j - i) * _factor(fld, a - 1, j - i))
    return out


def verify_orthogonality(degree: int = 5, fld=None) -> list[Check]:
    fld = fld or EXACT.qt_field()
    table = macdonald_table(degree, fld)
    orth = Tally("macdonald:orthogonality", "distinct Macdonald polynomials are orthogonal")
    tri = Tally("macdonald:unitriangular", "P_lam is m_lam plus terms dominated by lam")
    for n in range(degree + 1):
        gram = _m_gram(n, fld)
        parts = partitions_of(n)
        for lam in parts:
            P = table.P(lam)
            tri.require(P.get(lam) == fld.one, partition=lam, problem="leading coefficient")
            for mu in P:
                tri.require(dominates(lam, mu), partition=lam, term=mu, problem="term not dominated")
        for i, a in enumerate(parts):
            for b in parts[i + 1:]:
                v = fld.zero
                for x, cx in table.P(a).items():
                    for y, cy in table.P(b).items():
                        g = gram[x][y]
                        if g != 0:
                            v = v + cx * cy * g
                orth.compare(v, fld.zero, left=a, right=b)
    return [orth.result(), tri.result()]


def verify_tiebreak(degree: int = 6, fld=None) -> Check:
    fld = fld or EXACT.qt_field()
    tally = Tally("macdonald:tie-break", "P_lam does not depend on how dominance ties are broken")
    a = MacdonaldTable(degree, fld, "revlex")
    b = MacdonaldTable(degree, fld, "conjugate")
    for n in range(degree + 1):
        for lam in partitions_of(n):
            tally.compare(a.P(lam), b.P(lam), partition=lam)
    return tally.result()


def verify_pieri(degree: int = 5, fld=None) -> Check:
    """P_mu e_r expanded in the P basis reproduces pieri_coeff."""
    fld = fld or EXACT.qt_field()
    table = macdonald_table(degree, fld)
    tally = Tally("macdonald:pieri", "P_mu e_r = sum over vertical r-strips of psi P_lam")
    for n in range(degree):
        for mu in partitions_of(n):
            Pmu = table.symfun(mu)
            for r in range(1, degree - n + 1):
                prod = (Pmu * SymFun.basis_element("e", (r,), fld)).to("P", table)
                for lam in partitions_of(n + r):
                    tally.compare(prod.coeffs.get(lam, fld.zero), pieri_coeff(lam, mu, fld), mu=mu, r=r, lam=lam)
    return tally.result()


def verify_pieri_single(degree: int = 6, fld=None) -> Check:
    """The strip product agrees with the single-box product for one-box strips."""
    fld = fld or EXACT.qt_field()
    tally = Tally("macdonald:pieri-single-box", "the strip formula specializes to the single-box formula")
    for n in range(degree):
        for mu in partitions_of(n):
            for j in range(1, len(mu) + 2):
                if j > 1 and mu.row(j - 1) == mu.row(j):
                    continue
                lam = mu.add_box(j)
                tally.compare(pieri_coeff(lam, mu, fld), pieri_single(mu, j, fld), mu=mu, row=j)
    return tally.result()


# ---------------------------------------------------------------------------
# e in terms of p


def newton_e_from_p(N: int) -> list[dict]:
    """e_1..e_N in the p basis by expanding exp(sum (-1)^{i-1} p_i z^i / i)."""
    # series coefficients: dict degree -> {partition: Fraction}
    S = {i: {Partition((i,)): Fraction((-1) ** (i - 1), i)} for i in range(1, N + 1)}
    result = {0: {Partition(): Fraction(1)}}
    power = {0: {Partition(): Fraction(1)}}
    for k in range(1, N + 1):
        power = _series_times(power, S, N)
        for d, poly in power.items():
            acc = result.setdefault(d, {})
            for lam, c in poly.items():
                acc[lam] = acc.get(lam, 0) + c / factorial(k)
    return [{k: v for k, v in result.get(n, {}).items() if v} for n in range(1, N + 1)]


def _series_times(a: dict, b: dict, N: int) -> dict:
    out: dict = {}
    for da, pa in a.items():
        for db, pb in b.items():
            if da + db > N:
                continue
            acc = out.setdefault(da + db, {})
            for l1, c1 in pa.items():
                for l2, c2 in pb.items():
                    k = Partition(sorted(l1 + l2, reverse=True))
                    acc[k] = acc.get(k, 0) + c1 * c2
    return out


def e_from_p_recursion(N: int) -> list[dict]:
    """e_1..e_N in the p basis from n e_n = sum_{i=1}^n (-1)^{i-1} e_{n-i} p_i."""
    es = [{Partition(): Fraction(1)}]
    for n in range(1, N + 1):
        acc: dict = {}
        for i in range(1, n + 1):
            for lam, c in es[n - i].items():
                k = Partition(sorted(lam + (i,), reverse=True))
                acc[k] = acc.get(k, 0) + Fraction((-1) ** (i - 1), n) * c
        es.append({k: v for k, v in acc.items() if v})
    return es[1:]


def verify_newton(N: int = 8) -> Check:
    tally = Tally("macdonald:newton", "1 + sum e_i z^i = exp(sum (-1)^{i-1} p_i z^i / i)")
    a, b = newton_e_from_p(N), e_from_p_recursion(N)
    for n in range(N):
        tally.compare(a[n], b[n], degree=n + 1, route="exponential vs recursion")
        # third route: the inverse of the combinatorial p -> e transition
        # e_n = m_{1^n}
        viap = m_in_p(n + 1)[Partition((1,) * (n + 1))]
        tally.compare(a[n], viap, degree=n + 1, route="exponential vs transition matrices")
    return tally.result()


def verify_conversions(N: int = 8) -> Check:
    """m -> p -> m and m -> e -> m are identities."""
    tally = Tally("symfun:basis-round-trip", "conversions between the m, p and e bases are mutually inverse")
    for n in range(N + 1):
        for inv, fwd, name in ((m_in_p(n), p_in_m(n), "p"), (m_in_e(n), e_in_m(n), "e")):
            for mu in partitions_of(n):
                back: dict = {}
                for lam, c in inv[mu].items():
                    for nu, x in fwd[lam].items():
                        back[nu] = back.get(nu, 0) + c * x
                tally.compare({k: v for k, v in back.items() if v}, {mu: 1}, degree=n, partition=mu, via=name)
    return tally.result()
