from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fockshuffle.exact import LaurentPoly, RatFun2, SampledField
from fockshuffle.fockrep import FockVector, apply_e, e_coeff
from fockshuffle.partitions import Partition, add_rows, is_vertical_strip, partitions_of
from fockshuffle.shufflealg import (
    ShuffleElement,
    act_shuffle,
    constant_one,
    generator,
    is_symmetric,
    k_element,
    shuffle_matrix_element,
    star_product,
    unit,
    verify_homomorphism,
    verify_k_commute,
    verify_order_independence,
    wheel_check,
)

P = Partition
T1 = RatFun2.mono(1, 0)
T2 = RatFun2.mono(0, 1)


def xvar(i, n):
    # variables are x1..xn followed by t1, t2
    return LaurentPoly.variable(i, n + 2)


def tvar(k, n):
    return LaurentPoly.variable(n + k, n + 2)


def test_unit():
    g = generator(1)
    assert star_product(unit(), g) == g
    assert star_product(g, unit()) == g


def test_x0_squared():
    x1, x2, t1, t2 = xvar(0, 2), xvar(1, 2), tvar(0, 2), tvar(1, 2)
    sigma1 = t1 + t2 + (t1 * t2) ** -1
    sigma2 = t1 * t2 + t1**-1 + t2**-1
    expected = 2 * (x1 * x1 + x2 * x2) + (2 - sigma1 - sigma2) * x1 * x2
    g = generator(0)
    assert star_product(g, g).num == expected


def test_k_elements():
    assert k_element(1).num == LaurentPoly.constant(1, 3)
    z1, z2, t1 = xvar(0, 2), xvar(1, 2), tvar(0, 2)
    assert k_element(2).num == (z1 - t1 * z2) * (z2 - t1 * z1)
    n = 3
    xs = [xvar(i, n) for i in range(n)]
    t1 = tvar(0, n)
    expected = LaurentPoly.constant(1, n + 2)
    for i, j in combinations(range(n), 2):
        expected = expected * (xs[i] - t1 * xs[j]) * (xs[j] - t1 * xs[i])
    assert k_element(3).num == expected


def test_wheel_examples():
    g0 = generator(0)
    assert wheel_check(star_product(star_product(g0, g0), g0))
    assert not wheel_check(constant_one(3))
    gens = [generator(1), generator(0), generator(-1)]
    for a, b, c in [(0, 1, 2), (2, 1, 0), (1, 0, 2)]:
        assert wheel_check(star_product(star_product(gens[a], gens[b]), gens[c]))


def test_asymmetric_rejected():
    with pytest.raises(AssertionError):
        ShuffleElement(2, xvar(0, 2))


def test_k1_is_e0():
    for lam in partitions_of(3):
        v = act_shuffle(k_element(1), FockVector.basis(lam))
        assert v == apply_e(0, FockVector.basis(lam))


def test_zero_vector():
    assert act_shuffle(k_element(2), FockVector()).is_zero()


def _kn_closed(lam, rows):
    """Product formula for K_n on lam + rows (rows increasing), e_0 chain included."""
    chis = [T1 ** lam.row(i) * T2 ** (i - 1) for i in rows]
    out = RatFun2.const(1)
    for a, b in combinations(range(len(rows)), 2):
        ca, cb = chis[a], chis[b]
        out = out * (ca - cb) * (cb - T1 * ca) / ((ca - T2 * cb) * (ca - cb / (T1 * T2)))
    cur = lam
    for k in rows:
        out = out * e_coeff(cur, k, 0)
        cur = cur.add_box(k)
    return out


@pytest.mark.parametrize("n", [2, 3])
def test_kn_closed_formula(n):
    K = k_element(n)
    for size in range(0, 6 - n):
        for lam in partitions_of(size):
            for big in partitions_of(size + n):
                if not all(big.row(i) >= lam.row(i) for i in range(1, len(big) + 1)):
                    continue
                val = shuffle_matrix_element(K, lam, big)
                if is_vertical_strip(big, lam):
                    rows = [i for i in range(1, len(big) + 1) if big.row(i) > lam.row(i)]
                    assert add_rows(lam, rows) == big
                    assert val == _kn_closed(lam, rows), (lam, big)
                else:
                    assert val == 0, (lam, big)


def test_k2_vacuum_to_column():
    # chi_1 = 1, chi_2 = t2
    assert shuffle_matrix_element(k_element(2), P(), P((1, 1))) == _kn_closed(P(), [1, 2])
    assert shuffle_matrix_element(k_element(2), P(), P((2,))) == 0


@pytest.mark.parametrize("F,G", [(generator(0), generator(0)), (generator(1), generator(-1)), (k_element(2), k_element(1))])
def test_homomorphism_examples(F, G):
    assert verify_homomorphism(F, G, 4).passed


@pytest.mark.parametrize("m,n", [(1, 2), (2, 2), (1, 3)])
def test_k_commute_examples(m, n):
    assert verify_k_commute(m, n, 4).passed


def test_order_independence_k3():
    assert verify_order_independence(k_element(3), 4).passed


def test_sampled_matches_exact():
    fld = SampledField.from_seed(5)
    K = k_element(2)
    for lam in partitions_of(2):
        for big in partitions_of(4):
            a = shuffle_matrix_element(K, lam, big, fld)
            if a == 0:
                continue
            assert a == shuffle_matrix_element(K, lam, big).evaluate(fld.t1, fld.t2)


gens = st.sampled_from([-1, 0, 1]).map(generator)


@given(gens, gens)
@settings(max_examples=9)
def test_product_symmetric_and_graded(F, G):
    H = star_product(F, G)
    assert H.arity == 2
    assert is_symmetric(H.num, 2)
    assert wheel_check(star_product(H, generator(0)))


@given(gens, gens, st.integers(-3, 3))
@settings(max_examples=15)
def test_bilinear(F, G, c):
    assert star_product(F.scale(c), G) == star_product(F, G).scale(c)
    assert star_product(F + G, G) == star_product(F, G) + star_product(G, G)
